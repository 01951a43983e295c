#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "genpos/geodesy.hpp"
#include "genpos/graph.hpp"

namespace genpos {

enum class Direction { nondecreasing, nonincreasing };

// Result of a monotone extraction.  indices point into the input list.  For
// subsequence extraction they are strictly increasing; for point-set
// extraction they are listed in the extracted monotone order, which need not
// follow input order because sets carry none.
struct MonotoneWitness {
    std::vector<int> indices;
    std::vector<Direction> directions; // one entry per coordinate
};

enum class LabelingVerdict { monotone_geodesic, violated };

struct LabelingCertificate {
    LabelingVerdict verdict = LabelingVerdict::monotone_geodesic;
    // Present iff violated: ids ascending, labels monotone under some
    // ordering yet the vertices share no geodesic.  First such triple in
    // lexicographic id order.
    std::optional<std::array<int, 3>> counterexample;
};

// Monotonicity is non-strict throughout: ties are allowed, and each
// coordinate picks its direction independently.
inline bool is_monotone(const std::vector<std::vector<int>>& points) {
    if (points.size() < 2) return true;
    std::size_t dim = points[0].size();
    for (std::size_t c = 0; c < dim; ++c) {
        bool up = true, down = true;
        for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            if (points[i][c] > points[i + 1][c]) up = false;
            if (points[i][c] < points[i + 1][c]) down = false;
        }
        if (!up && !down) return false;
    }
    return true;
}

namespace detail {

struct FenwickMax {
    int n = 0;
    std::vector<int> tree; // values are lengths, 0 = empty

    explicit FenwickMax(int size) : n(size), tree(size + 1, 0) {}

    void update(int i, int val) {
        for (++i; i <= n; i += i & -i) tree[i] = std::max(tree[i], val);
    }
    int prefix_max(int i) const {
        int m = 0;
        for (++i; i > 0; i -= i & -i) m = std::max(m, tree[i]);
        return m;
    }
};

// len[i] = longest non-decreasing run starting at i (values as given; negate
// for non-increasing).  Computed right to left with a max Fenwick over value
// ranks, so runs in O(N log N).
inline std::vector<int> chain_lengths(const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    std::vector<int> sorted(a);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    int ranks = static_cast<int>(sorted.size());
    auto rank = [&](int v) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    };
    FenwickMax fen(ranks); // indexed by reversed rank: prefix = "values >= v"
    std::vector<int> len(n);
    for (int i = n - 1; i >= 0; --i) {
        int rr = ranks - 1 - rank(a[i]);
        len[i] = 1 + fen.prefix_max(rr);
        fen.update(rr, len[i]);
    }
    return len;
}

// Lexicographically smallest index set of a maximum chain, rebuilt greedily
// from the length table.
inline std::vector<int> chain_indices(const std::vector<int>& a, const std::vector<int>& len,
                                      bool nondecreasing) {
    int need = *std::max_element(len.begin(), len.end());
    std::vector<int> idx;
    idx.reserve(need);
    long long last = nondecreasing ? std::numeric_limits<long long>::min()
                                   : std::numeric_limits<long long>::max();
    for (int i = 0; i < static_cast<int>(a.size()) && need > 0; ++i) {
        bool fits = nondecreasing ? a[i] >= last : a[i] <= last;
        if (len[i] == need && fits) {
            idx.push_back(i);
            last = a[i];
            --need;
        }
    }
    return idx;
}

} // namespace detail

// Longest non-strict monotone subsequence; a tie between directions goes to
// non-decreasing, and among equal-length witnesses the lexicographically
// smallest index set wins.
inline MonotoneWitness longest_monotone_subsequence(const std::vector<int>& seq) {
    if (seq.empty()) throw std::invalid_argument("longest_monotone_subsequence: empty input");
    auto up_len = detail::chain_lengths(seq);
    std::vector<int> neg(seq.size());
    std::transform(seq.begin(), seq.end(), neg.begin(), [](int v) { return -v; });
    auto down_len = detail::chain_lengths(neg);
    int up = *std::max_element(up_len.begin(), up_len.end());
    int down = *std::max_element(down_len.begin(), down_len.end());
    MonotoneWitness w;
    if (up >= down) {
        w.indices = detail::chain_indices(seq, up_len, true);
        w.directions = {Direction::nondecreasing};
    } else {
        w.indices = detail::chain_indices(neg, down_len, true);
        w.directions = {Direction::nonincreasing};
    }
    return w;
}

namespace detail {

inline Direction coord_direction(const std::vector<std::vector<int>>& pts, std::size_t c) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i][c] < pts[i + 1][c]) return Direction::nondecreasing;
        if (pts[i][c] > pts[i + 1][c]) return Direction::nonincreasing;
    }
    return Direction::nondecreasing; // constant coordinate
}

} // namespace detail

// Extracts a triple of points monotone in every coordinate, following the
// guarantee that (n-1)^2+1 points always contain a monotone run of n in one
// more coordinate: sort by coordinate 0, pull a run of 5 (then 3) out of the
// next coordinate, and for d=3 pull 3 out of the last.
inline MonotoneWitness monotone_point_triple(const std::vector<std::vector<int>>& points, int dim) {
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("monotone_point_triple: dimension must be 2 or 3");
    std::size_t minimum = dim == 2 ? 5 : 17;
    if (points.size() < minimum)
        throw std::invalid_argument("monotone_point_triple: too few points for a guaranteed triple");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("monotone_point_triple: wrong point dimension");

    std::vector<int> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return points[a][0] < points[b][0]; });

    auto extract = [&](const std::vector<int>& ids, std::size_t coord, std::size_t take) {
        std::vector<int> seq(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) seq[i] = points[ids[i]][coord];
        auto w = longest_monotone_subsequence(seq);
        // The guarantee makes the run long enough; a prefix stays monotone.
        w.indices.resize(take);
        std::vector<int> out(take);
        for (std::size_t i = 0; i < take; ++i) out[i] = ids[w.indices[i]];
        return out;
    };

    std::vector<int> picked = order;
    if (dim == 3) picked = extract(picked, 1, 5);
    picked = extract(picked, dim == 3 ? 2 : 1, 3);

    MonotoneWitness w;
    w.indices = picked;
    std::vector<std::vector<int>> triple{points[picked[0]], points[picked[1]], points[picked[2]]};
    for (int c = 0; c < dim; ++c) w.directions.push_back(detail::coord_direction(triple, c));
    return w;
}

// A label triple counts as monotone if some arrangement of it is monotone;
// the three candidate arrangements differ in which label sits in the middle.
inline bool monotone_under_some_order(const std::vector<int>& a, const std::vector<int>& b,
                                      const std::vector<int>& c) {
    return is_monotone({a, b, c}) || is_monotone({b, a, c}) || is_monotone({a, c, b});
}

// Tests the defining property of a monotone-geodesic labeling: every vertex
// triple whose labels are monotone under some ordering lies on a common
// geodesic.  O(n^3) over all triples; the cap keeps accidental large inputs
// out, raise it deliberately if needed.
inline LabelingCertificate check_monotone_geodesic_labeling(const Graph& g, const DistanceMatrix& d,
                                                            const Labeling& lab, int size_cap = 100) {
    if (g.n > size_cap)
        throw std::invalid_argument("check_monotone_geodesic_labeling: graph exceeds size cap");
    if (lab.dim != 2 || static_cast<int>(lab.coords.size()) != g.n)
        throw std::invalid_argument("check_monotone_geodesic_labeling: need a two-dimensional labeling");
    {
        auto sorted = lab.coords;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("check_monotone_geodesic_labeling: labeling is not injective");
    }
    LabelingCertificate cert;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            for (int w = v + 1; w < g.n; ++w) {
                if (!monotone_under_some_order(lab.at(u), lab.at(v), lab.at(w))) continue;
                if (!lies_on_common_geodesic(d, u, v, w)) {
                    cert.verdict = LabelingVerdict::violated;
                    cert.counterexample = {u, v, w};
                    return cert;
                }
            }
    cert.verdict = LabelingVerdict::monotone_geodesic;
    return cert;
}

} // namespace genpos
