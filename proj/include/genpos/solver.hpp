#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "genpos/detail/bits.hpp"
#include "genpos/geodesy.hpp"
#include "genpos/graph.hpp"

namespace genpos {

// Betweenness structure of a metric, one bitset per unordered vertex pair.
// between(a,c) holds every b with d(a,c) = d(a,b) + d(b,c), b distinct from
// both.  forbid(a,c) additionally includes vertices u for which a or c is
// the middle of {u,a,c}; a triple is collinear iff any member is between
// the other two, so forbid(a,c) is exactly the set of u that cannot join a
// general position set already containing a and c.
class BetweenStore {
public:
    BetweenStore(int n, std::vector<detail::Bitset> between, std::vector<detail::Bitset> forbid)
        : n_(n), between_(std::move(between)), forbid_(std::move(forbid)) {}

    int size() const { return n_; }

    const detail::Bitset& between(int a, int c) const { return between_[pair_index(a, c)]; }
    const detail::Bitset& forbid(int a, int c) const { return forbid_[pair_index(a, c)]; }

    std::size_t pair_index(int a, int c) const {
        if (a > c) std::swap(a, c);
        return static_cast<std::size_t>(a) * (2 * n_ - a - 1) / 2 + (c - a - 1);
    }

private:
    int n_ = 0;
    std::vector<detail::Bitset> between_;
    std::vector<detail::Bitset> forbid_;
};

inline BetweenStore enumerate_collinear_triples(const DistanceMatrix& d) {
    int n = d.n;
    std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<detail::Bitset> between(pairs, detail::Bitset(n));
    std::vector<detail::Bitset> forbid(pairs, detail::Bitset(n));
    std::size_t idx = 0;
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c, ++idx) {
            int dac = d.at(a, c);
            for (int u = 0; u < n; ++u) {
                if (u == a || u == c) continue;
                int dua = d.at(u, a), duc = d.at(u, c);
                if (dua + duc == dac) between[idx].set(u);
                if (dua + duc == dac || dua + dac == duc || duc + dac == dua)
                    forbid[idx].set(u);
            }
        }
    return BetweenStore(n, std::move(between), std::move(forbid));
}

enum class SolveStatus { optimal, lower_bound_only };

struct SolveOptions {
    std::vector<int> forced;                  // must appear in the witness
    std::optional<double> time_limit_seconds; // wall clock budget
    int initial_lower_bound = 0;              // caller-certified set size
    std::optional<int> known_upper;           // caller-certified upper bound
};

struct SolveResult {
    SolveStatus status = SolveStatus::optimal;
    int size = 0;
    std::vector<int> witness; // ascending ids; passes verify_general_position
    std::uint64_t nodes = 0;
};

namespace detail {

inline std::vector<int> branch_order(const Graph& g) {
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    return order;
}

struct GpSearch {
    const BetweenStore& store;
    const std::vector<int>& order;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    int stop_at;    // stop once this size is reached (trusted upper hint)
    int floor;      // prune against this even before a set that big is found
    std::vector<int> chosen;
    std::vector<int> best;
    std::uint64_t nodes = 0;
    bool expired = false;

    bool done() const {
        return expired || static_cast<int>(best.size()) >= stop_at;
    }

    void run(int pos, const Bitset& cands, int cand_count) {
        if (done()) return;
        if ((++nodes & 0xFFF) == 0 && deadline &&
            std::chrono::steady_clock::now() > *deadline) {
            expired = true;
            return;
        }
        if (static_cast<int>(chosen.size()) > static_cast<int>(best.size()))
            best = chosen;
        int beat = std::max(static_cast<int>(best.size()), floor);
        if (static_cast<int>(chosen.size()) + cand_count <= beat) return;
        int v = -1, i = pos;
        for (; i < static_cast<int>(order.size()); ++i)
            if (cands.test(order[i])) { v = order[i]; break; }
        if (v < 0) return;

        Bitset inc = cands;
        inc.reset(v);
        for (int w : chosen) inc.subtract(store.forbid(v, w));
        chosen.push_back(v);
        run(i + 1, inc, inc.count());
        chosen.pop_back();
        if (done()) return;

        Bitset exc = cands;
        exc.reset(v);
        run(i + 1, exc, cand_count - 1);
    }
};

} // namespace detail

// Scans candidates in seed order, keeping each vertex that stays collinear-
// free against everything already kept.  Output is sorted and always passes
// verify_general_position.
inline std::vector<int> greedy_gp_lower_bound(const Graph& g, const DistanceMatrix& d,
                                              std::vector<int> seed_order = {}) {
    if (seed_order.empty()) seed_order = detail::branch_order(g);
    if (static_cast<int>(seed_order.size()) != g.n)
        throw std::invalid_argument("greedy_gp_lower_bound: seed order must list every vertex");
    {
        auto check = seed_order;
        std::sort(check.begin(), check.end());
        for (int i = 0; i < g.n; ++i)
            if (check[i] != i)
                throw std::invalid_argument("greedy_gp_lower_bound: seed order is not a permutation");
    }
    std::vector<int> chosen;
    for (int v : seed_order) {
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i)
            for (std::size_t j = i + 1; j < chosen.size() && ok; ++j)
                if (lies_on_common_geodesic(d, chosen[i], chosen[j], v)) ok = false;
        if (ok) chosen.push_back(v);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// Exact maximum general position set by depth-first include/exclude search
// in a fixed vertex order (degree descending, then id).  Deterministic: the
// witness only depends on the graph.  A time limit downgrades the result to
// a lower bound; hints in the options are trusted as stated, never inferred.
inline SolveResult max_general_position(const Graph& g, const DistanceMatrix& d,
                                        const SolveOptions& opts = {}) {
    if (g.n > 400)
        throw std::invalid_argument("max_general_position: graph too large for exact search");
    SolveResult res;
    if (g.n == 0) return res;

    auto forced = detail::checked_set(d, opts.forced, "max_general_position");
    if (!forced.empty() &&
        verify_general_position(d, forced).verdict != GpVerdict::general_position)
        throw std::invalid_argument("max_general_position: forced set is not in general position");

    BetweenStore store = enumerate_collinear_triples(d);
    auto order = detail::branch_order(g);

    detail::Bitset cands(g.n);
    for (int v = 0; v < g.n; ++v) cands.set(v);
    for (int v : forced) cands.reset(v);
    for (std::size_t i = 0; i < forced.size(); ++i)
        for (std::size_t j = i + 1; j < forced.size(); ++j)
            cands.subtract(store.forbid(forced[i], forced[j]));

    // Greedy completion of the forced set doubles as the initial witness.
    std::vector<int> warm = forced;
    {
        for (int v : order)
            if (cands.test(v)) {
                bool ok = true;
                for (std::size_t i = 0; i < warm.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < warm.size() && ok; ++j)
                        if (lies_on_common_geodesic(d, warm[i], warm[j], v)) ok = false;
                if (ok) warm.push_back(v);
            }
    }

    detail::GpSearch search{
        store,
        order,
        std::nullopt,
        opts.known_upper ? *opts.known_upper : g.n + 1,
        std::max(opts.initial_lower_bound, 0),
        forced,
        warm,
    };
    if (opts.time_limit_seconds)
        search.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(*opts.time_limit_seconds));
    search.run(0, cands, cands.count());

    res.witness = search.best;
    std::sort(res.witness.begin(), res.witness.end());
    res.size = static_cast<int>(res.witness.size());
    res.nodes = search.nodes;
    bool certified = !search.expired && res.size >= opts.initial_lower_bound;
    if (opts.known_upper && res.size >= *opts.known_upper) certified = true;
    res.status = certified ? SolveStatus::optimal : SolveStatus::lower_bound_only;
    return res;
}

} // namespace genpos
