#pragma once

#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genpos/generators.hpp"
#include "genpos/graph.hpp"

namespace genpos {

enum class GpVerdict { general_position, violated };

struct GpCertificate {
    GpVerdict verdict = GpVerdict::general_position;
    // Present iff violated: (a, b, c) with d(a,c) = d(a,b) + d(b,c), endpoints
    // ascending.  It is the lexicographically first violating triple.
    std::optional<std::array<int, 3>> violating_triple;
    // Present only when a uniform separation scale exists (see
    // separation_witness); implies the verdict is general_position.
    std::optional<int> separation_k;
};

// Geodesic paths that share a root and jointly touch every vertex.
struct IsometricPathCover {
    int root = 0;
    std::vector<std::vector<int>> paths;
};

struct BoundReport {
    bool global = false;
    int root = -1;      // conditional root, or the maximising root for global
    int cover_paths = 0;
    int bound = 0;      // cover_paths + 1
};

namespace detail {

inline void check_vertex(const DistanceMatrix& d, int v, const char* who) {
    if (v < 0 || v >= d.n) throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

// b strictly between a and c: all distinct and d(a,c) = d(a,b) + d(b,c).
inline bool strictly_between(const DistanceMatrix& d, int a, int b, int c) {
    return d.at(a, c) == d.at(a, b) + d.at(b, c);
}

} // namespace detail

// True iff one of the three vertices lies on a geodesic between the other
// two, i.e. some ordering is distance-additive.
inline bool lies_on_common_geodesic(const DistanceMatrix& d, int a, int b, int c) {
    detail::check_vertex(d, a, "lies_on_common_geodesic");
    detail::check_vertex(d, b, "lies_on_common_geodesic");
    detail::check_vertex(d, c, "lies_on_common_geodesic");
    if (a == b || a == c || b == c)
        throw std::invalid_argument("lies_on_common_geodesic: vertices must be distinct");
    return detail::strictly_between(d, a, b, c) ||
           detail::strictly_between(d, b, a, c) ||
           detail::strictly_between(d, a, c, b);
}

namespace detail {

inline std::vector<int> checked_set(const DistanceMatrix& d, std::vector<int> s, const char* who) {
    for (int v : s) check_vertex(d, v, who);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument(std::string(who) + ": duplicate vertex in set");
    return s;
}

} // namespace detail

// Exhaustive triple scan.  Sets of size <= 2 are in general position by
// definition.  The reported triple is ordered with the metric middle vertex
// second; for distinct vertices the middle is unique.
inline GpCertificate verify_general_position(const DistanceMatrix& d, const std::vector<int>& set) {
    auto s = detail::checked_set(d, set, "verify_general_position");
    GpCertificate cert;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k) {
                int x = s[i], y = s[j], z = s[k];
                int mid = -1;
                if (detail::strictly_between(d, x, y, z)) mid = y;
                else if (detail::strictly_between(d, y, x, z)) mid = x;
                else if (detail::strictly_between(d, x, z, y)) mid = z;
                if (mid >= 0) {
                    int lo = mid == x ? y : x;
                    int hi = mid == z ? y : z;
                    cert.verdict = GpVerdict::violated;
                    cert.violating_triple = {lo, mid, hi};
                    return cert;
                }
            }
    cert.verdict = GpVerdict::general_position;
    return cert;
}

// Smallest k with k <= d(x,y) < 2k over all pairs of the set, if any.  Such
// a scale forces general position: a between-triple would need
// d(a,c) = d(a,b) + d(b,c) >= 2k > d(a,c).
inline std::optional<int> separation_witness(const DistanceMatrix& d, const std::vector<int>& set) {
    auto s = detail::checked_set(d, set, "separation_witness");
    if (s.size() < 2) throw std::invalid_argument("separation_witness: need at least two vertices");
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            int dist = d.at(s[i], s[j]);
            lo = std::min(lo, dist);
            hi = std::max(hi, dist);
        }
    int k = hi / 2 + 1; // smallest k with 2k > hi
    if (k <= lo) return k;
    return std::nullopt;
}

namespace detail {

// Max-uncovered-coverage DP over the geodesic DAG from root to u.
// order: vertices sorted by d(root,.) descending.  best[x] is the top
// uncovered count over root..x-suffixes; valid only for DAG vertices.
inline int cover_dp(const Graph& g, const DistanceMatrix& d, int root, int u,
                    const std::vector<int>& order, const std::vector<char>& uncovered,
                    std::vector<int>& best) {
    int du = d.at(root, u);
    for (int x : order) {
        if (d.at(root, x) + d.at(x, u) != du) continue;
        int b = uncovered[x] ? 1 : 0;
        if (x != u) {
            int succ = -1;
            for (int y : g.adj[x])
                if (d.at(root, y) == d.at(root, x) + 1 && d.at(root, y) + d.at(y, u) == du)
                    succ = std::max(succ, best[y]);
            b += succ;
        }
        best[x] = b;
    }
    return best[root];
}

} // namespace detail

// Greedy cover: repeatedly take the root geodesic touching the most
// uncovered vertices; ties prefer the smallest endpoint id, then the
// lexicographically smallest path.
inline IsometricPathCover greedy_isometric_cover_from(const Graph& g, const DistanceMatrix& d, int root) {
    detail::check_vertex(d, root, "greedy_isometric_cover_from");
    IsometricPathCover cover;
    cover.root = root;
    std::vector<char> uncovered(g.n, 1);
    int left = g.n;

    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d.at(root, a) > d.at(root, b); });

    std::vector<int> best(g.n, 0);
    while (left > 0) {
        int bestu = -1, bestc = -1;
        for (int u = 0; u < g.n; ++u) {
            int c = detail::cover_dp(g, d, root, u, order, uncovered, best);
            if (c > bestc) { bestc = c; bestu = u; }
        }
        detail::cover_dp(g, d, root, bestu, order, uncovered, best);
        std::vector<int> path{root};
        int x = root;
        int want = best[root] - (uncovered[root] ? 1 : 0);
        while (x != bestu) {
            int du = d.at(root, bestu);
            int next = -1;
            for (int y : g.adj[x])
                if (d.at(root, y) == d.at(root, x) + 1 && d.at(root, y) + d.at(y, bestu) == du &&
                    best[y] == want) {
                    next = next < 0 ? y : std::min(next, y);
                }
            x = next;
            want -= uncovered[x] ? 1 : 0;
            path.push_back(x);
        }
        for (int v : path)
            if (uncovered[v]) { uncovered[v] = 0; --left; }
        cover.paths.push_back(std::move(path));
    }
    return cover;
}

// A cover is accepted iff every path starts at the root, walks along edges,
// and spends exactly the graph distance between its endpoints (which forces
// it to be a geodesic), and the paths jointly reach every vertex.
inline bool verify_isometric_cover(const Graph& g, const DistanceMatrix& d,
                                   const IsometricPathCover& cover) {
    if (cover.root < 0 || cover.root >= g.n) return false;
    std::vector<char> seen(g.n, 0);
    for (const auto& path : cover.paths) {
        if (path.empty() || path.front() != cover.root) return false;
        for (int v : path)
            if (v < 0 || v >= g.n) return false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1])) return false;
        if (static_cast<int>(path.size()) - 1 != d.at(path.front(), path.back())) return false;
        for (int v : path) seen[v] = 1;
    }
    for (char c : seen)
        if (!c) return false;
    return true;
}

namespace detail {

// Recursive cover of the order-k sub-network of benes(r) that contains
// root, from root to every other extreme-level vertex of that sub-network.
// root must sit on an extreme level (r-k or r+k).
inline std::vector<std::vector<int>> benes_cover_rec(int r, int k, int root) {
    auto node = benes_node(r, root);
    int lo = r - k, hi = r + k;
    std::uint32_t m = 1u << (k - 1); // split bit of this sub-network
    if (k == 1) {
        std::uint32_t c0 = node.column, c1 = node.column ^ m;
        int L0 = node.level, L2 = 2 * r - node.level;
        auto id = [&](std::uint32_t c, int l) { return benes_vertex(r, {c, l}); };
        return {
            {root, id(c0, r), id(c1, L0)},
            {root, id(c0, r), id(c0, L2)},
            {root, id(c1, r), id(c1, L2)},
        };
    }
    int inward = node.level == lo ? 1 : -1;
    int x = benes_vertex(r, {node.column, node.level + inward});
    int y = benes_vertex(r, {node.column ^ m, node.level + inward});
    std::vector<std::vector<int>> paths;
    for (int start : {x, y})
        for (auto& p : benes_cover_rec(r, k - 1, start)) {
            std::vector<int> q;
            q.reserve(p.size() + 2);
            q.push_back(root);
            q.insert(q.end(), p.begin(), p.end());
            // Straight extension one level outward to a degree-2 terminus of
            // this sub-network.
            auto back = benes_node(r, q.back());
            int out = back.level == r - (k - 1) ? lo : hi;
            q.push_back(benes_vertex(r, {back.column, out}));
            paths.push_back(std::move(q));
        }
    // The one extreme vertex no extension reaches: root's partner column on
    // root's own level.
    paths.push_back({root, x, benes_vertex(r, {node.column ^ m, node.level})});
    return paths;
}

} // namespace detail

// Closed-form cover of benes(r) from a degree-2 root: 2^(r+1) - 1 geodesics,
// one per remaining extreme-level vertex, mirroring the network's recursive
// split into two order-(r-1) halves.
inline IsometricPathCover benes_cover(int r, int root) {
    detail::check_network_order(r);
    int n = (1 << r) * (2 * r + 1);
    if (root < 0 || root >= n) throw std::invalid_argument("benes_cover: root out of range");
    auto node = benes_node(r, root);
    if (node.level != 0 && node.level != 2 * r)
        throw std::invalid_argument("benes_cover: root must be a degree-2 vertex (extreme level)");
    IsometricPathCover cover;
    cover.root = root;
    cover.paths = detail::benes_cover_rec(r, r, root);
    return cover;
}

inline BoundReport gp_upper_bound_at(const Graph& g, const DistanceMatrix& d, int root) {
    auto cover = greedy_isometric_cover_from(g, d, root);
    BoundReport rep;
    rep.global = false;
    rep.root = root;
    rep.cover_paths = static_cast<int>(cover.paths.size());
    rep.bound = rep.cover_paths + 1;
    return rep;
}

// Any set avoiding three-on-a-geodesic meets each root geodesic at most
// twice, so a size-p cover from a member vertex bounds the set by p + 1.
// Taking the max over all roots removes the membership condition.
inline BoundReport gp_upper_bound_global(const Graph& g, const DistanceMatrix& d) {
    BoundReport rep;
    rep.global = true;
    for (int v = 0; v < g.n; ++v) {
        auto at = gp_upper_bound_at(g, d, v);
        if (at.bound > rep.bound) {
            rep.root = v;
            rep.cover_paths = at.cover_paths;
            rep.bound = at.bound;
        }
    }
    return rep;
}

inline int bound_from_cover(const IsometricPathCover& cover) {
    return static_cast<int>(cover.paths.size()) + 1;
}

namespace detail {

inline void enumerate_geodesics(const Graph& g, const DistanceMatrix& d, int root, int u,
                                std::vector<int>& path, std::vector<std::uint32_t>& masks,
                                std::uint32_t mask) {
    int x = path.back();
    if (x == u) {
        masks.push_back(mask);
        return;
    }
    for (int y : g.adj[x])
        if (d.at(root, y) == d.at(root, x) + 1 &&
            d.at(root, y) + d.at(y, u) == d.at(root, u)) {
            path.push_back(y);
            enumerate_geodesics(g, d, root, u, path, masks, mask | (1u << y));
            path.pop_back();
        }
}

} // namespace detail

// Exact minimum cover size by subset DP; intended as a ground truth for
// small graphs only, hence the hard cap.
inline int exact_isometric_cover_size(const Graph& g, const DistanceMatrix& d, int root) {
    if (g.n > 12)
        throw std::invalid_argument("exact_isometric_cover_size: graph too large for exhaustive search");
    detail::check_vertex(d, root, "exact_isometric_cover_size");
    std::vector<std::uint32_t> masks;
    for (int u = 0; u < g.n; ++u) {
        std::vector<int> path{root};
        detail::enumerate_geodesics(g, d, root, u, path, masks, 1u << root);
    }
    std::uint32_t full = (1u << g.n) - 1;
    std::vector<int> dp(full + 1, std::numeric_limits<int>::max());
    dp[0] = 0;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (dp[s] == std::numeric_limits<int>::max()) continue;
        if (s == full) break;
        // Cover the lowest missing vertex with every candidate geodesic.
        int miss = __builtin_ctz(~s & full);
        for (auto m : masks)
            if (m & (1u << miss)) {
                std::uint32_t t = s | m;
                dp[t] = std::min(dp[t], dp[s] + 1);
            }
    }
    return dp[full];
}

} // namespace genpos
