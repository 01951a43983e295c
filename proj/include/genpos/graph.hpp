#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace genpos {

// Integer coordinate labels, one tuple per vertex.  Kept separate from the
// adjacency structure: most ops never look at coordinates, and the same
// topology can carry different labelings.
struct Labeling {
    int dim = 0;
    std::vector<std::vector<int>> coords; // coords[v].size() == dim

    const std::vector<int>& at(int v) const { return coords[v]; }

    // Vertex carrying the given coordinate tuple, or -1.
    int find(const std::vector<int>& c) const {
        for (std::size_t v = 0; v < coords.size(); ++v)
            if (coords[v] == c) return static_cast<int>(v);
        return -1;
    }
};

// Simple undirected graph on dense ids 0..n-1.  Adjacency lists are sorted;
// instances are built through build_graph and not mutated afterwards.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::string name;
    std::optional<Labeling> labels;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    std::size_t edge_count() const {
        std::size_t deg = 0;
        for (const auto& a : adj) deg += a.size();
        return deg / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        e.reserve(edge_count());
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) e.emplace_back(u, v);
        return e;
    }
};

// All-pairs shortest-path distances, row-major.  16-bit entries: every graph
// this library targets has diameter far below 2^15.  -1 marks unreachable
// pairs, which only occur when disconnected graphs are explicitly allowed.
struct DistanceMatrix {
    int n = 0;
    std::vector<std::int16_t> d;

    std::int16_t at(int u, int v) const {
        return d[static_cast<std::size_t>(u) * n + v];
    }
    std::int16_t& at(int u, int v) {
        return d[static_cast<std::size_t>(u) * n + v];
    }
};

struct EmbeddingReport {
    bool ok = false;
    // First distance-violating vertex pair of the embedded graph, in
    // lexicographic order, with both measured distances.
    std::optional<std::pair<int, int>> witness;
    std::int16_t sub_distance = -1;
    std::int16_t host_distance = -1;
};

namespace detail {

inline bool connected(int n, const std::vector<std::vector<int>>& adj) {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

// Runs fn(i) for i in [0, n).  Work items must be independent; output does
// not depend on the thread count.
template <typename F>
void parallel_rows(int n, int threads, F&& fn) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    int nt = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += nt) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace detail

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                         std::string name = "", bool allow_disconnected = false) {
    if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
    Graph g;
    g.n = n;
    g.name = std::move(name);
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("build_graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("build_graph: self-loop");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int u = 0; u < n; ++u) {
        auto& a = g.adj[u];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("build_graph: duplicate edge");
    }
    if (!allow_disconnected && !detail::connected(n, g.adj))
        throw std::invalid_argument("build_graph: graph is disconnected");
    return g;
}

// Returns a copy of g carrying the labeling.  Coordinates must be injective
// and dimension-consistent; everything downstream relies on that.
inline Graph with_labels(Graph g, Labeling lab) {
    if (static_cast<int>(lab.coords.size()) != g.n)
        throw std::invalid_argument("with_labels: coordinate count != vertex count");
    for (const auto& c : lab.coords)
        if (static_cast<int>(c.size()) != lab.dim)
            throw std::invalid_argument("with_labels: inconsistent coordinate dimension");
    auto sorted = lab.coords;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("with_labels: labeling is not injective");
    g.labels = std::move(lab);
    return g;
}

inline DistanceMatrix all_pairs_distances(const Graph& g, int threads = 1,
                                          bool allow_unreachable = false) {
    DistanceMatrix m;
    m.n = g.n;
    m.d.assign(static_cast<std::size_t>(g.n) * g.n, -1);
    detail::parallel_rows(g.n, threads, [&](int s) {
        auto* row = m.d.data() + static_cast<std::size_t>(s) * g.n;
        std::vector<int> queue{s};
        row[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            std::int16_t du = row[u];
            for (int v : g.adj[u])
                if (row[v] < 0) {
                    row[v] = static_cast<std::int16_t>(du + 1);
                    queue.push_back(v);
                }
        }
    });
    if (!allow_unreachable) {
        for (auto x : m.d)
            if (x < 0) throw std::invalid_argument("all_pairs_distances: graph is disconnected");
    }
    return m;
}

// Checks whether map embeds sub isometrically into host: map must already be
// an injective homomorphism (errors otherwise), and the report says whether
// it also preserves all pairwise distances.  The first violating pair in
// lexicographic order becomes the witness.
inline EmbeddingReport is_isometric_embedding(const Graph& host, const DistanceMatrix& host_d,
                                              const Graph& sub, const DistanceMatrix& sub_d,
                                              const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != sub.n)
        throw std::invalid_argument("is_isometric_embedding: map size != sub vertex count");
    std::vector<char> used(host.n, 0);
    for (int x : map) {
        if (x < 0 || x >= host.n)
            throw std::invalid_argument("is_isometric_embedding: map image out of range");
        if (used[x])
            throw std::invalid_argument("is_isometric_embedding: map is not injective");
        used[x] = 1;
    }
    for (int u = 0; u < sub.n; ++u)
        for (int v : sub.adj[u])
            if (u < v && !host.has_edge(map[u], map[v]))
                throw std::invalid_argument("is_isometric_embedding: map does not carry an edge to an edge");

    EmbeddingReport rep;
    for (int x = 0; x < sub.n; ++x)
        for (int y = x + 1; y < sub.n; ++y)
            if (sub_d.at(x, y) != host_d.at(map[x], map[y])) {
                rep.ok = false;
                rep.witness = {x, y};
                rep.sub_distance = sub_d.at(x, y);
                rep.host_distance = host_d.at(map[x], map[y]);
                return rep;
            }
    rep.ok = true;
    return rep;
}

namespace detail {

// Max-clique branch and bound with a greedy-colouring bound.  Candidates are
// handed down as id lists; n stays within the documented cap so plain
// vectors are fine.
inline void clique_extend(const Graph& g, std::vector<int>& cand, int chosen,
                          std::vector<int>& current, std::vector<int>& best) {
    if (cand.empty()) {
        if (chosen > static_cast<int>(best.size())) best = current;
        return;
    }
    // Greedy colouring in id order; colour count bounds the clique size
    // extendable from here.
    std::vector<int> colour(cand.size(), 0);
    int ncolours = 0;
    {
        std::vector<std::vector<int>> classes;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            int c = 0;
            for (; c < ncolours; ++c) {
                bool clash = false;
                for (int u : classes[c])
                    if (g.has_edge(u, v)) { clash = true; break; }
                if (!clash) break;
            }
            if (c == ncolours) { classes.emplace_back(); ++ncolours; }
            classes[c].push_back(v);
            colour[i] = c + 1;
        }
    }
    // Branch on candidates in reverse colour order, highest colour first.
    std::vector<std::size_t> order(cand.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return colour[a] > colour[b]; });
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        std::size_t i = order[oi];
        if (chosen + colour[i] <= static_cast<int>(best.size())) return;
        int v = cand[i];
        std::vector<int> next;
        next.reserve(cand.size());
        for (std::size_t j = oi + 1; j < order.size(); ++j) {
            int u = cand[order[j]];
            if (g.has_edge(u, v)) next.push_back(u);
        }
        current.push_back(v);
        clique_extend(g, next, chosen + 1, current, best);
        current.pop_back();
    }
}

} // namespace detail

inline int clique_number(const Graph& g, int size_cap = 1000) {
    if (g.n > size_cap)
        throw std::invalid_argument("clique_number: graph too large for exact search");
    if (g.n == 0) return 0;
    std::vector<int> cand(g.n);
    for (int i = 0; i < g.n; ++i) cand[i] = i;
    // Degree-descending start order helps the bound; ids break ties.
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::vector<int> current, best;
    detail::clique_extend(g, cand, 0, current, best);
    return static_cast<int>(best.size());
}

} // namespace genpos
