#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "genpos/graph.hpp"

namespace genpos {

enum class PrimitiveKind { path, cycle, complete };
enum class ProductKind { cartesian, strong };
enum class LatticeKind { cartesian, strong, triangular, torus };
enum class LabelingScheme { natural, rotated, none };

struct LatticeSpec {
    LatticeKind kind = LatticeKind::cartesian;
    std::vector<int> extents;
};

// One node of a butterfly or Benes network: an r-bit column word plus a
// level.  Butterfly levels run 1..r+1, Benes levels 0..2r.
struct ButterflyNode {
    std::uint32_t column = 0;
    int level = 0;
};

inline Graph primitive(PrimitiveKind kind, int n) {
    if (n < 1) throw std::invalid_argument("primitive: need at least one vertex");
    std::vector<std::pair<int, int>> edges;
    std::string name;
    switch (kind) {
    case PrimitiveKind::path:
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        name = "path-" + std::to_string(n);
        break;
    case PrimitiveKind::cycle:
        if (n < 3) throw std::invalid_argument("primitive: cycle needs >= 3 vertices");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        name = "cycle-" + std::to_string(n);
        break;
    case PrimitiveKind::complete:
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        name = "complete-" + std::to_string(n);
        break;
    }
    Graph g = build_graph(n, edges, name);
    Labeling lab;
    lab.dim = 1;
    lab.coords.resize(n);
    for (int i = 0; i < n; ++i) lab.coords[i] = {i};
    return with_labels(std::move(g), std::move(lab));
}

// Graph product on vertex pairs (a,b) -> a*|V(h)|+b.  The cartesian product
// moves along one factor per step; the strong product also takes both at
// once.  When both factors carry labels the product concatenates them.
inline Graph product(ProductKind kind, const Graph& g, const Graph& h) {
    int n = g.n * h.n;
    auto id = [&](int a, int b) { return a * h.n + b; };
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < h.n; ++b) {
            for (int b2 : h.adj[b])
                if (b2 > b) edges.emplace_back(id(a, b), id(a, b2));
            for (int a2 : g.adj[a])
                if (a2 > a) edges.emplace_back(id(a, b), id(a2, b));
        }
    if (kind == ProductKind::strong)
        for (int a = 0; a < g.n; ++a)
            for (int a2 : g.adj[a])
                if (a2 > a)
                    for (int b = 0; b < h.n; ++b)
                        for (int b2 : h.adj[b])
                            if (b2 != b) edges.emplace_back(id(a, b), id(a2, b2));
    std::string prefix = kind == ProductKind::cartesian ? "cart" : "strong";
    Graph p = build_graph(n, edges, prefix + "(" + g.name + "," + h.name + ")");
    if (g.labels && h.labels) {
        Labeling lab;
        lab.dim = g.labels->dim + h.labels->dim;
        lab.coords.resize(n);
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < h.n; ++b) {
                auto c = g.labels->at(a);
                const auto& cb = h.labels->at(b);
                c.insert(c.end(), cb.begin(), cb.end());
                lab.coords[id(a, b)] = std::move(c);
            }
        p = with_labels(std::move(p), std::move(lab));
    }
    return p;
}

namespace detail {

inline std::string extents_tag(const std::vector<int>& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(e[i]);
    }
    return s;
}

} // namespace detail

// Finite lattice patches with their natural coordinate labeling attached.
// cartesian takes any number of extents; the others are two-dimensional.
// The triangular patch adds the (+1,+1) diagonal to the square grid.
inline Graph lattice(const LatticeSpec& spec) {
    const auto& e = spec.extents;
    auto rename = [&](Graph g, const char* tag) {
        g.name = std::string(tag) + "-" + detail::extents_tag(e);
        return g;
    };
    switch (spec.kind) {
    case LatticeKind::cartesian: {
        if (e.empty()) throw std::invalid_argument("lattice: need at least one extent");
        Graph g = primitive(PrimitiveKind::path, e[0]);
        for (std::size_t i = 1; i < e.size(); ++i)
            g = product(ProductKind::cartesian, g, primitive(PrimitiveKind::path, e[i]));
        return rename(std::move(g), "grid");
    }
    case LatticeKind::strong: {
        if (e.size() != 2) throw std::invalid_argument("lattice: strong patch is two-dimensional");
        Graph g = product(ProductKind::strong, primitive(PrimitiveKind::path, e[0]),
                          primitive(PrimitiveKind::path, e[1]));
        return rename(std::move(g), "sgrid");
    }
    case LatticeKind::triangular: {
        if (e.size() != 2) throw std::invalid_argument("lattice: triangular patch is two-dimensional");
        int r = e[0], c = e[1];
        if (r < 1 || c < 1) throw std::invalid_argument("lattice: extents must be positive");
        auto id = [&](int i, int j) { return i * c + j; };
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                if (i + 1 < r) edges.emplace_back(id(i, j), id(i + 1, j));
                if (j + 1 < c) edges.emplace_back(id(i, j), id(i, j + 1));
                if (i + 1 < r && j + 1 < c) edges.emplace_back(id(i, j), id(i + 1, j + 1));
            }
        Graph g = build_graph(r * c, edges);
        Labeling lab;
        lab.dim = 2;
        lab.coords.resize(r * c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) lab.coords[id(i, j)] = {i, j};
        return rename(with_labels(std::move(g), std::move(lab)), "tri");
    }
    case LatticeKind::torus: {
        if (e.size() != 2) throw std::invalid_argument("lattice: torus is two-dimensional");
        Graph g = product(ProductKind::cartesian, primitive(PrimitiveKind::cycle, e[0]),
                          primitive(PrimitiveKind::cycle, e[1]));
        return rename(std::move(g), "torus");
    }
    }
    throw std::logic_error("lattice: unknown kind");
}

namespace detail {

inline void check_network_order(int r) {
    if (r < 1 || r > 12)
        throw std::invalid_argument("network order must be between 1 and 12");
}

// Bit positions are 1-indexed from the most significant of the r column
// bits, so position p has mask 1 << (r - p).
inline std::uint32_t column_mask(int r, int p) {
    return 1u << (r - p);
}

} // namespace detail

inline int butterfly_vertex(int r, const ButterflyNode& node) {
    return (node.level - 1) * (1 << r) + static_cast<int>(node.column);
}

inline ButterflyNode butterfly_node(int r, int vertex) {
    return {static_cast<std::uint32_t>(vertex & ((1 << r) - 1)), (vertex >> r) + 1};
}

inline int benes_vertex(int r, const ButterflyNode& node) {
    return node.level * (1 << r) + static_cast<int>(node.column);
}

inline ButterflyNode benes_node(int r, int vertex) {
    return {static_cast<std::uint32_t>(vertex & ((1 << r) - 1)), vertex >> r};
}

// Butterfly network of order r: 2^r columns of r+1 levels.  Between levels
// i and i+1 each node keeps a straight edge to its own column and a cross
// edge to the column differing exactly in bit position i.
inline Graph butterfly(int r) {
    detail::check_network_order(r);
    int cols = 1 << r;
    int n = cols * (r + 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= r; ++i)
        for (std::uint32_t w = 0; w < static_cast<std::uint32_t>(cols); ++w) {
            int u = butterfly_vertex(r, {w, i});
            edges.emplace_back(u, butterfly_vertex(r, {w, i + 1}));
            edges.emplace_back(u, butterfly_vertex(r, {w ^ detail::column_mask(r, i), i + 1}));
        }
    Graph g = build_graph(n, edges, "butterfly-" + std::to_string(r));
    Labeling lab;
    lab.dim = 2;
    lab.coords.resize(n);
    for (int v = 0; v < n; ++v) {
        auto node = butterfly_node(r, v);
        lab.coords[v] = {static_cast<int>(node.column), node.level};
    }
    return with_labels(std::move(g), std::move(lab));
}

// Benes network of order r: two order-r butterflies sharing their middle
// level, giving levels 0..2r.  Going down from level 0 the cross edges flip
// bits 1,2,..,r; past the middle they flip r,..,2,1 again, so the level map
// l -> 2r-l is an automorphism.
inline Graph benes(int r) {
    detail::check_network_order(r);
    int cols = 1 << r;
    int n = cols * (2 * r + 1);
    auto gap_mask = [&](int lower) {
        int p = lower < r ? lower + 1 : 2 * r - lower;
        return detail::column_mask(r, p);
    };
    std::vector<std::pair<int, int>> edges;
    for (int l = 0; l < 2 * r; ++l)
        for (std::uint32_t w = 0; w < static_cast<std::uint32_t>(cols); ++w) {
            int u = benes_vertex(r, {w, l});
            edges.emplace_back(u, benes_vertex(r, {w, l + 1}));
            edges.emplace_back(u, benes_vertex(r, {w ^ gap_mask(l), l + 1}));
        }
    Graph g = build_graph(n, edges, "benes-" + std::to_string(r));
    Labeling lab;
    lab.dim = 2;
    lab.coords.resize(n);
    for (int v = 0; v < n; ++v) {
        auto node = benes_node(r, v);
        lab.coords[v] = {static_cast<int>(node.column), node.level};
    }
    return with_labels(std::move(g), std::move(lab));
}

// Swaps the coordinate scheme of a two-dimensional patch.  natural keeps
// the construction coordinates f(i,j) = (i,j).  rotated applies the integer
// shear g(i,j) = (i+j, j-i), which turns diagonal steps into axis steps; it
// is only meaningful on strong patches and rejected elsewhere.
inline Graph attach_labeling(Graph g, LabelingScheme scheme) {
    if (scheme == LabelingScheme::none) {
        g.labels.reset();
        return g;
    }
    if (!g.labels || g.labels->dim != 2)
        throw std::invalid_argument("attach_labeling: graph has no two-dimensional coordinates");
    if (scheme == LabelingScheme::natural) return g;
    if (g.name.rfind("sgrid", 0) != 0)
        throw std::invalid_argument("attach_labeling: rotated labels require a strong patch");
    Labeling lab;
    lab.dim = 2;
    lab.coords.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        int i = g.labels->at(v)[0], j = g.labels->at(v)[1];
        lab.coords[v] = {i + j, j - i};
    }
    return with_labels(std::move(g), std::move(lab));
}

} // namespace genpos
