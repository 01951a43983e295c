#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "genpos/generators.hpp"
#include "genpos/geodesy.hpp"
#include "genpos/graph.hpp"
#include "oracles.hpp"

using namespace genpos;

TEST_CASE("build_graph validates its input") {
    REQUIRE_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(build_graph(4, {{0, 1}, {2, 3}}), std::invalid_argument);

    auto g = build_graph(4, {{0, 1}, {2, 3}}, "two-edges", true);
    REQUIRE(g.n == 4);
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.name == "two-edges");
}

TEST_CASE("adjacency is sorted and queryable") {
    auto g = primitive(PrimitiveKind::cycle, 5);
    REQUIRE(g.has_edge(0, 4));
    REQUIRE_FALSE(g.has_edge(0, 2));
    REQUIRE(g.degree(3) == 2);
    for (int v = 0; v < g.n; ++v)
        REQUIRE(std::is_sorted(g.adj[v].begin(), g.adj[v].end()));
    auto es = g.edges();
    REQUIRE(es.size() == 5);
    REQUIRE(std::is_sorted(es.begin(), es.end()));
}

TEST_CASE("with_labels validates shape and injectivity") {
    auto g = build_graph(2, {{0, 1}});
    REQUIRE_THROWS_AS(with_labels(g, Labeling{1, {{0}}}), std::invalid_argument);
    REQUIRE_THROWS_AS(with_labels(g, Labeling{1, {{0}, {0, 1}}}), std::invalid_argument);
    REQUIRE_THROWS_AS(with_labels(g, Labeling{1, {{0}, {0}}}), std::invalid_argument);

    auto lg = with_labels(g, Labeling{1, {{0}, {1}}});
    REQUIRE(lg.labels.has_value());
    REQUIRE(lg.labels->find({1}) == 1);
    REQUIRE(lg.labels->find({7}) == -1);
}

TEST_CASE("bfs distances agree with a floyd-warshall reference") {
    std::mt19937_64 rng(20260818);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 40);
        auto g = oracle::random_connected(rng, n);
        auto d = all_pairs_distances(g);
        auto ref = oracle::floyd_warshall(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                REQUIRE(d.at(u, v) == ref[u][v]);
    }
    // one larger instance so the row partitioning sees real work
    auto g = oracle::random_connected(rng, 200, 2.0);
    auto d = all_pairs_distances(g, 4);
    auto ref = oracle::floyd_warshall(g);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            REQUIRE(d.at(u, v) == ref[u][v]);
}

TEST_CASE("distances form a metric and thread count never changes them") {
    auto g = lattice({LatticeKind::triangular, {5, 6}});
    auto d1 = all_pairs_distances(g, 1);
    auto d4 = all_pairs_distances(g, 4);
    REQUIRE(d1.d == d4.d);
    for (int u = 0; u < g.n; ++u) {
        REQUIRE(d1.at(u, u) == 0);
        for (int v = 0; v < g.n; ++v) {
            REQUIRE(d1.at(u, v) == d1.at(v, u));
            if (u != v) REQUIRE(d1.at(u, v) >= 1);
            // neighbouring columns differ by at most one
            for (int w : g.adj[v]) REQUIRE(std::abs(d1.at(u, v) - d1.at(u, w)) <= 1);
        }
    }
}

TEST_CASE("unreachable pairs are rejected unless allowed") {
    auto g = build_graph(4, {{0, 1}, {2, 3}}, "", true);
    REQUIRE_THROWS_AS(all_pairs_distances(g), std::invalid_argument);
    auto d = all_pairs_distances(g, 1, true);
    REQUIRE(d.at(0, 2) == -1);
    REQUIRE(d.at(0, 1) == 1);
}

TEST_CASE("embedding check accepts a grid window and rejects stretching") {
    auto host = lattice({LatticeKind::cartesian, {5, 5}});
    auto sub = lattice({LatticeKind::cartesian, {3, 3}});
    auto hd = all_pairs_distances(host);
    auto sd = all_pairs_distances(sub);

    std::vector<int> map(sub.n);
    for (int v = 0; v < sub.n; ++v) {
        auto c = sub.labels->at(v);
        map[v] = host.labels->find({c[0] + 1, c[1] + 1});
        REQUIRE(map[v] >= 0);
    }
    REQUIRE(is_isometric_embedding(host, hd, sub, sd, map).ok);

    // a cycle mapped onto a complete graph keeps edges but shrinks distances
    auto c4 = primitive(PrimitiveKind::cycle, 4);
    auto k4 = primitive(PrimitiveKind::complete, 4);
    auto rep = is_isometric_embedding(k4, all_pairs_distances(k4), c4, all_pairs_distances(c4),
                                      {0, 1, 2, 3});
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.witness.has_value());
    REQUIRE(rep.witness->first == 0);
    REQUIRE(rep.witness->second == 2);
    REQUIRE(rep.sub_distance == 2);
    REQUIRE(rep.host_distance == 1);
}

TEST_CASE("embedding check rejects malformed maps") {
    auto p3 = primitive(PrimitiveKind::path, 3);
    auto p5 = primitive(PrimitiveKind::path, 5);
    auto d3 = all_pairs_distances(p3);
    auto d5 = all_pairs_distances(p5);
    REQUIRE_THROWS_AS(is_isometric_embedding(p5, d5, p3, d3, {0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(is_isometric_embedding(p5, d5, p3, d3, {0, 1, 5}), std::invalid_argument);
    REQUIRE_THROWS_AS(is_isometric_embedding(p5, d5, p3, d3, {0, 1, 0}), std::invalid_argument);
    // edge 1-2 of the path lands on the non-edge 1-3
    REQUIRE_THROWS_AS(is_isometric_embedding(p5, d5, p3, d3, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("general position verdicts transfer through isometric embeddings") {
    auto host = lattice({LatticeKind::cartesian, {5, 5}});
    auto sub = lattice({LatticeKind::cartesian, {3, 3}});
    auto hd = all_pairs_distances(host);
    auto sd = all_pairs_distances(sub);
    std::vector<int> map(sub.n);
    for (int v = 0; v < sub.n; ++v) {
        auto c = sub.labels->at(v);
        map[v] = host.labels->find({c[0] + 1, c[1] + 1});
    }
    REQUIRE(is_isometric_embedding(host, hd, sub, sd, map).ok);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> s;
        for (int v = 0; v < sub.n; ++v)
            if (rng() % 3 == 0) s.push_back(v);
        if (s.size() < 3) continue;
        std::vector<int> mapped;
        for (int v : s) mapped.push_back(map[v]);
        auto sub_verdict = verify_general_position(sd, s).verdict;
        auto host_verdict = verify_general_position(hd, mapped).verdict;
        REQUIRE(sub_verdict == host_verdict);
    }
}

TEST_CASE("clique numbers on known graphs") {
    REQUIRE(clique_number(primitive(PrimitiveKind::complete, 7)) == 7);
    REQUIRE(clique_number(primitive(PrimitiveKind::cycle, 6)) == 2);
    REQUIRE(clique_number(primitive(PrimitiveKind::cycle, 3)) == 3);
    REQUIRE(clique_number(lattice({LatticeKind::cartesian, {3, 3}})) == 2);
    REQUIRE(clique_number(lattice({LatticeKind::strong, {4, 4}})) == 4);
    REQUIRE(clique_number(lattice({LatticeKind::triangular, {4, 4}})) == 3);
}

TEST_CASE("clique search agrees with subset enumeration on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 10);
        auto g = oracle::random_connected(rng, n, 1.5);
        REQUIRE(clique_number(g) == oracle::clique_number(g));
    }
}

TEST_CASE("clique search refuses graphs beyond its cap") {
    auto g = lattice({LatticeKind::cartesian, {40, 30}});
    REQUIRE_THROWS_AS(clique_number(g, 1000), std::invalid_argument);
}
