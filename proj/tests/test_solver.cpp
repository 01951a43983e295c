#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "genpos/generators.hpp"
#include "genpos/solver.hpp"
#include "oracles.hpp"

using namespace genpos;

TEST_CASE("betweenness store matches hand counts") {
    auto p4 = primitive(PrimitiveKind::path, 4);
    auto store = enumerate_collinear_triples(all_pairs_distances(p4));
    REQUIRE(store.between(0, 3).count() == 2);
    REQUIRE(store.between(0, 3).test(1));
    REQUIRE(store.between(0, 3).test(2));
    REQUIRE(store.between(0, 2).count() == 1);
    REQUIRE(store.between(1, 2).count() == 0);
    // 3 extends the geodesic through 2: forbidden next to the pair {0, 2}
    REQUIRE(store.forbid(0, 2).test(3));
    REQUIRE(store.between(0, 2).test(3) == false);

    auto k4 = primitive(PrimitiveKind::complete, 4);
    auto ks = enumerate_collinear_triples(all_pairs_distances(k4));
    for (int a = 0; a < 4; ++a)
        for (int c = a + 1; c < 4; ++c) {
            REQUIRE(ks.between(a, c).count() == 0);
            REQUIRE(ks.forbid(a, c).count() == 0);
        }

    // every vertex of a 3x3 grid sits on some corner-to-corner geodesic
    auto grid = lattice({LatticeKind::cartesian, {3, 3}});
    auto gs = enumerate_collinear_triples(all_pairs_distances(grid));
    int a = grid.labels->find({0, 0}), c = grid.labels->find({2, 2});
    REQUIRE(gs.between(a, c).count() == 7);
}

TEST_CASE("pair index is a bijection") {
    auto store = enumerate_collinear_triples(all_pairs_distances(primitive(PrimitiveKind::path, 7)));
    std::vector<char> hit(21, 0);
    for (int a = 0; a < 7; ++a)
        for (int c = a + 1; c < 7; ++c) {
            auto idx = store.pair_index(a, c);
            REQUIRE(idx < 21);
            REQUIRE(hit[idx] == 0);
            hit[idx] = 1;
            REQUIRE(store.pair_index(c, a) == idx);
        }
}

TEST_CASE("greedy seeds on simple graphs") {
    auto k5 = primitive(PrimitiveKind::complete, 5);
    auto dk = all_pairs_distances(k5);
    REQUIRE(greedy_gp_lower_bound(k5, dk) == std::vector<int>{0, 1, 2, 3, 4});

    auto p6 = primitive(PrimitiveKind::path, 6);
    auto dp = all_pairs_distances(p6);
    REQUIRE(greedy_gp_lower_bound(p6, dp) == std::vector<int>{1, 2});

    // a seed order can steer the greedy pass to the known optimum
    auto g = benes(3);
    auto d = all_pairs_distances(g);
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    REQUIRE(greedy_gp_lower_bound(g, d, order).size() == 16);

    REQUIRE_THROWS_AS(greedy_gp_lower_bound(p6, dp, {0, 1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(greedy_gp_lower_bound(p6, dp, {0, 1, 2, 3, 4, 4}), std::invalid_argument);
}

TEST_CASE("exact maxima on known graphs") {
    auto solve = [](const Graph& g, SolveOptions opts = {}) {
        return max_general_position(g, all_pairs_distances(g), opts);
    };

    auto p7 = solve(primitive(PrimitiveKind::path, 7));
    REQUIRE(p7.status == SolveStatus::optimal);
    REQUIRE(p7.size == 2);

    auto grid = solve(lattice({LatticeKind::cartesian, {4, 4}}));
    REQUIRE(grid.status == SolveStatus::optimal);
    REQUIRE(grid.size == 4);

    auto bn2 = solve(benes(2));
    REQUIRE(bn2.status == SolveStatus::optimal);
    REQUIRE(bn2.size == 8);

    auto k6 = solve(primitive(PrimitiveKind::complete, 6));
    REQUIRE(k6.size == 6);
    REQUIRE(k6.witness == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("forcing a corner pins grids at three") {
    for (int side : {4, 5}) {
        auto g = lattice({LatticeKind::cartesian, {side, side}});
        auto d = all_pairs_distances(g);
        SolveOptions opts;
        opts.forced = {g.labels->find({0, 0})};
        auto res = max_general_position(g, d, opts);
        REQUIRE(res.status == SolveStatus::optimal);
        REQUIRE(res.size == 3);
        REQUIRE(std::find(res.witness.begin(), res.witness.end(), opts.forced[0]) !=
                res.witness.end());
    }
}

TEST_CASE("solver options are validated and respected") {
    auto p5 = primitive(PrimitiveKind::path, 5);
    auto d5 = all_pairs_distances(p5);

    SolveOptions bad;
    bad.forced = {0, 2, 4};
    REQUIRE_THROWS_AS(max_general_position(p5, d5, bad), std::invalid_argument);
    bad.forced = {0, 0};
    REQUIRE_THROWS_AS(max_general_position(p5, d5, bad), std::invalid_argument);
    bad.forced = {9};
    REQUIRE_THROWS_AS(max_general_position(p5, d5, bad), std::invalid_argument);

    SolveOptions mid;
    mid.forced = {2};
    auto res = max_general_position(p5, d5, mid);
    REQUIRE(res.status == SolveStatus::optimal);
    REQUIRE(std::find(res.witness.begin(), res.witness.end(), 2) != res.witness.end());
    REQUIRE(res.size == 2);

    // trusted hints keep the result exact
    auto g = lattice({LatticeKind::cartesian, {4, 4}});
    auto d = all_pairs_distances(g);
    SolveOptions hinted;
    hinted.initial_lower_bound = 4;
    auto r1 = max_general_position(g, d, hinted);
    REQUIRE(r1.status == SolveStatus::optimal);
    REQUIRE(r1.size == 4);
    SolveOptions capped;
    capped.known_upper = 4;
    auto r2 = max_general_position(g, d, capped);
    REQUIRE(r2.status == SolveStatus::optimal);
    REQUIRE(r2.size == 4);
}

TEST_CASE("a tiny time budget degrades to a certified lower bound") {
    auto g = lattice({LatticeKind::torus, {9, 9}});
    auto d = all_pairs_distances(g);
    SolveOptions opts;
    opts.time_limit_seconds = 0.01;
    auto res = max_general_position(g, d, opts);
    REQUIRE(res.status == SolveStatus::lower_bound_only);
    REQUIRE(res.size >= 2);
    REQUIRE(verify_general_position(d, res.witness).verdict == GpVerdict::general_position);
}

TEST_CASE("solver agrees with subset enumeration on random graphs") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        auto g = oracle::random_connected(rng, n, 1.4);
        auto d = all_pairs_distances(g);
        auto res = max_general_position(g, d);
        REQUIRE(res.status == SolveStatus::optimal);
        REQUIRE(res.size == oracle::gp_number(g, d));
        REQUIRE(verify_general_position(d, res.witness).verdict == GpVerdict::general_position);
        REQUIRE(std::is_sorted(res.witness.begin(), res.witness.end()));
    }
}

TEST_CASE("forcing part of an optimum never changes the size") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        auto g = oracle::random_connected(rng, n, 1.2);
        auto d = all_pairs_distances(g);
        auto free = max_general_position(g, d);
        for (int v : free.witness) {
            SolveOptions opts;
            opts.forced = {v};
            REQUIRE(max_general_position(g, d, opts).size == free.size);
        }
        SolveOptions all;
        all.forced = free.witness;
        REQUIRE(max_general_position(g, d, all).size == free.size);
    }
}

TEST_CASE("maxima grow with nested patches") {
    int last = 0;
    for (int side : {2, 3, 4, 5}) {
        auto g = lattice({LatticeKind::cartesian, {side, side}});
        auto res = max_general_position(g, all_pairs_distances(g));
        REQUIRE(res.size >= last);
        last = res.size;
    }
    REQUIRE(last == 4);
}

TEST_CASE("solver output is deterministic") {
    auto g = lattice({LatticeKind::triangular, {5, 5}});
    auto d = all_pairs_distances(g);
    auto a = max_general_position(g, d);
    auto b = max_general_position(g, d);
    REQUIRE(a.witness == b.witness);
    REQUIRE(a.nodes == b.nodes);
}

TEST_CASE("cliques never beat the maximum") {
    std::vector<Graph> zoo;
    zoo.push_back(lattice({LatticeKind::cartesian, {4, 4}}));
    zoo.push_back(lattice({LatticeKind::strong, {4, 4}}));
    zoo.push_back(lattice({LatticeKind::triangular, {4, 4}}));
    zoo.push_back(lattice({LatticeKind::torus, {4, 4}}));
    zoo.push_back(benes(2));
    zoo.push_back(butterfly(2));
    for (const auto& g : zoo) {
        auto d = all_pairs_distances(g);
        REQUIRE(clique_number(g) <= max_general_position(g, d).size);
    }
}

TEST_CASE("oversized graphs are refused") {
    auto g = lattice({LatticeKind::cartesian, {21, 20}});
    REQUIRE_THROWS_AS(max_general_position(g, all_pairs_distances(g)), std::invalid_argument);
}
