// Walkthrough of the library: build a patch, measure it, solve it, and
// reproduce the headline numbers on a torus and a benes network.

#include <cstdio>

#include "genpos/genpos.hpp"

using namespace genpos;

int main() {
    // a 4x4 grid patch: solve for the maximum general position set
    auto grid = lattice({LatticeKind::cartesian, {4, 4}});
    auto d = all_pairs_distances(grid);
    auto res = max_general_position(grid, d);
    std::printf("%s: maximum %d, witness", grid.name.c_str(), res.size);
    for (int v : res.witness) {
        auto& c = grid.labels->at(v);
        std::printf(" (%d,%d)", c[0], c[1]);
    }
    std::printf("\n");

    // verify a frozen witness from the library against its host
    auto torus = build_witness_host(find_witness("torus-seven"));
    auto dt = all_pairs_distances(torus);
    auto ids = resolve_witness("torus-seven", torus);
    auto cert = verify_general_position(dt, ids);
    std::printf("%s: seven-point witness %s\n", torus.name.c_str(),
                cert.verdict == GpVerdict::general_position ? "verified" : "BROKEN");

    // covers certify upper bounds: 15 geodesics from a corner of benes(3)
    auto g = benes(3);
    auto cover = benes_cover(3, benes_vertex(3, {0, 0}));
    std::printf("%s: %zu geodesics from one corner, so any set caps at %d\n", g.name.c_str(),
                cover.paths.size(), bound_from_cover(cover));

    // labelings: the diagonal patch fails naturally, passes after rotation
    auto sg = lattice({LatticeKind::strong, {6, 6}});
    auto ds = all_pairs_distances(sg);
    auto natural = check_monotone_geodesic_labeling(sg, ds, *sg.labels);
    auto rotated = attach_labeling(sg, LabelingScheme::rotated);
    auto after = check_monotone_geodesic_labeling(sg, ds, *rotated.labels);
    std::printf("%s: natural labels %s, rotated labels %s\n", sg.name.c_str(),
                natural.verdict == LabelingVerdict::violated ? "violated" : "monotone",
                after.verdict == LabelingVerdict::violated ? "violated" : "monotone");

    return cert.verdict == GpVerdict::general_position ? 0 : 1;
}
