#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "genpos/generators.hpp"
#include "genpos/geodesy.hpp"
#include "genpos/graph.hpp"

namespace genpos {

// A named general position set, stored as coordinates against the patch that
// hosts it.  Entries either reproduce published sets or were found by the
// exact solver and frozen here; the note says which.
struct WitnessEntry {
    std::string name;
    std::string host_kind;       // grid | sgrid | tri | torus | benes
    std::vector<int> host_extents;
    std::vector<std::vector<int>> coords;
    std::string note;
};

inline const std::vector<WitnessEntry>& witness_library() {
    static const std::vector<WitnessEntry> entries = {
        {"grid2-four", "grid", {6, 6},
         {{0, 1}, {1, 3}, {2, 0}, {3, 2}},
         "maximum set of a two-dimensional grid patch; solver-found stand-in"},
        {"grid3-ten", "grid", {5, 5, 5},
         {{2, 2, 0}, {3, 1, 1}, {1, 3, 1}, {2, 0, 2}, {0, 2, 2},
          {4, 2, 2}, {2, 4, 2}, {1, 1, 3}, {3, 3, 3}, {2, 2, 4}},
         "ten points of the 5x5x5 grid with all pairwise distances in [3,5]"},
        {"strong-corners", "sgrid", {3, 3},
         {{0, 0}, {0, 2}, {2, 0}, {2, 2}},
         "corners of a 3x3 diagonal patch, pairwise distance 2"},
        {"diag2-four", "sgrid", {6, 6},
         {{0, 0}, {0, 5}, {5, 0}, {5, 5}},
         "maximum set of a diagonal patch; corners, pairwise distance 5"},
        {"boron-six", "tri", {8, 8},
         {{1, 1}, {1, 4}, {2, 3}, {6, 5}, {7, 4}, {7, 7}},
         "maximum set of an 8x8 triangular patch; solver-found stand-in"},
        {"torus-seven", "torus", {7, 7},
         {{0, 0}, {1, 2}, {2, 4}, {3, 6}, {4, 1}, {5, 3}, {6, 5}},
         "maximum set of the 7x7 torus; solver-found stand-in"},
        {"benes2-eight", "benes", {2},
         {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}},
         "all degree-2 vertices of benes(2), written as (column, level)"},
        {"benes3-sixteen", "benes", {3},
         {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0},
          {0, 6}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}, {6, 6}, {7, 6}},
         "all degree-2 vertices of benes(3), written as (column, level)"},
    };
    return entries;
}

inline const WitnessEntry& find_witness(const std::string& name) {
    for (const auto& e : witness_library())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown witness: " + name);
}

inline Graph build_witness_host(const WitnessEntry& e) {
    if (e.host_kind == "grid") return lattice({LatticeKind::cartesian, e.host_extents});
    if (e.host_kind == "sgrid") return lattice({LatticeKind::strong, e.host_extents});
    if (e.host_kind == "tri") return lattice({LatticeKind::triangular, e.host_extents});
    if (e.host_kind == "torus") return lattice({LatticeKind::torus, e.host_extents});
    if (e.host_kind == "benes") return benes(e.host_extents.at(0));
    throw std::logic_error("unknown witness host kind: " + e.host_kind);
}

// Maps the entry's coordinates onto a concrete patch.  The patch may be any
// labeled graph whose coordinates contain the entry's tuples, so witnesses
// also resolve against larger hosts of the same kind.
inline std::vector<int> resolve_witness(const WitnessEntry& e, const Graph& host) {
    if (!host.labels)
        throw std::invalid_argument("resolve_witness: host graph carries no coordinates");
    std::vector<int> ids;
    ids.reserve(e.coords.size());
    for (const auto& c : e.coords) {
        int v = host.labels->find(c);
        if (v < 0) {
            std::string tuple = "(";
            for (std::size_t i = 0; i < c.size(); ++i)
                tuple += (i ? "," : "") + std::to_string(c[i]);
            tuple += ")";
            throw std::invalid_argument("resolve_witness: coordinate " + tuple +
                                        " not present in host '" + host.name + "'");
        }
        ids.push_back(v);
    }
    return ids;
}

inline std::vector<int> resolve_witness(const std::string& name, const Graph& host) {
    return resolve_witness(find_witness(name), host);
}

// Every library entry must verify on its own host.  Returns the names of
// entries that fail; empty means the library is sound.
inline std::vector<std::string> witness_library_failures() {
    std::vector<std::string> bad;
    for (const auto& e : witness_library()) {
        try {
            Graph host = build_witness_host(e);
            auto d = all_pairs_distances(host);
            auto ids = resolve_witness(e, host);
            if (verify_general_position(d, ids).verdict != GpVerdict::general_position)
                bad.push_back(e.name);
        } catch (const std::exception&) {
            bad.push_back(e.name);
        }
    }
    return bad;
}

} // namespace genpos
