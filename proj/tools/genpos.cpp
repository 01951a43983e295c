// Command line front end: generate patches and networks, verify general
// position sets, run the exact solver, check labelings, build covers, and
// reproduce the claim table.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "genpos/genpos.hpp"

namespace {

using nlohmann::json;

json certificate_json(const genpos::GpCertificate& cert) {
    json j;
    j["verdict"] = cert.verdict == genpos::GpVerdict::general_position ? "general_position"
                                                                       : "violated";
    if (cert.violating_triple) {
        auto [a, b, c] = *cert.violating_triple;
        j["violating_triple"] = {a, b, c};
    } else {
        j["violating_triple"] = nullptr;
    }
    j["separation_k"] = cert.separation_k ? json(*cert.separation_k) : json(nullptr);
    return j;
}

json cover_json(const genpos::IsometricPathCover& cover, bool verified) {
    json j;
    j["root"] = cover.root;
    j["paths"] = cover.paths;
    j["path_count"] = cover.paths.size();
    j["verified"] = verified;
    j["bound"] = genpos::bound_from_cover(cover);
    return j;
}

// Vertex selections come in as a JSON array: plain ids, or coordinate
// tuples matched against the graph's labeling.
std::vector<int> parse_vertex_set(const std::string& text, const genpos::Graph& g) {
    json j = json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("vertex set: expected a JSON array");
    std::vector<int> ids;
    for (const auto& item : j) {
        if (item.is_number_integer()) {
            ids.push_back(item.get<int>());
        } else if (item.is_array()) {
            if (!g.labels)
                throw std::invalid_argument("vertex set: coordinates given but the graph has no labels");
            auto c = item.get<std::vector<int>>();
            int v = g.labels->find(c);
            if (v < 0) throw std::invalid_argument("vertex set: coordinate not present in the graph");
            ids.push_back(v);
        } else {
            throw std::invalid_argument("vertex set: entries must be ids or coordinate tuples");
        }
    }
    return ids;
}

genpos::Labeling sheared(const genpos::Labeling& lab) {
    genpos::Labeling out;
    out.dim = 2;
    out.coords.reserve(lab.coords.size());
    for (const auto& c : lab.coords) out.coords.push_back({c[0] + c[1], c[1] - c[0]});
    return out;
}

struct GenArgs {
    std::string kind;
    std::vector<std::string> args;
    std::string labeling = "natural";
    std::string output;
    bool edgelist = false;
};

int positive_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v <= 0)
        throw std::invalid_argument(std::string("expected a positive integer for ") + what);
    return v;
}

genpos::Graph run_gen(const GenArgs& a) {
    using namespace genpos;
    auto ints = [&](std::size_t at_least, std::size_t at_most, const char* what) {
        if (a.args.size() < at_least || a.args.size() > at_most)
            throw std::invalid_argument(std::string("wrong number of sizes for ") + what);
        std::vector<int> out;
        for (const auto& s : a.args) out.push_back(positive_int(s, what));
        return out;
    };
    Graph g;
    if (a.kind == "path") g = primitive(PrimitiveKind::path, ints(1, 1, "path")[0]);
    else if (a.kind == "cycle") g = primitive(PrimitiveKind::cycle, ints(1, 1, "cycle")[0]);
    else if (a.kind == "complete") g = primitive(PrimitiveKind::complete, ints(1, 1, "complete")[0]);
    else if (a.kind == "grid") g = lattice({LatticeKind::cartesian, ints(1, 8, "grid")});
    else if (a.kind == "sgrid") g = lattice({LatticeKind::strong, ints(2, 2, "sgrid")});
    else if (a.kind == "tri") g = lattice({LatticeKind::triangular, ints(2, 2, "tri")});
    else if (a.kind == "torus") g = lattice({LatticeKind::torus, ints(2, 2, "torus")});
    else if (a.kind == "butterfly") g = butterfly(ints(1, 1, "butterfly")[0]);
    else if (a.kind == "benes") g = benes(ints(1, 1, "benes")[0]);
    else if (a.kind == "product") {
        if (a.args.size() != 3 || (a.args[0] != "cartesian" && a.args[0] != "strong"))
            throw std::invalid_argument("product needs: cartesian|strong <graph-file> <graph-file>");
        g = product(a.args[0] == "cartesian" ? ProductKind::cartesian : ProductKind::strong,
                    load_graph(a.args[1]), load_graph(a.args[2]));
    } else {
        throw std::invalid_argument("unknown generator kind: " + a.kind);
    }
    if (a.labeling == "none") g = attach_labeling(std::move(g), LabelingScheme::none);
    else if (a.labeling == "rotated") g = attach_labeling(std::move(g), LabelingScheme::rotated);
    // natural: generators already attach construction coordinates
    return g;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) std::cout << text;
    else genpos::write_file(output, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"general position sets on grids, tori, butterflies and Benes networks"};
    app.require_subcommand(0, 1);

    std::string format = "table";
    std::uint64_t seed = 1;
    int threads = 1;
    bool self_test = false;
    app.add_option("--format", format, "output style")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", seed, "seed for randomized trial rows");
    app.add_option("--threads", threads, "worker threads for distance matrices")
        ->check(CLI::Range(1, 256));
    app.add_flag("--self-test", self_test, "verify every witness library entry first");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    gen->add_option("kind", gen_args.kind,
                    "path|cycle|complete|grid|sgrid|tri|torus|butterfly|benes|product")
        ->required();
    gen->add_option("sizes", gen_args.args, "extents or order, or product: kind + two files");
    gen->add_option("--labeling", gen_args.labeling, "natural|rotated|none")
        ->check(CLI::IsMember({"natural", "rotated", "none"}));
    gen->add_option("-o,--output", gen_args.output, "write to file instead of stdout");
    gen->add_flag("--edgelist", gen_args.edgelist, "emit edge-list text instead of JSON");

    std::string verify_graph, verify_set, verify_set_file, verify_witness;
    auto* verify = app.add_subcommand("verify", "check a vertex set for general position");
    verify->add_option("graph", verify_graph, "graph file (JSON or edge list)")->required();
    verify->add_option("--set", verify_set, "JSON array of ids or coordinate tuples");
    verify->add_option("--set-file", verify_set_file, "file holding such an array");
    verify->add_option("--witness", verify_witness, "named entry from the witness library");

    std::string solve_graph;
    std::vector<int> solve_forced;
    double solve_time_limit = 0;
    int solve_lower = 0, solve_upper = 0;
    auto* solve = app.add_subcommand("solve", "maximum general position set, exact");
    solve->add_option("graph", solve_graph)->required();
    solve->add_option("--forced", solve_forced, "vertex ids the witness must contain")
        ->delimiter(',');
    solve->add_option("--time-limit", solve_time_limit, "seconds before settling for a lower bound");
    solve->add_option("--lower-bound", solve_lower, "caller-certified size of some known set");
    solve->add_option("--known-upper", solve_upper, "caller-certified upper bound; stops early");

    std::string label_graph, label_scheme = "natural";
    int label_cap = 100;
    auto* label = app.add_subcommand("label-check", "test the monotone-geodesic property");
    label->add_option("graph", label_graph)->required();
    label->add_option("--scheme", label_scheme,
                      "natural uses stored coordinates; rotated shears them by (i+j, j-i)")
        ->check(CLI::IsMember({"natural", "rotated"}));
    label->add_option("--max-n", label_cap, "vertex cap for the cubic triple scan");

    std::string cover_graph;
    int cover_root = 0, cover_benes = 0;
    auto* cover = app.add_subcommand("cover", "geodesics from one root covering every vertex");
    cover->add_option("graph", cover_graph, "graph file; omit when using --benes");
    cover->add_option("--root", cover_root, "root vertex id")->required();
    cover->add_option("--benes", cover_benes, "use the closed-form cover of benes(r)");

    std::string report_scope = "all";
    int report_trials = 10000;
    auto* report = app.add_subcommand("report", "reproduce the claim table");
    report->add_option("--scope", report_scope, "all|grids|torus|benes|boron|monotone")
        ->check(CLI::IsMember({"all", "grids", "torus", "benes", "boron", "monotone"}));
    report->add_option("--trials", report_trials, "iterations per randomized row")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (self_test) {
            auto bad = genpos::witness_library_failures();
            if (format == "json") {
                json j;
                j["checked"] = genpos::witness_library().size();
                j["failures"] = bad;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "witness library: " << genpos::witness_library().size() << " entries, "
                          << bad.size() << " failures\n";
                for (const auto& name : bad) std::cout << "  FAIL " << name << '\n';
            }
            if (!bad.empty()) return 1;
            if (app.get_subcommands().empty()) return 0;
        }

        if (gen->parsed()) {
            auto g = run_gen(gen_args);
            emit(gen_args.edgelist ? genpos::to_edgelist(g) : genpos::to_json(g).dump(2) + "\n",
                 gen_args.output);
            return 0;
        }

        if (verify->parsed()) {
            auto g = genpos::load_graph(verify_graph);
            int sources = (!verify_set.empty()) + (!verify_set_file.empty()) +
                          (!verify_witness.empty());
            if (sources != 1)
                throw std::invalid_argument("verify: give exactly one of --set, --set-file, --witness");
            std::vector<int> ids;
            if (!verify_witness.empty()) ids = genpos::resolve_witness(verify_witness, g);
            else if (!verify_set_file.empty()) ids = parse_vertex_set(genpos::read_file(verify_set_file), g);
            else ids = parse_vertex_set(verify_set, g);
            auto d = genpos::all_pairs_distances(g, threads);
            auto cert = genpos::verify_general_position(d, ids);
            if (cert.verdict == genpos::GpVerdict::general_position && ids.size() >= 2)
                cert.separation_k = genpos::separation_witness(d, ids);
            if (format == "json") {
                std::cout << certificate_json(cert).dump(2) << '\n';
            } else {
                bool gp = cert.verdict == genpos::GpVerdict::general_position;
                std::cout << "set of " << ids.size() << " on " << g.name << ": "
                          << (gp ? "general position" : "violated") << '\n';
                if (cert.violating_triple) {
                    auto [a, b, c] = *cert.violating_triple;
                    std::cout << "  " << b << " lies between " << a << " and " << c << '\n';
                }
                if (cert.separation_k)
                    std::cout << "  separation scale k=" << *cert.separation_k << '\n';
            }
            return 0;
        }

        if (solve->parsed()) {
            auto g = genpos::load_graph(solve_graph);
            auto d = genpos::all_pairs_distances(g, threads);
            genpos::SolveOptions opts;
            opts.forced = solve_forced;
            if (solve_time_limit > 0) opts.time_limit_seconds = solve_time_limit;
            opts.initial_lower_bound = solve_lower;
            if (solve_upper > 0) opts.known_upper = solve_upper;
            auto res = genpos::max_general_position(g, d, opts);
            bool exact = res.status == genpos::SolveStatus::optimal;
            if (format == "json") {
                json j;
                j["status"] = exact ? "optimal" : "lower_bound_only";
                j["size"] = res.size;
                j["witness"] = res.witness;
                j["nodes"] = res.nodes;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << g.name << ": " << (exact ? "maximum" : "at least") << " " << res.size
                          << " (nodes " << res.nodes << ")\n  witness:";
                for (int v : res.witness) std::cout << ' ' << v;
                std::cout << '\n';
            }
            return exact ? 0 : 2;
        }

        if (label->parsed()) {
            auto g = genpos::load_graph(label_graph);
            if (!g.labels || g.labels->dim != 2)
                throw std::invalid_argument("label-check: graph needs two-dimensional coordinates");
            genpos::Labeling lab = label_scheme == "rotated" ? sheared(*g.labels) : *g.labels;
            auto d = genpos::all_pairs_distances(g, threads);
            auto cert = genpos::check_monotone_geodesic_labeling(g, d, lab, label_cap);
            bool pass = cert.verdict == genpos::LabelingVerdict::monotone_geodesic;
            if (format == "json") {
                json j;
                j["verdict"] = pass ? "monotone_geodesic" : "violated";
                if (cert.counterexample) {
                    auto [a, b, c] = *cert.counterexample;
                    j["counterexample"] = {a, b, c};
                    j["counterexample_labels"] = {lab.at(a), lab.at(b), lab.at(c)};
                } else {
                    j["counterexample"] = nullptr;
                }
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << g.name << " " << label_scheme << " labels: "
                          << (pass ? "monotone geodesic" : "violated") << '\n';
                if (cert.counterexample) {
                    auto [a, b, c] = *cert.counterexample;
                    std::cout << "  counterexample vertices " << a << ", " << b << ", " << c << '\n';
                }
            }
            return 0;
        }

        if (cover->parsed()) {
            genpos::Graph g;
            genpos::IsometricPathCover c;
            if (cover_benes > 0) {
                g = genpos::benes(cover_benes);
                c = genpos::benes_cover(cover_benes, cover_root);
            } else {
                if (cover_graph.empty())
                    throw std::invalid_argument("cover: give a graph file or --benes r");
                g = genpos::load_graph(cover_graph);
            }
            auto d = genpos::all_pairs_distances(g, threads);
            if (cover_benes == 0) c = genpos::greedy_isometric_cover_from(g, d, cover_root);
            bool verified = genpos::verify_isometric_cover(g, d, c);
            if (format == "json") {
                std::cout << cover_json(c, verified).dump(2) << '\n';
            } else {
                std::cout << g.name << ": " << c.paths.size() << " geodesics from " << c.root
                          << (verified ? "" : " (NOT a valid cover)") << ", bound "
                          << genpos::bound_from_cover(c) << '\n';
                for (const auto& p : c.paths) {
                    std::cout << " ";
                    for (int v : p) std::cout << ' ' << v;
                    std::cout << '\n';
                }
            }
            return verified ? 0 : 1;
        }

        if (report->parsed()) {
            genpos::ReportOptions opts;
            opts.scope = report_scope;
            opts.seed = seed;
            opts.threads = threads;
            opts.trials = report_trials;
            auto rows = genpos::run_report(opts);
            if (format == "json") std::cout << genpos::report_to_json(rows).dump(2) << '\n';
            else std::cout << genpos::report_to_table(rows);
            for (const auto& r : rows)
                if (r.status == "mismatch") return 1;
            return 0;
        }

        std::cout << app.help();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
