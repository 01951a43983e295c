#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "genpos/io.hpp"

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

// Runs the installed binary through the shell, merging stderr into stdout.
CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(GENPOS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("gen emits both formats and honors --output") {
    auto el = run_cli("gen path 5 --edgelist");
    REQUIRE(el.status == 0);
    auto g = genpos::from_edgelist(el.out);
    REQUIRE(g.n == 5);
    REQUIRE(g.edge_count() == 4);

    auto js = run_cli("gen grid 3 3");
    REQUIRE(js.status == 0);
    auto j = nlohmann::json::parse(js.out);
    REQUIRE(j["name"] == "grid-3x3");
    REQUIRE(j["n"] == 9);
    REQUIRE(j["labels"].size() == 9);

    auto out = temp_path("genpos-cli-bf2.json");
    auto of = run_cli("gen butterfly 2 -o " + out);
    REQUIRE(of.status == 0);
    auto loaded = genpos::load_graph(out);
    REQUIRE(loaded.n == 12);
    REQUIRE(loaded.edge_count() == 16);
    std::remove(out.c_str());
}

TEST_CASE("gen builds products from graph files") {
    auto a = temp_path("genpos-cli-p3.json");
    auto b = temp_path("genpos-cli-p3b.json");
    REQUIRE(run_cli("gen path 3 -o " + a).status == 0);
    REQUIRE(run_cli("gen path 3 -o " + b).status == 0);
    auto prod = run_cli("gen product strong " + a + " " + b);
    REQUIRE(prod.status == 0);
    auto j = nlohmann::json::parse(prod.out);
    REQUIRE(j["n"] == 9);
    REQUIRE(j["edges"].size() == 20);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("gen rejects bad input with exit code 1") {
    REQUIRE(run_cli("gen moebius 4").status == 1);
    auto r = run_cli("gen tri 0 3");
    REQUIRE(r.status == 1);
    REQUIRE(r.out.find("error:") != std::string::npos);
    REQUIRE(run_cli("gen product weak x y").status == 1);
    REQUIRE(run_cli("gen sgrid 3 3 --labeling sideways").status != 0);
}

TEST_CASE("verify reports certificates in json and table form") {
    auto host = temp_path("genpos-cli-grid66.json");
    REQUIRE(run_cli("gen grid 6 6 -o " + host).status == 0);

    auto ok = run_cli("--format json verify " + host + " --witness grid2-four");
    REQUIRE(ok.status == 0);
    auto j = nlohmann::json::parse(ok.out);
    REQUIRE(j["verdict"] == "general_position");
    REQUIRE(j["violating_triple"].is_null());
    REQUIRE(j["separation_k"].is_number());

    auto coords = run_cli("--format json verify " + host + " --set '[[0,0],[2,1],[3,4],[5,5]]'");
    REQUIRE(coords.status == 0);
    REQUIRE(nlohmann::json::parse(coords.out)["verdict"] == "violated");

    auto table = run_cli("verify " + host + " --witness grid2-four");
    REQUIRE(table.status == 0);
    REQUIRE(table.out.find("general position") != std::string::npos);
    std::remove(host.c_str());
}

TEST_CASE("verify wants exactly one set source") {
    auto path = temp_path("genpos-cli-p5.json");
    REQUIRE(run_cli("gen path 5 -o " + path).status == 0);

    auto bad = run_cli("verify " + path);
    REQUIRE(bad.status == 1);
    auto both = run_cli("verify " + path + " --set '[0,1]' --witness grid2-four");
    REQUIRE(both.status == 1);

    auto viol = run_cli("--format json verify " + path + " --set '[0,2,4]'");
    REQUIRE(viol.status == 0);
    auto j = nlohmann::json::parse(viol.out);
    REQUIRE(j["verdict"] == "violated");
    REQUIRE(j["violating_triple"] == nlohmann::json({0, 2, 4}));
    std::remove(path.c_str());
}

TEST_CASE("solve finds exact maxima and signals timeouts by exit code") {
    auto grid = temp_path("genpos-cli-grid44.json");
    REQUIRE(run_cli("gen grid 4 4 -o " + grid).status == 0);
    auto r = run_cli("--format json solve " + grid);
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["status"] == "optimal");
    REQUIRE(j["size"] == 4);
    REQUIRE(j["witness"].size() == 4);
    std::remove(grid.c_str());

    auto torus = temp_path("genpos-cli-torus99.json");
    REQUIRE(run_cli("gen torus 9 9 -o " + torus).status == 0);
    auto t = run_cli("--format json solve " + torus + " --time-limit 0.01");
    REQUIRE(t.status == 2);
    REQUIRE(nlohmann::json::parse(t.out)["status"] == "lower_bound_only");
    std::remove(torus.c_str());
}

TEST_CASE("solve honors forced vertices") {
    auto grid = temp_path("genpos-cli-grid55.json");
    REQUIRE(run_cli("gen grid 5 5 -o " + grid).status == 0);
    auto r = run_cli("--format json solve " + grid + " --forced 0");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["size"] == 3);
    std::remove(grid.c_str());
}

TEST_CASE("label-check distinguishes the two schemes") {
    auto sg = temp_path("genpos-cli-sgrid66.json");
    REQUIRE(run_cli("gen sgrid 6 6 -o " + sg).status == 0);

    auto natural = run_cli("--format json label-check " + sg);
    REQUIRE(natural.status == 0);
    auto jn = nlohmann::json::parse(natural.out);
    REQUIRE(jn["verdict"] == "violated");
    REQUIRE(jn["counterexample"].size() == 3);

    auto rotated = run_cli("--format json label-check " + sg + " --scheme rotated");
    REQUIRE(rotated.status == 0);
    REQUIRE(nlohmann::json::parse(rotated.out)["verdict"] == "monotone_geodesic");
    std::remove(sg.c_str());

    auto big = temp_path("genpos-cli-grid1110.json");
    REQUIRE(run_cli("gen grid 11 10 -o " + big).status == 0);
    REQUIRE(run_cli("label-check " + big).status == 1);
    REQUIRE(run_cli("label-check " + big + " --max-n 128").status == 0);
    std::remove(big.c_str());
}

TEST_CASE("cover emits verified geodesic covers") {
    auto r = run_cli("--format json cover --benes 2 --root 0");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["path_count"] == 7);
    REQUIRE(j["bound"] == 8);
    REQUIRE(j["verified"] == true);

    auto path = temp_path("genpos-cli-p6.json");
    REQUIRE(run_cli("gen path 6 -o " + path).status == 0);
    auto pr = run_cli("--format json cover " + path + " --root 0");
    REQUIRE(pr.status == 0);
    REQUIRE(nlohmann::json::parse(pr.out)["path_count"] == 1);
    std::remove(path.c_str());

    REQUIRE(run_cli("cover --root 0").status == 1); // neither graph nor --benes
}

TEST_CASE("report rows stay in expected ranges") {
    auto r = run_cli("--format json report --scope benes");
    REQUIRE(r.status == 0);
    auto rows = nlohmann::json::parse(r.out);
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() >= 4);
    for (const auto& row : rows) {
        REQUIRE(row["family"] == "benes");
        REQUIRE((row["status"] == "match" || row["status"] == "within_bounds"));
    }

    auto table = run_cli("report --scope boron");
    REQUIRE(table.status == 0);
    REQUIRE(table.out.find("boron") != std::string::npos);
}

TEST_CASE("self-test checks the witness library") {
    auto r = run_cli("--self-test");
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("0 failures") != std::string::npos);
}
