#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "genpos/graph.hpp"

namespace genpos {

// Plain text exchange format: a header line "n m" followed by m lines
// "u v" with 0-based endpoints.  Carries no name or coordinates.
inline std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.n << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph from_edgelist(const std::string& text, std::string name = "graph",
                           bool allow_disconnected = false) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list: malformed header, expected 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: fewer edge lines than the header promises");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw std::invalid_argument("edge list: trailing tokens after the last edge");
    return build_graph(static_cast<int>(n), edges, std::move(name), allow_disconnected);
}

inline nlohmann::json to_json(const Graph& g) {
    nlohmann::json j;
    j["name"] = g.name;
    j["n"] = g.n;
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.labels) {
        auto labels = nlohmann::json::array();
        for (const auto& c : g.labels->coords) labels.push_back(c);
        j["labels"] = std::move(labels);
    } else {
        j["labels"] = nullptr;
    }
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j, bool allow_disconnected = false) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: need an object with 'n' and 'edges'");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::string name = j.value("name", std::string("graph"));
    Graph g = build_graph(n, edges, name, allow_disconnected);
    if (j.contains("labels") && !j.at("labels").is_null()) {
        const auto& jl = j.at("labels");
        Labeling lab;
        lab.coords.reserve(jl.size());
        for (const auto& c : jl) lab.coords.push_back(c.get<std::vector<int>>());
        lab.dim = lab.coords.empty() ? 0 : static_cast<int>(lab.coords[0].size());
        g = with_labels(std::move(g), std::move(lab));
    }
    return g;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << content;
}

// Loads either format, sniffing by the first non-space byte.
inline Graph load_graph(const std::string& path, bool allow_disconnected = false) {
    std::string text = read_file(path);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return graph_from_json(nlohmann::json::parse(text), allow_disconnected);
    // Derive a name from the file name, sans directory and extension.
    auto slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
    return from_edgelist(text, base, allow_disconnected);
}

} // namespace genpos
