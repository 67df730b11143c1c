#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "graph.hpp"

namespace klab {

/// Wire format: {"n": int, "edges": [[u,v],...], "labels": {"u,v": int}?}
/// with 0-based vertices and u < v in every pair.
inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.num_vertices();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!g.edge_labels().empty()) {
        nlohmann::json labels = nlohmann::json::object();
        for (const auto& [e, lab] : g.edge_labels())
            labels[std::to_string(e.first) + "," + std::to_string(e.second)] = lab;
        j["labels"] = labels;
    }
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("edges")) throw BadParams("graph JSON needs n and edges");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw BadParams("edge must be a pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    EdgeLabels labels;
    if (j.contains("labels")) {
        for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it) {
            std::istringstream key(it.key());
            int u = -1, v = -1;
            char comma = 0;
            key >> u >> comma >> v;
            if (comma != ',' || u < 0 || v < 0) throw BadParams("label key must be \"u,v\"");
            if (u > v) std::swap(u, v);
            labels[{u, v}] = it.value().get<int>();
        }
    }
    return Graph(n, edges, labels);
}

inline void write_graph_json(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw BadParams("cannot open for writing: " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

inline Graph read_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParams("cannot open graph file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BadParams(std::string("bad graph JSON: ") + e.what());
    }
    return graph_from_json(j);
}

inline std::string graph_to_dot(const Graph& g, const std::string& name = "g") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (g.has_label(u, v)) out << " [label=" << g.label(u, v) << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline void write_graph_dot(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw BadParams("cannot open for writing: " + path);
    out << graph_to_dot(g);
}

} // namespace klab
