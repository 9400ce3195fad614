#include "oddramsey/io.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace oddramsey::io {

namespace {

int get_int(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer())
        fail(Status::invalid_input, std::string("missing or non-integer field '") + key + "'");
    return it->get<int>();
}

}  // namespace

EdgeColoring instance_from_json(const json& j) {
    if (!j.is_object()) fail(Status::invalid_input, "instance must be a JSON object");
    int n = get_int(j, "n");
    int r = get_int(j, "r");
    if (n < 1) fail(Status::invalid_input, "n must be at least 1");
    if (r < 1) fail(Status::invalid_input, "r must be at least 1");
    auto it = j.find("edges");
    if (it == j.end() || !it->is_array()) fail(Status::invalid_input, "missing 'edges' array");

    struct Raw { int u, v, c; };
    std::vector<Raw> raw;
    std::set<std::pair<int, int>> seen;
    Graph g(n);
    for (const auto& e : *it) {
        int u = get_int(e, "u"), v = get_int(e, "v"), c = get_int(e, "c");
        if (u == v) fail(Status::invalid_input, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n) fail(Status::invalid_input, "edge endpoint out of range");
        if (u > v) fail(Status::invalid_input, "edges must be listed with u < v");
        if (c < 1 || c > r) fail(Status::invalid_input, "colour " + std::to_string(c) + " outside [1, r]");
        if (!seen.insert({u, v}).second)
            fail(Status::invalid_input, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        g.add_edge(u, v);
        raw.push_back({u, v, c});
    }
    EdgeColoring chi(std::move(g), r);
    for (const auto& e : raw) chi.set_color(e.u, e.v, e.c);
    return chi;
}

json instance_to_json(const EdgeColoring& chi) {
    json edges = json::array();
    for (const auto& e : chi.host().edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"c", chi.color(e)}});
    return json{{"n", chi.order()}, {"r", chi.palette()}, {"edges", std::move(edges)}};
}

EdgeColoring read_instance(const std::string& path) {
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) fail(Status::invalid_input, "cannot open " + path);
    }
    std::istream& in = path == "-" ? std::cin : file;
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        fail(Status::invalid_input, std::string("malformed JSON: ") + ex.what());
    }
    return instance_from_json(j);
}

json walk_to_json(const Walk& w) { return json(w.vertices); }

json census_to_json(const ParityCensus& c) {
    json out = json::object();
    for (int col = 1; col <= c.palette(); ++col)
        if (c.count(col) > 0) out[std::to_string(col)] = c.count(col);
    return out;
}

json trace_to_json(const std::vector<LedgerEvent>& trace) {
    json out = json::array();
    for (const auto& e : trace)
        out.push_back({{"step", e.step}, {"action", e.action}, {"color", e.color}, {"vertices", e.vertices}});
    return out;
}

std::string to_dot(const EdgeColoring& chi) {
    static constexpr std::array<const char*, 10> kPalette = {
        "black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gray"};
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < chi.order(); ++v) os << "  " << v << ";\n";
    for (const auto& e : chi.host().edges()) {
        Color c = chi.color(e);
        os << "  " << e.u << " -- " << e.v << " [color=\"" << kPalette[static_cast<std::size_t>(c - 1) % kPalette.size()]
           << "\", label=\"" << c << "\", colorindex=" << c << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace oddramsey::io
