#include "oddramsey/colored_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace oddramsey {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) fail(Status::invalid_input, "self-loop at vertex " + std::to_string(a));
}

Edge normalize(Edge e) { return Edge(e.u, e.v); }

Graph::Graph(int n) : n_(n) {
    if (n < 0) fail(Status::invalid_input, "negative vertex count");
    rows_.assign(static_cast<std::size_t>(n), DynBitset(static_cast<std::size_t>(n)));
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

std::size_t Graph::check(Vertex v) const {
    if (v < 0 || v >= n_) fail(Status::invalid_input, "vertex " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) fail(Status::invalid_input, "self-loop at vertex " + std::to_string(u));
    rows_[check(u)].set(check(v));
    rows_[check(v)].set(check(u));
}

void Graph::remove_edge(Vertex u, Vertex v) {
    rows_[check(u)].reset(check(v));
    rows_[check(v)].reset(check(u));
}

std::size_t Graph::edge_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        rows_[static_cast<std::size_t>(u)].for_each([&](std::size_t v) {
            if (static_cast<int>(v) > u) out.emplace_back(u, static_cast<int>(v));
        });
    return out;
}

bool Graph::is_complete() const {
    return edge_count() == static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::without(std::span<const Vertex> drop, std::vector<Vertex>& kept) const {
    std::vector<bool> gone(static_cast<std::size_t>(n_), false);
    for (auto v : drop) gone[check(v)] = true;
    kept.clear();
    for (int v = 0; v < n_; ++v)
        if (!gone[static_cast<std::size_t>(v)]) kept.push_back(v);
    return induced(kept);
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

EdgeColoring::EdgeColoring(Graph host, int palette)
    : host_(std::move(host)), palette_(palette),
      colors_(static_cast<std::size_t>(host_.order()) * static_cast<std::size_t>(host_.order()), 0) {
    if (palette < 1) fail(Status::invalid_input, "palette size must be at least 1");
}

EdgeColoring EdgeColoring::monochromatic(int n, int palette, Color c) {
    EdgeColoring chi(Graph::complete(n), palette);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) chi.set_color(u, v, c);
    return chi;
}

Color EdgeColoring::color(Vertex u, Vertex v) const {
    if (!host_.adjacent(u, v))
        fail(Status::invalid_input, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the host");
    return colors_[static_cast<std::size_t>(u) * static_cast<std::size_t>(order()) + static_cast<std::size_t>(v)];
}

void EdgeColoring::set_color(Vertex u, Vertex v, Color c) {
    if (!host_.adjacent(u, v))
        fail(Status::invalid_input, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the host");
    if (c < 1 || c > palette_) fail(Status::invalid_input, "colour " + std::to_string(c) + " outside palette");
    auto n = static_cast<std::size_t>(order());
    colors_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = c;
    colors_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = c;
}

bool EdgeColoring::is_total() const {
    for (const auto& e : host_.edges()) {
        Color c = color(e);
        if (c < 1 || c > palette_) return false;
    }
    return true;
}

void ParityCensus::add(Color c, int times) {
    if (c < 1) fail(Status::invalid_input, "colour must be positive");
    if (static_cast<std::size_t>(c) >= counts_.size()) counts_.resize(static_cast<std::size_t>(c) + 1, 0);
    counts_[static_cast<std::size_t>(c)] += times;
}

int ParityCensus::total() const {
    int t = 0;
    for (auto c : counts_) t += c;
    return t;
}

std::vector<Color> ParityCensus::odd_colors() const {
    std::vector<Color> out;
    for (std::size_t c = 1; c < counts_.size(); ++c)
        if (counts_[c] % 2 != 0) out.push_back(static_cast<Color>(c));
    return out;
}

std::vector<Color> ParityCensus::unique_colors() const {
    std::vector<Color> out;
    for (std::size_t c = 1; c < counts_.size(); ++c)
        if (counts_[c] == 1) out.push_back(static_cast<Color>(c));
    return out;
}

DynBitset ParityCensus::parity_vector() const {
    DynBitset b(counts_.empty() ? 0 : counts_.size() - 1);
    for (std::size_t c = 1; c < counts_.size(); ++c)
        if (counts_[c] % 2 != 0) b.set(c - 1);
    return b;
}

ParityCensus& ParityCensus::operator+=(const ParityCensus& o) {
    if (o.counts_.size() > counts_.size()) counts_.resize(o.counts_.size(), 0);
    for (std::size_t c = 1; c < o.counts_.size(); ++c) counts_[c] += o.counts_[c];
    return *this;
}

bool ParityCensus::operator==(const ParityCensus& o) const {
    std::size_t m = std::max(counts_.size(), o.counts_.size());
    for (std::size_t c = 1; c < m; ++c)
        if (count(static_cast<Color>(c)) != o.count(static_cast<Color>(c))) return false;
    return true;
}

ParityCensus parity_census(const EdgeColoring& chi, std::span<const Edge> edges) {
    ParityCensus census(chi.palette());
    for (const auto& e : edges) census.add(chi.color(e));
    return census;
}

std::vector<Edge> Walk::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
    if (closed && vertices.size() >= 3) out.emplace_back(vertices.back(), vertices.front());
    return out;
}

Walk Walk::reversed() const {
    Walk w = *this;
    std::reverse(w.vertices.begin(), w.vertices.end());
    return w;
}

bool is_valid_walk(const Graph& g, const Walk& w) {
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (auto v : w.vertices) {
        if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (w.closed && w.vertices.size() < 3) return false;
    for (const auto& e : w.edges())
        if (!g.adjacent(e.u, e.v)) return false;
    return true;
}

bool is_hamilton_cycle(const Graph& g, const Walk& w) {
    return w.closed && static_cast<int>(w.size()) == g.order() && is_valid_walk(g, w);
}

bool is_hamilton_path(const Graph& g, const Walk& w, Vertex x, Vertex y) {
    if (w.closed || static_cast<int>(w.size()) != g.order() || !is_valid_walk(g, w) || w.vertices.empty())
        return false;
    return (w.front() == x && w.back() == y) || (w.front() == y && w.back() == x);
}

ParityCensus parity_census(const EdgeColoring& chi, const Walk& w) {
    auto es = w.edges();
    return parity_census(chi, es);
}

std::vector<Edge> symmetric_difference(const Walk& c1, const Walk& c2) {
    auto a = c1.vertices, b = c2.vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (!c1.closed || !c2.closed || a != b)
        fail(Status::invalid_input, "symmetric difference needs two closed cycles on one vertex set");
    auto e1 = c1.edges(), e2 = c2.edges();
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    std::vector<Edge> out;
    std::set_symmetric_difference(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(out));
    return out;
}

}  // namespace oddramsey
