#pragma once

#include <compare>
#include <span>
#include <vector>

#include "oddramsey/bitset.hpp"
#include "oddramsey/error.hpp"

namespace oddramsey {

using Vertex = int;
using Color = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b);

    auto operator<=>(const Edge&) const = default;
};

Edge normalize(Edge e);

/// Simple undirected graph on 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    bool adjacent(Vertex u, Vertex v) const { return rows_[check(u)].test(static_cast<std::size_t>(check(v))); }
    int degree(Vertex v) const { return static_cast<int>(rows_[check(v)].count()); }
    const DynBitset& neighbors(Vertex v) const { return rows_[check(v)]; }
    std::vector<Vertex> neighbor_list(Vertex v) const { return rows_[check(v)].to_vector(); }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::size_t edge_count() const;
    std::vector<Edge> edges() const;
    bool is_complete() const;

    /// Subgraph induced on `keep`, relabelled 0..|keep|-1 in the order given.
    Graph induced(std::span<const Vertex> keep) const;
    /// Graph with `drop` deleted; `kept` receives the surviving original ids.
    Graph without(std::span<const Vertex> drop, std::vector<Vertex>& kept) const;

    DynBitset empty_set() const { return DynBitset(static_cast<std::size_t>(n_)); }

    bool operator==(const Graph&) const = default;

private:
    std::size_t check(Vertex v) const;

    int n_ = 0;
    std::vector<DynBitset> rows_;
};

int min_degree(const Graph& g);

/// Total edge colouring of a host graph with palette 1..r.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(Graph host, int palette);

    /// All edges of K_n receive colour `c`.
    static EdgeColoring monochromatic(int n, int palette, Color c = 1);

    const Graph& host() const noexcept { return host_; }
    int order() const noexcept { return host_.order(); }
    int palette() const noexcept { return palette_; }

    /// Colour of a host edge; throws invalid_input for non-edges.
    Color color(Vertex u, Vertex v) const;
    Color color(Edge e) const { return color(e.u, e.v); }
    void set_color(Vertex u, Vertex v, Color c);

    /// Every host edge has a colour in 1..r.
    bool is_total() const;

    bool operator==(const EdgeColoring&) const = default;

private:
    Graph host_;
    int palette_ = 1;
    std::vector<Color> colors_;  // n*n, 0 for non-edges
};

/// Per-colour occurrence counts over an edge multiset.
class ParityCensus {
public:
    ParityCensus() = default;
    explicit ParityCensus(int palette) : counts_(static_cast<std::size_t>(palette) + 1, 0) {}

    int palette() const noexcept { return static_cast<int>(counts_.size()) - 1; }
    int count(Color c) const { return c >= 0 && c < static_cast<int>(counts_.size()) ? counts_[static_cast<std::size_t>(c)] : 0; }
    void add(Color c, int times = 1);
    int total() const;

    std::vector<Color> odd_colors() const;
    std::vector<Color> unique_colors() const;
    bool is_even() const { return odd_colors().empty(); }
    bool has_odd() const { return !is_even(); }
    bool has_unique() const { return !unique_colors().empty(); }
    /// Parity pattern over colours 1..r as a bit vector (bit c-1).
    DynBitset parity_vector() const;

    ParityCensus& operator+=(const ParityCensus& o);
    friend ParityCensus operator+(ParityCensus a, const ParityCensus& b) { return a += b; }
    bool operator==(const ParityCensus& o) const;

    const std::vector<int>& raw() const noexcept { return counts_; }

private:
    std::vector<int> counts_;
};

ParityCensus parity_census(const EdgeColoring& chi, std::span<const Edge> edges);

/// Vertex sequence, optionally closed into a cycle.
struct Walk {
    std::vector<Vertex> vertices;
    bool closed = false;

    std::size_t size() const noexcept { return vertices.size(); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    std::vector<Edge> edges() const;
    Walk reversed() const;

    bool operator==(const Walk&) const = default;
};

inline Walk make_path(std::vector<Vertex> vs) { return Walk{std::move(vs), false}; }
inline Walk make_cycle(std::vector<Vertex> vs) { return Walk{std::move(vs), true}; }

/// Distinct vertices and every consecutive pair adjacent in `g`.
bool is_valid_walk(const Graph& g, const Walk& w);
bool is_hamilton_cycle(const Graph& g, const Walk& w);
bool is_hamilton_path(const Graph& g, const Walk& w, Vertex x, Vertex y);

ParityCensus parity_census(const EdgeColoring& chi, const Walk& w);

/// E(c1) symmetric-difference E(c2), sorted. Both must be Hamilton cycles on one vertex set.
std::vector<Edge> symmetric_difference(const Walk& c1, const Walk& c2);

}  // namespace oddramsey
