#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddramsey/colored_graph.hpp"

namespace oddramsey {

/// All S of size s' (sorted, lexicographic order) such that every colour
/// occurs an even number of times on the edges from u to S.
std::vector<std::vector<Vertex>> even_neighborhoods(const EdgeColoring& chi, Vertex u, int s_prime);

/// K_{s',t'} with every V_2 vertex seeing an all-even census towards V_1.
struct StronglyEvenWitness {
    std::vector<Vertex> v1;
    std::vector<Vertex> v2;
};

bool is_strongly_even(const EdgeColoring& chi, const std::vector<Vertex>& v1, const std::vector<Vertex>& v2);

/// Indexes every even s'-neighbourhood by its vertex set; the first set (in
/// lexicographic order) owned by at least t' vertices gives the witness, with
/// its t' lowest owners. nullopt certifies that no such K_{s',t'} exists.
std::optional<StronglyEvenWitness> find_strongly_even(const EdgeColoring& chi, int s_prime, int t_prime);

struct HyperEdge {
    Vertex label = 0;
    /// colours of odd multiplicity, ascending; size 1 or 3
    std::vector<Color> support;
};

struct ParityHypergraph {
    int palette = 0;
    std::vector<HyperEdge> edges;
};

/// e_u for every u in v2, from the colours towards w1, w2, w3.
ParityHypergraph build_parity_hypergraph(const EdgeColoring& chi, Vertex w1, Vertex w2, Vertex w3, const std::vector<Vertex>& v2);

struct EvenCoverLimits {
    /// exhaustive subset search runs only below this many k-subsets
    std::uint64_t exhaustive_subsets = 10'000'000;
    /// half-subsets stored by the meet-in-the-middle tier
    std::uint64_t mitm_entries = 2'000'000;
};

struct EvenCoverResult {
    /// ok, not_found (certified) or unknown
    Status status = Status::unknown;
    /// indices into the hypergraph's edge list, ascending
    std::vector<std::size_t> edges;
    /// duplicate-pairs, meet-in-the-middle, exhaustive, independent (rank certificate)
    std::string tier;
};

bool is_even_cover(const ParityHypergraph& h, const std::vector<std::size_t>& edges);

EvenCoverResult find_even_cover(const ParityHypergraph& h, int k, EvenCoverLimits limits = {});

struct KstOptions {
    /// size of V_2; 0 picks the default described in default_t_prime
    int t_prime = 0;
    /// try further w-triples (lexicographic) when one fails
    bool retry_w = false;
    /// on failure, certify not_found by exhaustive search when affordable
    bool certify = true;
    EvenCoverLimits limits{};
};

/// ceil(r^(3/2 + 1/(2 floor(t/8)))), capped at n - (s - 3) - 3; the cap
/// alone when floor(t/8) = 0.
int default_t_prime(int n, int r, int s, int t);

struct KstResult {
    Status status = Status::unknown;
    /// stage that produced the result or the failure
    std::string stage;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    /// the strongly-even part and the w-triple (empty for the even-s route)
    std::vector<Vertex> v1;
    std::vector<Vertex> w;
    int t_prime = 0;
    ParityCensus census;
};

/// Even-chromatic K_{s,t}. Odd s >= 3: strongly-even K_{s-3,t'}, a w-triple and
/// an even cover in the parity hypergraph. Even s: a strongly-even K_{s,t}.
/// not_found is returned only with an exhaustive certificate.
KstResult find_even_chromatic_kst(const EdgeColoring& chi, int s, int t, KstOptions opts = {});

struct BruteKstResult {
    bool found = false;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
};

/// Exhaustive scan over A (size s) then B (size t), both lexicographic.
/// Throws cap_exceeded when C(n,s)C(n-s,t) exceeds `budget`.
BruteKstResult brute_force_even_kst(const EdgeColoring& chi, int s, int t, std::uint64_t budget = 100'000'000);

}  // namespace oddramsey
