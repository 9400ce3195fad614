#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oddramsey/colored_graph.hpp"

namespace oddramsey {

/// One edge inserted by the closure, with the degree sum that licensed it.
struct ClosureStep {
    Edge edge;
    int degree_sum = 0;
};

/// Replayable record of a degree-sum closure.
struct ClosureTrace {
    Graph base;
    int threshold = 0;
    std::vector<ClosureStep> added;

    Graph closure() const;
};

/// Repeatedly joins non-adjacent x, y with deg(x) + deg(y) >= threshold until
/// no such pair remains. Pairs are scanned lexicographically in sweeps.
ClosureTrace bondy_chvatal_closure(const Graph& g, int threshold);

/// Turns a Hamilton cycle of the closure into one of the base graph by
/// removing inserted edges newest-first with crossing-pair rotations.
/// Requires threshold >= order.
Walk unwind_closure(const ClosureTrace& trace, const Walk& cycle);

/// Search budget for the exhaustive backtracking routines.
struct SearchLimits {
    std::uint64_t max_nodes = 200'000'000;
};

/// Exhaustive Hamilton cycle search. nullopt means no cycle exists; throws
/// cap_exceeded when the node budget runs out first.
std::optional<Walk> backtrack_hamilton_cycle(const Graph& g, SearchLimits limits = {});
/// Exhaustive search for a Hamilton path with endpoints x and y (returned x first).
std::optional<Walk> backtrack_hamilton_path(const Graph& g, Vertex x, Vertex y, SearchLimits limits = {});

/// Hamilton {x,y}-path through an auxiliary vertex joined to x and y, the
/// closure at threshold n+1 and unwinding; falls back to backtracking on the
/// closure. Throws not_found when no such path exists.
Walk hamilton_path_between(const Graph& g, Vertex x, Vertex y);

/// Which hypothesis of the strengthened Ore lemma applied.
enum class OreCase {
    even_dense,     // n even, more than n/2 vertices of degree >= n/2+1
    even_balanced,  // n even, exactly n/2 such vertices
    odd_dense,      // n odd, more than (n+3)/2 vertices of degree >= (n+1)/2
    none,
};

OreCase classify_ore_case(const Graph& g);

struct StrongOreOptions {
    /// When the hypotheses do not cover the request, run exhaustive search
    /// instead of reporting precondition_failed.
    bool fallback = false;
};

struct StrongOreResult {
    Walk path;
    OreCase which = OreCase::none;
    /// interleaved construction over the independent low-degree class was used
    bool interleaved = false;
    bool via_fallback = false;
};

StrongOreResult strong_ore_path(const Graph& g, Vertex x, Vertex y, StrongOreOptions opts = {});

/// Hamilton cycle via closure at threshold n, unwinding, else backtracking.
Walk dirac_hamilton_cycle(const Graph& g);

/// Hamilton cycle not using `forbidden` (backtracking on g minus that edge).
Walk hamilton_cycle_avoiding_edge(const Graph& g, Edge forbidden);

/// {a,b}-path of length at most 2 avoiding `avoid`; the direct edge wins,
/// otherwise the lowest-id common neighbour.
Walk short_connector(const Graph& g, Vertex a, Vertex b, std::span<const Vertex> avoid);

/// Enumeration cap: 12 unless the ODDRAMSEY_MAX_N environment variable overrides it.
int enumeration_cap();

/// Resumable stream of all Hamilton cycles, each once, in canonical form:
/// starting at 0 with second vertex < last vertex, in lexicographic order.
class HamiltonCycleEnumerator {
public:
    explicit HamiltonCycleEnumerator(const Graph& g, int cap = enumeration_cap());

    std::optional<Walk> next();

private:
    const Graph* g_;
    int n_;
    std::vector<Vertex> path_;
    std::vector<Vertex> cursor_;
    DynBitset visited_;
    bool done_ = false;
};

std::uint64_t count_hamilton_cycles(const Graph& g, int cap = enumeration_cap());

}  // namespace oddramsey
