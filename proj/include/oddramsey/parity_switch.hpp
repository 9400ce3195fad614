#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oddramsey/colored_graph.hpp"

namespace oddramsey {

/// Result of a parity switch: an even-chromatic Hamilton cycle plus enough of
/// the construction to re-check it.
struct SwitchOutcome {
    Walk cycle;
    /// "c4-switch", "c6-case-1.1", "c6-case-1.2.1", "c6-case-1.2.2",
    /// "c6-case-1.3", "c6-case-2", "c6-case-3", "agreement-endgame", or
    /// "c6-exhaustive" when the case analysis has no path to build on (n <= 10).
    std::string provenance;
    /// The two Hamilton cycles whose symmetric difference carries the
    /// witness parity; absent for the agreement endgame.
    std::optional<std::pair<Walk, Walk>> candidates;
    /// Odd 4- or 6-cycle the final construction was built around.
    std::optional<Walk> witness;
    /// Every case visited, outermost first (relabellings and delegations).
    std::vector<std::string> chain;
};

/// Requires a 2-colouring, n even and min degree >= n/2 + 2.
SwitchOutcome switch_c4(const EdgeColoring& chi, const Walk& c4);
SwitchOutcome switch_c6(const EdgeColoring& chi, const Walk& c6);

struct PairRelation {
    Vertex x = 0, y = 0;
    bool agree = true;
    /// first common neighbour inspected
    Vertex certificate = 0;
};

struct AgreementPartition {
    /// 0 or 1 per vertex; the class of vertex 0 is 0.
    std::vector<int> side;
    std::vector<PairRelation> witness_table;

    int class_count() const;
};

/// Odd 4-cycle (mixed pair) or odd 6-cycle (transitivity or three classes).
struct OddWitness {
    Walk cycle;
};

std::variant<AgreementPartition, OddWitness> agreement_partition(const EdgeColoring& chi);

/// Even-chromatic Hamilton cycle for any 2-colouring with n even and
/// min degree >= n/2 + 2. A final census failure is reported as
/// internal_contradiction.
SwitchOutcome find_even_hamilton_2col(const EdgeColoring& chi);

}  // namespace oddramsey
