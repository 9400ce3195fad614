#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddramsey/colored_graph.hpp"

namespace oddramsey {

/// SplitMix64 (Steele, Lea, Flood). state += 0x9E3779B97F4A7C15, then the
/// usual xor-shift-multiply finaliser. The first output for seed 0 is
/// 0xE220A8397B1DCDAF.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, bound) by rejection of the biased top range.
    std::uint64_t below(std::uint64_t bound);
    /// true with probability num/den
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

/// K_n with i.i.d. uniform colours 1..r; edges are drawn in lexicographic
/// order (0,1), (0,2), ..., each taking 1 + below(r).
EdgeColoring random_coloring(int n, int r, std::uint64_t seed);

/// Random spanning subgraph of K_n with minimum degree >= min_deg and i.i.d.
/// uniform colours: edges are visited in a seeded shuffle and each is dropped
/// with probability 1/2 when both ends stay above min_deg.
EdgeColoring random_dense_coloring(int n, int min_deg, int r, std::uint64_t seed);

/// Vertices 0..n/2 form V_1, the rest V_2. Edges inside a part get colour 1;
/// a cross edge at the i-th vertex of V_1 (1-based) gets colour i.
EdgeColoring unique_upper_coloring(int n);

enum class CyclePredicate { has_unique, odd_chromatic, even_chromatic };

std::optional<CyclePredicate> parse_predicate(std::string_view s);
std::string_view to_string(CyclePredicate p);

bool satisfies(const ParityCensus& c, CyclePredicate p);

struct CycleVerdict {
    bool holds = true;
    /// lexicographically first Hamilton cycle violating the predicate
    std::optional<Walk> counterexample;
    std::uint64_t cycles_checked = 0;
};

/// Checks the predicate on every Hamilton cycle of the host (n <= enumeration cap).
CycleVerdict verify_every_cycle(const EdgeColoring& chi, CyclePredicate p);

enum class RamseyMode { odd, unique };

std::optional<RamseyMode> parse_mode(std::string_view s);
std::string_view to_string(RamseyMode m);

struct OracleResult {
    /// some r-colouring of K_n makes every Hamilton cycle satisfy the mode
    bool exists = false;
    /// the first such colouring in canonical order, when it exists
    std::optional<EdgeColoring> certificate;
    /// search nodes visited over restricted-growth colourings (colour classes
    /// introduced in order, first edge colour 1)
    std::uint64_t nodes = 0;
    std::uint64_t cycles = 0;
    std::string scheme = "restricted-growth";
};

/// Exhaustive decision of r_mode(n, C_n) <= r, pruning on the first cycle
/// that violates the mode. Throws cap_exceeded beyond `max_nodes` or when
/// n exceeds the enumeration cap.
OracleResult exact_ramsey(int n, RamseyMode mode, int r, std::uint64_t max_nodes = 500'000'000);

enum class AdversarialFamily {
    monochromatic,
    star_claws,      // colour c >= 2 is the star at vertex c - 2
    proper_folded,   // round-robin 1-factorisation, factor i gets colour 1 + i mod r
    sparse_rare,     // background colour 1, every other colour on 1..4 random edges
    split_halves,    // halves coloured like unique_upper_coloring, folded mod r
    nested_blocks,   // colour of uv is 1 + min(block(u), block(v)) for r blocks
};

inline constexpr int adversarial_family_count = 6;

std::string_view to_string(AdversarialFamily f);

/// Structured K_n colouring from `family`, vertex-relabelled by a seeded permutation.
EdgeColoring adversarial_coloring(AdversarialFamily family, int n, int r, std::uint64_t seed);

}  // namespace oddramsey
