#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddramsey/colored_graph.hpp"

namespace oddramsey {

struct LedgerEvent {
    std::string step;
    std::string action;
    Color color = 0;
    std::vector<Vertex> vertices;
};

/// Unused/free status of every colour. Colours only ever move unused -> free.
class ColorLedger {
public:
    ColorLedger() = default;
    explicit ColorLedger(int palette);

    int palette() const noexcept { return static_cast<int>(unused_.size()) - 1; }
    bool unused(Color c) const { return unused_[static_cast<std::size_t>(c)]; }
    bool free(Color c) const { return !unused(c); }
    std::vector<Color> unused_colors() const;
    int unused_count() const;
    /// Lowest free colour, or 0 if every colour is unused.
    Color lowest_free() const;

    void free_color(Color c, const std::string& step, const std::string& reason, std::vector<Vertex> where = {});
    void note(LedgerEvent e) { history_.push_back(std::move(e)); }
    const std::vector<LedgerEvent>& history() const noexcept { return history_; }

private:
    std::vector<bool> unused_;
    std::vector<LedgerEvent> history_;
};

struct Claw {
    Vertex center = 0;
    std::array<Vertex, 3> leaves{};
    Color color = 0;
};

struct PreservedCollection {
    std::vector<Claw> claws;
    /// Preserved monochromatic paths, later merged; ids >= n are virtual.
    std::vector<std::vector<Vertex>> paths;
    /// R, over the real vertices.
    DynBitset remaining;
    /// Cherry centres taken from R in the cherry-merging step.
    std::vector<Vertex> cherry_centers;
};

/// Singleton u_j paired with virtual v_j = n + j. The virtual vertex copies
/// u_j's colours to every other vertex; the gadget edge u_j v_j gets a free colour.
struct VirtualVertexMap {
    int real_order = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;

    bool is_virtual(Vertex v) const { return v >= real_order; }
    Vertex twin(Vertex v) const;
};

struct UniqueState {
    EdgeColoring chi;
    /// chi extended by the virtual vertices (equal to chi before they exist)
    EdgeColoring work;
    ColorLedger ledger;
    PreservedCollection coll;
    VirtualVertexMap virt;
    /// one entry per restart of the claw step after an augmenting exchange
    int restarts = 0;
};

UniqueState make_unique_state(const EdgeColoring& chi);

/// v centres a claw in an unused colour with all leaves in R.
bool is_dangerous(const UniqueState& st, Vertex v);

/// Greedy maximal collection of disjoint monochromatic claws in distinct
/// colours, extending `seed`. Centres ascending, colours ascending, leaves
/// lexicographic. Resets R, the ledger and the paths.
void max_claw_collection(UniqueState& st, const std::vector<Claw>& seed = {});

/// One pass of the dangerous-leaf exchange. Returns an enlarged claw
/// collection if an exchange exposes a second disjoint claw (the caller restarts
/// the claw step from it), otherwise nullopt after all exchanges are done.
std::optional<std::vector<Claw>> resolve_dangerous(UniqueState& st);

/// Cherries then 2-matchings per unused colour, then claw splitting and the
/// virtual singletons.
void harvest_cherries_matchings(UniqueState& st);

/// Endpoint merges across free edges and same-colour edge pairs.
void merge_endpoints(UniqueState& st);

/// |U| = 1 after endpoint merging; cycle on the augmented vertex set.
Walk special_case_single_unused(UniqueState& st);

/// Endpoints of the (at most two) final paths and their attachment vertices in R.
struct Terminals {
    Vertex w1 = -1, w1p = -1, w2 = -1, w2p = -1;
    Vertex z1 = -1, z1p = -1, z2 = -1, z2p = -1;
};

/// Merges down to two paths via cherries centred in R, then picks attachments.
/// A lone path is kept as is and only receives z1, z1'.
Terminals merge_cherries(UniqueState& st);

/// Closes the cycle through a Dirac graph on R minus C with contracted terminals.
Walk close_cycle(UniqueState& st, const Terminals& t);

/// Contracts every gadget edge, returning a cycle of the original K_n.
Walk expand_virtual(const UniqueState& st, const Walk& aug);

struct UniqueOptions {
    /// run even when r > n/4; the result is then not guaranteed
    bool best_effort = false;
};

struct UniqueResult {
    Walk cycle;
    ParityCensus census;
    std::vector<LedgerEvent> trace;
    bool guaranteed = true;
    int restarts = 0;
};

/// Hamilton cycle of K_n with no colour used exactly once, for r <= n/4.
UniqueResult find_unique_free_hamilton(const EdgeColoring& chi, UniqueOptions opts = {});

}  // namespace oddramsey
