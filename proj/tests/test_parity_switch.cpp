#include <map>
#include <set>

#include "doctest.h"
#include "oddramsey/hamilton.hpp"
#include "oddramsey/parity_switch.hpp"
#include "test_support.hpp"

using namespace oddramsey;
using testsupport::all_even;
using testsupport::count_colors;

namespace {

Status status_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.status();
    }
    return Status::ok;
}

std::vector<Edge> sorted_edges(const Walk& w) {
    auto es = w.edges();
    std::sort(es.begin(), es.end());
    return es;
}

/// Checks everything an outcome claims, using only direct edge lookups.
void check_outcome(const EdgeColoring& chi, const SwitchOutcome& out) {
    REQUIRE(is_hamilton_cycle(chi.host(), out.cycle));
    CHECK(all_even(count_colors(chi, out.cycle)));
    if (!out.candidates) return;
    const auto& [c1, c2] = *out.candidates;
    REQUIRE(is_hamilton_cycle(chi.host(), c1));
    REQUIRE(is_hamilton_cycle(chi.host(), c2));
    CHECK(all_even(count_colors(chi, c1)) != all_even(count_colors(chi, c2)));
    REQUIRE(out.witness);
    auto diff = symmetric_difference(c1, c2);
    const bool parity_only = out.provenance == "c6-case-1.2.1" || out.provenance == "c6-case-1.2.2";
    if (parity_only) {
        int ones = 0, wit = 0;
        for (const auto& e : diff) ones += chi.color(e) == 1;
        for (const auto& e : out.witness->edges()) wit += chi.color(e) == 1;
        CHECK(ones % 2 == wit % 2);
        CHECK(diff.size() == 6);
    } else {
        CHECK(diff == sorted_edges(*out.witness));
    }
}

}  // namespace

TEST_CASE("C4 switch on K6 with one off-colour witness edge") {
    EdgeColoring chi = EdgeColoring::monochromatic(6, 2, 1);
    chi.set_color(0, 1, 2);
    auto out = switch_c4(chi, make_cycle({0, 1, 2, 3}));
    CHECK(out.provenance == "c4-switch");
    check_outcome(chi, out);
    auto census = parity_census(chi, out.cycle);
    CHECK(census.count(1) == 6);
    CHECK(census.count(2) == 0);
}

TEST_CASE("switch witnesses are validated") {
    EdgeColoring chi = EdgeColoring::monochromatic(6, 2, 1);
    chi.set_color(0, 1, 2);
    chi.set_color(2, 3, 2);
    CHECK(status_of([&] { switch_c4(chi, make_cycle({0, 1, 2, 3})); }) == Status::bad_witness);
    CHECK(status_of([&] { switch_c6(chi, make_cycle({0, 1, 4, 5, 2, 3})); }) == Status::bad_witness);
    CHECK(status_of([&] { switch_c4(chi, make_cycle({0, 1, 2})); }) == Status::bad_witness);
}

TEST_CASE("switch preconditions") {
    EdgeColoring three = EdgeColoring::monochromatic(6, 3, 1);
    CHECK(status_of([&] { switch_c4(three, make_cycle({0, 1, 2, 3})); }) == Status::precondition_failed);
    EdgeColoring odd = EdgeColoring::monochromatic(7, 2, 1);
    CHECK(status_of([&] { find_even_hamilton_2col(odd); }) == Status::precondition_failed);
    EdgeColoring sparse(Graph::cycle(8), 2);
    for (const auto& e : sparse.host().edges()) sparse.set_color(e.u, e.v, 1);
    CHECK(status_of([&] { agreement_partition(sparse); }) == Status::precondition_failed);
}

TEST_CASE("C4 switch identities on random instances") {
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 6 + 2 * (trial % 5);
        auto chi = testsupport::random_dense_2col(n, n / 2 + 2, rng);
        auto c4 = testsupport::find_odd_c4(chi);
        if (!c4) continue;
        auto out = switch_c4(chi, *c4);
        check_outcome(chi, out);
        CHECK(symmetric_difference(out.candidates->first, out.candidates->second) == sorted_edges(*c4));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("C6 case 1.1 on K8") {
    EdgeColoring chi = EdgeColoring::monochromatic(8, 2, 1);
    chi.set_color(0, 1, 2);
    chi.set_color(2, 3, 2);
    chi.set_color(4, 5, 2);
    auto out = switch_c6(chi, make_cycle({0, 1, 2, 3, 4, 5}));
    CHECK(out.provenance == "c6-case-1.1");
    check_outcome(chi, out);
    CHECK(symmetric_difference(out.candidates->first, out.candidates->second) == sorted_edges(make_cycle({0, 1, 2, 3, 4, 5})));
}

TEST_CASE("C6 case 1.2 and 1.3 on bipartite remainders") {
    std::set<std::string> seen;
    for (int m = 2; m <= 5; ++m)
        for (Vertex a = 0; a < 2 * m; ++a)
            for (Vertex d = 0; d < 2 * m; ++d) {
                if (a == d) continue;
                for (bool raise : {false, true}) {
                    auto inst = testsupport::bipartite_hexagon(m, a, d, raise);
                    auto out = switch_c6(inst.chi, inst.hexagon);
                    check_outcome(inst.chi, out);
                    CHECK(out.provenance.rfind(raise ? "c6-case-1.3" : "c6-case-1.2", 0) == 0);
                    seen.insert(out.provenance);
                }
            }
    CHECK(seen.count("c6-case-1.2.1") == 1);
    CHECK(seen.count("c6-case-1.2.2") == 1);
    CHECK(seen.count("c6-case-1.3") == 1);
}

TEST_CASE("C6 switch on random odd hexagons reaches every case") {
    std::mt19937_64 rng(29);
    std::map<std::string, int> tally;
    for (int trial = 0; trial < 600; ++trial) {
        int n = 8 + 2 * (trial % 4);
        auto chi = testsupport::random_dense_2col(n, n / 2 + 2, rng);
        auto c6 = testsupport::random_odd_c6(chi, rng, trial % 3 != 0);
        if (!c6) continue;
        auto out = switch_c6(chi, *c6);
        check_outcome(chi, out);
        for (const auto& s : out.chain) tally[s]++;
    }
    for (auto tag : {"c4-pretest", "c6-case-1.1", "c6-case-1.3", "c6-case-2", "c6-case-3", "c6-mirror"})
        CHECK_MESSAGE(tally[tag] > 0, tag);
}

TEST_CASE("agreement partition") {
    SUBCASE("monochromatic K8 is one class") {
        auto res = agreement_partition(EdgeColoring::monochromatic(8, 2, 1));
        REQUIRE(std::holds_alternative<AgreementPartition>(res));
        CHECK(std::get<AgreementPartition>(res).class_count() == 1);
    }
    SUBCASE("crossing colouring of K8 gives the bipartition") {
        EdgeColoring chi(Graph::complete(8), 2);
        for (const auto& e : chi.host().edges()) chi.set_color(e.u, e.v, (e.u < 3) != (e.v < 3) ? 1 : 2);
        auto res = agreement_partition(chi);
        REQUIRE(std::holds_alternative<AgreementPartition>(res));
        const auto& side = std::get<AgreementPartition>(res).side;
        for (int v = 0; v < 8; ++v) CHECK(side[static_cast<std::size_t>(v)] == (v < 3 ? 0 : 1));
    }
    SUBCASE("planted mixed pair yields an odd C4") {
        EdgeColoring chi = EdgeColoring::monochromatic(8, 2, 1);
        chi.set_color(0, 2, 2);
        auto res = agreement_partition(chi);
        REQUIRE(std::holds_alternative<OddWitness>(res));
        const auto& w = std::get<OddWitness>(res).cycle;
        CHECK(w.size() == 4);
        CHECK(is_valid_walk(chi.host(), w));
        CHECK_FALSE(all_even(count_colors(chi, w)));
    }
}

TEST_CASE("returned partitions survive exhaustive re-verification") {
    std::mt19937_64 rng(31);
    int partitions = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 8 + 2 * (trial % 4);
        Graph g = testsupport::random_dense_graph(n, n / 2 + 2, rng);
        // colours from a random vertex bipartition, occasionally perturbed
        std::vector<int> bit(static_cast<std::size_t>(n));
        for (auto& b : bit) b = static_cast<int>(rng() % 2);
        EdgeColoring chi(g, 2);
        for (const auto& e : g.edges()) chi.set_color(e.u, e.v, 1 + (bit[static_cast<std::size_t>(e.u)] ^ bit[static_cast<std::size_t>(e.v)]));
        if (trial % 2) {
            auto es = g.edges();
            auto e = es[rng() % es.size()];
            chi.set_color(e.u, e.v, 3 - chi.color(e));
        }
        auto res = agreement_partition(chi);
        if (auto* w = std::get_if<OddWitness>(&res)) {
            CHECK(is_valid_walk(g, w->cycle));
            CHECK(w->cycle.closed);
            CHECK_FALSE(all_even(count_colors(chi, w->cycle)));
            continue;
        }
        ++partitions;
        const auto& side = std::get<AgreementPartition>(res).side;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (int u = 0; u < n; ++u) {
                    if (!g.adjacent(x, u) || !g.adjacent(y, u)) continue;
                    bool same_colour = chi.color(x, u) == chi.color(y, u);
                    CHECK(same_colour == (side[static_cast<std::size_t>(x)] == side[static_cast<std::size_t>(y)]));
                }
    }
    CHECK(partitions > 50);
}

TEST_CASE("driver totality and enumeration cross-check") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 8 + 2 * (trial % 4);
        auto chi = testsupport::random_dense_2col(n, n / 2 + 2, rng);
        auto out = find_even_hamilton_2col(chi);
        check_outcome(chi, out);
        if (n == 8) {
            std::set<std::vector<Vertex>> even;
            for (auto& c : testsupport::brute_cycles(chi.host()))
                if (all_even(count_colors(chi, make_cycle(c)))) even.insert(c);
            CHECK(even.count(testsupport::canonical(out.cycle.vertices)) == 1);
        }
    }
}

TEST_CASE("driver endgame on the all-one K8") {
    auto chi = EdgeColoring::monochromatic(8, 2, 1);
    auto out = find_even_hamilton_2col(chi);
    CHECK(out.provenance == "agreement-endgame");
    CHECK(parity_census(chi, out.cycle).count(1) == 8);
}
