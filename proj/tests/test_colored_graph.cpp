#include "doctest.h"
#include "oddramsey/colored_graph.hpp"
#include "oddramsey/io.hpp"
#include "test_support.hpp"

using namespace oddramsey;

namespace {

EdgeColoring four_cycle(std::initializer_list<Color> cs) {
    EdgeColoring chi(Graph::cycle(4), 2);
    int i = 0;
    for (auto c : cs) {
        chi.set_color(i, (i + 1) % 4, c);
        ++i;
    }
    return chi;
}

}  // namespace

TEST_CASE("census of a 4-cycle with paired colours is even") {
    auto chi = four_cycle({1, 1, 2, 2});
    auto census = parity_census(chi, make_cycle({0, 1, 2, 3}));
    CHECK(census.count(1) == 2);
    CHECK(census.count(2) == 2);
    CHECK(census.is_even());
    CHECK_FALSE(census.has_unique());
}

TEST_CASE("census of a 4-cycle with one odd colour") {
    auto chi = four_cycle({1, 1, 1, 2});
    auto census = parity_census(chi, make_cycle({0, 1, 2, 3}));
    CHECK(census.odd_colors() == std::vector<Color>{1, 2});
    CHECK(census.unique_colors() == std::vector<Color>{2});
}

TEST_CASE("empty edge set gives an empty even census") {
    auto chi = four_cycle({1, 2, 1, 2});
    std::vector<Edge> none;
    auto census = parity_census(chi, none);
    CHECK(census.total() == 0);
    CHECK(census.is_even());
}

TEST_CASE("census rejects edges outside the host") {
    auto chi = four_cycle({1, 2, 1, 2});
    std::vector<Edge> bad{Edge(0, 2)};
    try {
        parity_census(chi, bad);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.status() == Status::invalid_input);
    }
}

TEST_CASE("symmetric difference") {
    SUBCASE("identical cycles") {
        auto c = make_cycle({0, 1, 2, 3});
        CHECK(symmetric_difference(c, c).empty());
    }
    SUBCASE("two 4-cycles on K4") {
        auto d = symmetric_difference(make_cycle({0, 1, 2, 3}), make_cycle({0, 2, 1, 3}));
        std::vector<Edge> expect{Edge(0, 1), Edge(0, 2), Edge(1, 3), Edge(2, 3)};
        CHECK(d == expect);
    }
    SUBCASE("mismatched vertex sets") {
        CHECK_THROWS_AS(symmetric_difference(make_cycle({0, 1, 2}), make_cycle({0, 1, 3})), Error);
    }
}

TEST_CASE("min degree") {
    CHECK(min_degree(Graph::complete(6)) == 5);
    CHECK(min_degree(Graph::cycle(6)) == 2);
    CHECK(min_degree(Graph(1)) == 0);
}

TEST_CASE("edge normalisation is idempotent") {
    Edge e(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK(normalize(normalize(e)) == normalize(e));
    CHECK_THROWS_AS(Edge(3, 3), Error);
}

TEST_CASE("odd colours of two cycles XOR to the odd colours of their symmetric difference") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + trial % 7;
        int r = 1 + trial % 4;
        auto chi = testsupport::random_colors(Graph::complete(n), r, rng);
        std::vector<Vertex> a(static_cast<std::size_t>(n)), b;
        std::iota(a.begin(), a.end(), 0);
        std::shuffle(a.begin(), a.end(), rng);
        b = a;
        std::shuffle(b.begin(), b.end(), rng);
        auto c1 = make_cycle(a), c2 = make_cycle(b);
        auto p1 = parity_census(chi, c1).parity_vector();
        auto p2 = parity_census(chi, c2).parity_vector();
        auto diff = symmetric_difference(c1, c2);
        CHECK((p1 ^ p2) == parity_census(chi, diff).parity_vector());
    }
}

TEST_CASE("census is additive over disjoint edge sets") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto chi = testsupport::random_colors(Graph::complete(9), 3, rng);
        auto es = chi.host().edges();
        std::shuffle(es.begin(), es.end(), rng);
        std::size_t cut = static_cast<std::size_t>(trial) % es.size();
        std::vector<Edge> a(es.begin(), es.begin() + static_cast<long>(cut)), b(es.begin() + static_cast<long>(cut), es.end());
        CHECK(parity_census(chi, a) + parity_census(chi, b) == parity_census(chi, es));
    }
}

TEST_CASE("JSON instance parsing") {
    using io::json;
    json good = {{"n", 3}, {"r", 2}, {"edges", {{{"u", 0}, {"v", 1}, {"c", 1}}, {{"u", 1}, {"v", 2}, {"c", 2}}}}};
    auto chi = io::instance_from_json(good);
    CHECK(chi.order() == 3);
    CHECK(chi.color(2, 1) == 2);
    CHECK_FALSE(chi.host().adjacent(0, 2));
    CHECK(io::instance_to_json(chi) == good);

    auto expect_invalid = [](const json& j) {
        try {
            io::instance_from_json(j);
            return false;
        } catch (const Error& e) {
            return e.status() == Status::invalid_input;
        }
    };
    CHECK(expect_invalid({{"n", 3}, {"r", 2}, {"edges", {{{"u", 0}, {"v", 1}, {"c", 1}}, {{"u", 0}, {"v", 1}, {"c", 2}}}}}));
    CHECK(expect_invalid({{"n", 3}, {"r", 2}, {"edges", {{{"u", 1}, {"v", 1}, {"c", 1}}}}}));
    CHECK(expect_invalid({{"n", 3}, {"r", 2}, {"edges", {{{"u", 0}, {"v", 1}, {"c", 3}}}}}));
    CHECK(expect_invalid({{"n", 3}, {"r", 2}, {"edges", {{{"u", 0}, {"v", 1}, {"c", 0}}}}}));
    CHECK(expect_invalid({{"n", 3}, {"edges", json::array()}}));
}

TEST_CASE("DOT export lists every edge with its colour") {
    auto chi = four_cycle({1, 2, 1, 2});
    auto dot = io::to_dot(chi);
    CHECK(dot.rfind("graph G {", 0) == 0);
    CHECK(dot.find("0 -- 1 [color=\"black\", label=\"1\"") != std::string::npos);
    CHECK(dot.find("1 -- 2 [color=\"red\", label=\"2\"") != std::string::npos);
}
