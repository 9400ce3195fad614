#include <map>
#include <set>

#include "doctest.h"
#include "oddramsey/bipartite_even.hpp"
#include "test_support.hpp"

using namespace oddramsey;

namespace {

Status status_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.status();
    }
    return Status::ok;
}

/// Calls f on every k-subset of `pool` (as a sorted vector).
template <class F>
void each_subset(const std::vector<int>& pool, int k, F&& f) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (static_cast<int>(cur.size()) == k) {
            f(cur);
            return;
        }
        if (i == pool.size()) return;
        cur.push_back(pool[i]);
        self(self, i + 1);
        cur.pop_back();
        self(self, i + 1);
    };
    rec(rec, 0);
}

bool all_even_towards(const EdgeColoring& chi, int u, const std::vector<int>& s) {
    std::map<int, int> cnt;
    for (auto v : s) ++cnt[chi.color(u, v)];
    for (auto [c, k] : cnt)
        if (k % 2) return false;
    return true;
}

bool even_bipartite(const EdgeColoring& chi, const std::vector<int>& a, const std::vector<int>& b) {
    std::map<int, int> cnt;
    for (auto x : a)
        for (auto y : b) {
            if (x == y) return false;
            ++cnt[chi.color(x, y)];
        }
    for (auto [c, k] : cnt)
        if (k % 2) return false;
    return true;
}

bool exists_even_kst(const EdgeColoring& chi, int s, int t) {
    std::vector<int> all(static_cast<std::size_t>(chi.order()));
    std::iota(all.begin(), all.end(), 0);
    bool found = false;
    each_subset(all, s, [&](const std::vector<int>& a) {
        if (found) return;
        std::vector<int> rest;
        for (auto v : all)
            if (std::find(a.begin(), a.end(), v) == a.end()) rest.push_back(v);
        each_subset(rest, t, [&](const std::vector<int>& b) { found = found || even_bipartite(chi, a, b); });
    });
    return found;
}

bool exists_cover(const ParityHypergraph& h, int k) {
    std::vector<int> idx(h.edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    bool found = false;
    each_subset(idx, k, [&](const std::vector<int>& sub) {
        std::map<int, int> deg;
        for (auto i : sub)
            for (auto c : h.edges[static_cast<std::size_t>(i)].support) ++deg[c];
        bool ok = true;
        for (auto [c, d] : deg) ok = ok && d % 2 == 0;
        found = found || ok;
    });
    return found;
}

EdgeColoring rainbow(int n) {
    EdgeColoring chi(Graph::complete(n), n * (n - 1) / 2);
    Color c = 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) chi.set_color(u, v, c++);
    return chi;
}

ParityHypergraph hyper(int palette, std::vector<std::vector<Color>> es) {
    ParityHypergraph h{palette, {}};
    for (std::size_t i = 0; i < es.size(); ++i) h.edges.push_back({static_cast<Vertex>(i), es[i]});
    return h;
}

}  // namespace

TEST_CASE("even neighbourhoods") {
    auto r5 = rainbow(5);
    CHECK(even_neighborhoods(r5, 0, 2).empty());
    auto chi = rainbow(5);
    chi.set_color(0, 3, 1);
    CHECK(even_neighborhoods(chi, 0, 2) == std::vector<std::vector<Vertex>>{{1, 3}});
    CHECK(status_of([&] { even_neighborhoods(chi, 0, 3); }) == Status::precondition_failed);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 8 + trial % 5, sp = trial % 2 ? 4 : 2;
        auto col = testsupport::random_colors(Graph::complete(n), 1 + trial % 3, rng);
        for (int u = 0; u < n; u += 3) {
            std::vector<int> others;
            for (int v = 0; v < n; ++v)
                if (v != u) others.push_back(v);
            std::vector<std::vector<Vertex>> expect;
            each_subset(others, sp, [&](const std::vector<int>& s) {
                if (all_even_towards(col, u, s)) expect.push_back(s);
            });
            std::sort(expect.begin(), expect.end());
            CHECK(even_neighborhoods(col, u, sp) == expect);
        }
    }
}

TEST_CASE("strongly even witnesses") {
    auto mono = EdgeColoring::monochromatic(6, 1);
    auto w = find_strongly_even(mono, 2, 2);
    REQUIRE(w);
    CHECK(w->v1 == std::vector<Vertex>{0, 1});
    CHECK(w->v2 == std::vector<Vertex>{2, 3});
    CHECK_FALSE(find_strongly_even(rainbow(5), 2, 1));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        auto chi = testsupport::random_colors(Graph::complete(12), 2, rng);
        const int tp = 3 + trial % 5;
        std::vector<int> all(12);
        std::iota(all.begin(), all.end(), 0);
        bool expect = false;
        each_subset(all, 2, [&](const std::vector<int>& s) {
            int owners = 0;
            for (auto u : all)
                if (std::find(s.begin(), s.end(), u) == s.end() && all_even_towards(chi, u, s)) ++owners;
            expect = expect || owners >= tp;
        });
        auto got = find_strongly_even(chi, 2, tp);
        CHECK(got.has_value() == expect);
        if (got) {
            CHECK(static_cast<int>(got->v2.size()) == tp);
            CHECK(is_strongly_even(chi, got->v1, got->v2));
        }
    }
}

TEST_CASE("parity hypergraph edges") {
    EdgeColoring chi(Graph::complete(7), 5);
    for (auto e : chi.host().edges()) chi.set_color(e.u, e.v, 5);
    chi.set_color(3, 0, 1);
    chi.set_color(3, 1, 1);
    chi.set_color(3, 2, 2);
    chi.set_color(4, 0, 1);
    chi.set_color(4, 1, 2);
    chi.set_color(4, 2, 3);
    auto h = build_parity_hypergraph(chi, 0, 1, 2, {3, 4, 5});
    REQUIRE(h.edges.size() == 3);
    CHECK(h.edges[0].support == std::vector<Color>{2});
    CHECK(h.edges[1].support == std::vector<Color>{1, 2, 3});
    CHECK(h.edges[2].support == std::vector<Color>{5});
    CHECK(status_of([&] { build_parity_hypergraph(chi, 0, 1, 2, {2}); }) == Status::precondition_failed);
}

TEST_CASE("even covers") {
    auto pair = find_even_cover(hyper(3, {{1, 2, 3}, {1, 2, 3}}), 2);
    CHECK(pair.status == Status::ok);
    CHECK(pair.edges == std::vector<std::size_t>{0, 1});
    auto tri = find_even_cover(hyper(2, {{1}, {2}, {1, 2}}), 3);
    CHECK(tri.status == Status::ok);
    CHECK(tri.edges == std::vector<std::size_t>{0, 1, 2});
    CHECK(find_even_cover(hyper(1, {{1}}), 2).status == Status::not_found);
    CHECK(find_even_cover(hyper(3, {{1}, {2}, {3}}), 2).status == Status::not_found);
    CHECK(status_of([&] { find_even_cover(hyper(1, {{1}}), 1); }) == Status::precondition_failed);

    EvenCoverLimits tiny{0, 0};
    auto h = hyper(4, {{1}, {2}, {3}, {1, 2, 3}, {4}, {1, 2, 4}});
    CHECK(find_even_cover(h, 4, tiny).status == Status::unknown);
    CHECK(find_even_cover(h, 4).status == Status::ok);

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pal(1, 10);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = pal(rng), m = 1 + static_cast<int>(rng() % 12);
        std::vector<std::vector<Color>> es;
        for (int i = 0; i < m; ++i) {
            std::set<Color> s;
            const int size = (rng() % 2) ? 1 : std::min(3, r);
            while (static_cast<int>(s.size()) < size) s.insert(1 + static_cast<Color>(rng() % static_cast<unsigned>(r)));
            es.emplace_back(s.begin(), s.end());
        }
        auto hh = hyper(r, es);
        for (int k : {2, 3, 4, 6}) {
            auto res = find_even_cover(hh, k);
            REQUIRE(res.status != Status::unknown);
            CHECK((res.status == Status::ok) == exists_cover(hh, k));
            if (res.status == Status::ok) {
                CHECK(res.edges.size() == static_cast<std::size_t>(k));
                CHECK(is_even_cover(hh, res.edges));
            }
        }
    }
}

TEST_CASE("brute force K_{s,t}") {
    CHECK(brute_force_even_kst(rainbow(5), 2, 2).found == exists_even_kst(rainbow(5), 2, 2));
    CHECK_FALSE(brute_force_even_kst(rainbow(5), 2, 2).found);
    auto m = brute_force_even_kst(EdgeColoring::monochromatic(8, 1), 2, 2);
    CHECK(m.found);
    CHECK(m.a == std::vector<Vertex>{0, 1});
    CHECK(m.b == std::vector<Vertex>{2, 3});
    CHECK(status_of([] { brute_force_even_kst(EdgeColoring::monochromatic(30, 1), 7, 8, 1000); }) == Status::cap_exceeded);
}

TEST_CASE("even-chromatic K_{s,t} pipeline") {
    auto mono = EdgeColoring::monochromatic(20, 1);
    auto res = find_even_chromatic_kst(mono, 3, 4);
    REQUIRE(res.status == Status::ok);
    CHECK(res.a.size() == 3);
    CHECK(res.b.size() == 4);
    CHECK(res.census.count(1) == 12);

    CHECK(default_t_prime(20, 3, 3, 4) == 17);
    CHECK(default_t_prime(1000, 4, 3, 8) == 16);  // 4^(3/2 + 1/2) = 16
    CHECK(status_of([&] { find_even_chromatic_kst(mono, 3, 5); }) == Status::precondition_failed);
    CHECK(status_of([&] { find_even_chromatic_kst(mono, 3, 4, {.t_prime = 18}); }) == Status::precondition_failed);

    std::mt19937_64 rng(2024);
    std::map<std::string, int> stages;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 9 + trial % 4, s = trial % 3 == 0 ? 5 : (trial % 3 == 1 ? 3 : 2);
        const int r = 2 + trial % 2;
        auto chi = testsupport::random_colors(Graph::complete(n), r, rng);
        KstOptions opts;
        if (s == 5) opts.t_prime = 4;
        opts.retry_w = trial % 2 == 0;
        auto k = find_even_chromatic_kst(chi, s, 4, opts);
        ++stages[k.stage];
        const bool exists = exists_even_kst(chi, s, 4);
        if (k.status == Status::ok) {
            CHECK(even_bipartite(chi, k.a, k.b));
            CHECK(static_cast<int>(k.a.size()) == s);
            CHECK(k.b.size() == 4);
            CHECK(exists);
        } else if (k.status == Status::not_found) {
            CHECK_FALSE(exists);
        }
    }
    CHECK(stages["even-cover:duplicate-pairs"] + stages["even-cover:meet-in-the-middle"] > 0);
    CHECK(stages["strongly-even"] > 0);
}

TEST_CASE("odd s = 5 routes through a strongly even pair") {
    // colour 1 on every edge at 0 and 1, colour 2 elsewhere: {0,1} is an even
    // 2-neighbourhood of everything else
    auto chi = EdgeColoring::monochromatic(14, 2, 2);
    for (int v = 2; v < 14; ++v) {
        chi.set_color(0, v, 1);
        chi.set_color(1, v, 1);
    }
    auto res = find_even_chromatic_kst(chi, 5, 4, {.t_prime = 8});
    REQUIRE(res.status == Status::ok);
    CHECK(res.v1 == std::vector<Vertex>{0, 1});
    CHECK(res.w.size() == 3);
    CHECK(even_bipartite(chi, res.a, res.b));
    CHECK(is_strongly_even(chi, res.v1, res.b));
}
