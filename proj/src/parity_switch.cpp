#include "oddramsey/parity_switch.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>

#include "oddramsey/hamilton.hpp"

namespace oddramsey {

namespace {

constexpr int kDepthBudget = 3;

void require_setting(const EdgeColoring& chi) {
    const Graph& g = chi.host();
    const int n = g.order();
    if (chi.palette() != 2) fail(Status::precondition_failed, "parity switching needs a 2-colouring");
    if (n < 4 || n % 2 != 0) fail(Status::precondition_failed, "parity switching needs an even order n >= 4");
    if (min_degree(g) < n / 2 + 2) fail(Status::precondition_failed, "minimum degree below n/2 + 2");
}

/// Parity of colour-1 edges along a closed vertex sequence; in two colours a
/// cycle of even length is odd-chromatic exactly when this is 1.
int parity(const EdgeColoring& chi, std::initializer_list<Vertex> closed) {
    std::vector<Vertex> vs(closed);
    int p = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) p ^= chi.color(vs[i], vs[(i + 1) % vs.size()]) == 1;
    return p;
}

/// G minus a vertex set, with the map back to original ids.
struct Sub {
    Graph g;
    std::vector<Vertex> orig;

    Sub(const Graph& host, std::vector<Vertex> drop) { g = host.without(drop, orig); }

    Vertex id(Vertex v) const {
        auto it = std::find(orig.begin(), orig.end(), v);
        if (it == orig.end()) fail(Status::internal_contradiction, "vertex missing from subgraph");
        return static_cast<Vertex>(it - orig.begin());
    }
    std::vector<Vertex> lift(const Walk& w) const {
        std::vector<Vertex> out;
        out.reserve(w.size());
        for (auto v : w.vertices) out.push_back(orig[static_cast<std::size_t>(v)]);
        return out;
    }
};

std::vector<Vertex> concat(std::vector<Vertex> head, std::initializer_list<Vertex> tail) {
    head.insert(head.end(), tail);
    return head;
}

struct Hexagon {
    std::array<Vertex, 6> h;

    Vertex a() const { return h[0]; }
    Vertex b() const { return h[1]; }
    Vertex c() const { return h[2]; }
    Vertex d() const { return h[3]; }
    Vertex e() const { return h[4]; }
    Vertex f() const { return h[5]; }

    /// Mirror swapping a <-> d (and so b <-> c, f <-> e, Q_1 <-> Q_2).
    Hexagon mirror_ad() const { return {{d(), c(), b(), a(), f(), e()}}; }
    /// Mirror fixing a and d (b <-> f, c <-> e).
    Hexagon mirror_bf() const { return {{a(), f(), e(), d(), c(), b()}}; }

    Walk walk() const { return make_cycle({h.begin(), h.end()}); }
};

class Switcher {
public:
    explicit Switcher(const EdgeColoring& chi) : chi_(chi), g_(chi.host()) {}

    SwitchOutcome c4(const Walk& w) {
        check_witness(w, 4);
        const Vertex u = w.vertices[0], v = w.vertices[1], x = w.vertices[3], y = w.vertices[2];
        chain_.push_back("c4-switch");
        const std::array<Vertex, 2> avoid{u, y};
        Walk q = short_connector(g_, v, x, avoid);
        std::vector<Vertex> mid(q.vertices.begin() + 1, q.vertices.end() - 1);
        std::vector<Vertex> drop = q.vertices;
        Sub sub(g_, drop);
        auto p = sub.lift(hamilton_path_between(sub.g, sub.id(u), sub.id(y)));
        // p runs u .. y; the cycles close back along it
        std::vector<Vertex> back(p.rbegin() + 1, p.rend() - 1);
        std::vector<Vertex> c1{u, v}, c2{u, x};
        c1.insert(c1.end(), mid.begin(), mid.end());
        c2.insert(c2.end(), mid.rbegin(), mid.rend());
        c1.push_back(x);
        c2.push_back(v);
        c1.push_back(y);
        c2.push_back(y);
        c1.insert(c1.end(), back.begin(), back.end());
        c2.insert(c2.end(), back.begin(), back.end());
        return settle(std::move(c1), std::move(c2), "c4-switch", w);
    }

    SwitchOutcome c6(Hexagon hx, int depth) {
        if (depth > kDepthBudget) fail(Status::recursion_exhausted, "C6 switch recursion budget exhausted");
        check_witness(hx.walk(), 6);
        for (int attempt = 0;; ++attempt) {
            const std::array<Vertex, 4> s1{hx.a(), hx.c(), hx.d(), hx.e()};
            Walk q1 = short_connector(g_, hx.b(), hx.f(), s1);
            std::vector<Vertex> s2 = q1.vertices;
            s2.push_back(hx.a());
            s2.push_back(hx.d());
            Walk q2 = short_connector(g_, hx.c(), hx.e(), s2);
            if (q1.size() == 3 && q2.size() == 2 && attempt == 0) {
                chain_.push_back("c6-mirror");
                hx = hx.mirror_ad();
                continue;
            }
            if (q1.size() == 2 && q2.size() == 2) return case1(hx, depth);
            if (q1.size() == 2) return case2(hx, q2.vertices[1], depth);
            return case3(hx, q1.vertices[1], q2.vertices[1], depth);
        }
    }

private:
    void check_witness(const Walk& w, std::size_t len) const {
        if (!w.closed || w.size() != len || !is_valid_walk(g_, w))
            fail(Status::bad_witness, "witness is not a " + std::to_string(len) + "-cycle of the host graph");
        if (!parity_census(chi_, w).has_odd()) fail(Status::bad_witness, "witness cycle is even-chromatic");
    }

    /// Delegates to the C4 switch when p q r s is an odd 4-cycle.
    std::optional<SwitchOutcome> pretest(Vertex p, Vertex q, Vertex r, Vertex s) {
        if (p == r) return std::nullopt;
        if (!parity(chi_, {p, q, r, s})) return std::nullopt;
        chain_.push_back("c4-pretest");
        return c4(make_cycle({p, q, r, s}));
    }

    SwitchOutcome settle(std::vector<Vertex> c1, std::vector<Vertex> c2, const std::string& tag, const Walk& witness) {
        Walk w1 = make_cycle(std::move(c1)), w2 = make_cycle(std::move(c2));
        if (!is_hamilton_cycle(g_, w1) || !is_hamilton_cycle(g_, w2))
            fail(Status::internal_contradiction, tag + ": candidate is not a Hamilton cycle");
        const bool e1 = parity_census(chi_, w1).is_even(), e2 = parity_census(chi_, w2).is_even();
        if (e1 == e2) fail(Status::internal_contradiction, tag + ": candidates do not differ in parity");
        if (chain_.empty() || chain_.back() != tag) chain_.push_back(tag);
        SwitchOutcome out;
        out.cycle = e1 ? w1 : w2;
        out.provenance = tag;
        out.candidates = std::make_pair(std::move(w1), std::move(w2));
        out.witness = witness;
        out.chain = chain_;
        return out;
    }

    /// a P d c Q_2 e f Q_1 b a versus a P d e Q_2 c b Q_1 f a, both chords edges.
    SwitchOutcome build_case11(const Hexagon& hx, const std::vector<Vertex>& p, const std::string& tag) {
        return settle(concat(p, {hx.c(), hx.e(), hx.f(), hx.b()}), concat(p, {hx.e(), hx.c(), hx.b(), hx.f()}), tag,
                      hx.walk());
    }

    SwitchOutcome case1(const Hexagon& hx, int depth) {
        Sub sub(g_, {hx.b(), hx.c(), hx.e(), hx.f()});
        const int m = sub.g.order();
        if (m == 2) {
            chain_.push_back("c6-case-1.1");
            return build_case11(hx, {hx.a(), hx.d()}, "c6-case-1.1");
        }
        int low = 0, high = 0;
        for (int v = 0; v < m; ++v) {
            int dv = sub.g.degree(v);
            if (dv < m / 2) fail(Status::internal_contradiction, "case 1: subgraph degree below n'/2");
            (dv == m / 2 ? low : high)++;
        }
        if (2 * high > m) {
            chain_.push_back("c6-case-1.1");
            auto p = strong_ore_path(sub.g, sub.id(hx.a()), sub.id(hx.d()));
            return build_case11(hx, sub.lift(p.path), "c6-case-1.1");
        }
        if (2 * low > m) return case12(hx, sub);
        return case13(hx, sub, depth);
    }

    bool sees_all(Vertex v, const Hexagon& hx) const {
        return g_.adjacent(v, hx.b()) && g_.adjacent(v, hx.c()) && g_.adjacent(v, hx.e()) && g_.adjacent(v, hx.f());
    }

    SwitchOutcome case12(Hexagon hx, const Sub& sub) {
        chain_.push_back("c6-case-1.2");
        const Vertex sa = sub.id(hx.a()), sd = sub.id(hx.d());
        Walk cyc;
        if (sub.g.adjacent(sa, sd)) {
            try {
                cyc = hamilton_cycle_avoiding_edge(sub.g, Edge(sa, sd));
            } catch (const Error& e) {
                if (e.status() != Status::not_found) throw;
                cyc = dirac_hamilton_cycle(sub.g);
            }
        } else {
            cyc = dirac_hamilton_cycle(sub.g);
        }
        std::vector<Vertex> c = sub.lift(cyc);
        const std::size_t m = c.size();
        for (std::size_t i = 0; i < m; ++i) {
            Vertex p = c[i], q = c[(i + 1) % m];
            if (!sees_all(p, hx) || !sees_all(q, hx)) continue;
            const bool touches_a = p == hx.a() || q == hx.a(), touches_d = p == hx.d() || q == hx.d();
            if (!touches_a && !touches_d) return case121(hx, c, p, q);
            if (!touches_a) {
                chain_.push_back("c6-mirror");
                hx = hx.mirror_ad();
            }
            return case122(hx, c, p == hx.a() ? q : p);
        }
        // more than half of C sees {b,c,e,f}, so two such vertices are consecutive
        fail(Status::internal_contradiction, "case 1.2: no consecutive pair on the Dirac cycle sees b, c, e, f");
    }

    /// Rotates a cycle to start at `s`, then reverses if needed so `next` follows it.
    static std::vector<Vertex> orient(std::vector<Vertex> c, Vertex s) {
        std::rotate(c.begin(), std::find(c.begin(), c.end(), s), c.end());
        return c;
    }
    static std::vector<Vertex> reflect(std::vector<Vertex> c) {
        std::reverse(c.begin() + 1, c.end());
        return c;
    }
    static std::size_t pos(const std::vector<Vertex>& c, Vertex v) {
        return static_cast<std::size_t>(std::find(c.begin(), c.end(), v) - c.begin());
    }

    SwitchOutcome case121(const Hexagon& hx, std::vector<Vertex> c, Vertex u, Vertex v) {
        c = orient(std::move(c), hx.a());
        if (pos(c, u) > pos(c, hx.d())) c = reflect(std::move(c));
        if (pos(c, u) > pos(c, v)) std::swap(u, v);
        if (auto r = pretest(u, hx.b(), hx.a(), hx.f())) return *r;
        if (auto r = pretest(v, hx.c(), hx.d(), hx.e())) return *r;
        std::vector<Vertex> head(c.begin(), c.begin() + static_cast<long>(pos(c, u)) + 1);
        std::vector<Vertex> tail(c.begin() + static_cast<long>(pos(c, v)), c.end());
        auto c1 = concat(head, {hx.f(), hx.b(), hx.c(), hx.e()});
        auto c2 = concat(head, {hx.b(), hx.f(), hx.e(), hx.c()});
        c1.insert(c1.end(), tail.begin(), tail.end());
        c2.insert(c2.end(), tail.begin(), tail.end());
        return settle(std::move(c1), std::move(c2), "c6-case-1.2.1", hx.walk());
    }

    SwitchOutcome case122(const Hexagon& hx, std::vector<Vertex> c, Vertex v) {
        c = orient(std::move(c), hx.a());
        if (c[1] != v) c = reflect(std::move(c));
        if (v != hx.d())
            if (auto r = pretest(v, hx.c(), hx.d(), hx.e())) return *r;
        // v .. a along C without the edge av
        std::vector<Vertex> around(c.begin() + 1, c.end());
        around.push_back(hx.a());
        return settle(concat(around, {hx.b(), hx.f(), hx.e(), hx.c()}), concat(around, {hx.f(), hx.b(), hx.c(), hx.e()}),
                      "c6-case-1.2.2", hx.walk());
    }

    SwitchOutcome case13(const Hexagon& hx, const Sub& sub, int /*depth*/) {
        chain_.push_back("c6-case-1.3");
        try {
            auto p = strong_ore_path(sub.g, sub.id(hx.a()), sub.id(hx.d()));
            return build_case11(hx, sub.lift(p.path), "c6-case-1.3");
        } catch (const Error& e) {
            if (e.status() != Status::precondition_failed) throw;
        }
        const int m = sub.g.order();
        std::vector<Vertex> low;
        for (int v = 0; v < m && low.size() < 2; ++v)
            if (sub.g.degree(v) == m / 2) low.push_back(v);
        const Vertex u = sub.orig[static_cast<std::size_t>(low[0])], v = sub.orig[static_cast<std::size_t>(low[1])];
        if (u != hx.a())
            if (auto r = pretest(u, hx.b(), hx.a(), hx.f())) return *r;
        if (v != hx.d())
            if (auto r = pretest(v, hx.c(), hx.d(), hx.e())) return *r;
        auto p = strong_ore_path(sub.g, low[0], low[1]);
        Hexagon next{{u, hx.b(), hx.c(), v, hx.e(), hx.f()}};
        return build_case11(next, sub.lift(p.path), "c6-case-1.3");
    }

    SwitchOutcome case2(const Hexagon& hx, Vertex first_u, int depth) {
        chain_.push_back("c6-case-2");
        // Any middle vertex of a shortest {c,e}-connector will do; later ones
        // are tried only when the first leaves no Hamilton {a,d}-path, which
        // can happen when G' has at most five vertices.
        std::vector<Vertex> middles{first_u};
        DynBitset common = g_.neighbors(hx.c()) & g_.neighbors(hx.e());
        for (auto s : {hx.a(), hx.b(), hx.d(), hx.f(), first_u}) common.reset(static_cast<std::size_t>(s));
        common.for_each([&](std::size_t i) { middles.push_back(static_cast<Vertex>(i)); });

        for (Vertex u : middles) {
            Sub sub(g_, {hx.b(), hx.c(), u, hx.e(), hx.f()});
            const int m = sub.g.order();
            std::vector<Vertex> low;
            for (int v = 0; v < m; ++v)
                if (sub.g.degree(v) <= (m - 1) / 2) low.push_back(sub.orig[static_cast<std::size_t>(v)]);
            if (low.size() >= 2) {
                const Vertex w = low[0], z = low[1];
                if (w != hx.a())
                    if (auto r = pretest(w, hx.b(), hx.a(), hx.f())) return *r;
                if (z != hx.d())
                    if (auto r = pretest(z, hx.c(), hx.d(), hx.e())) return *r;
                return c6(Hexagon{{hx.f(), w, hx.b(), hx.c(), z, hx.e()}}, depth + 1);
            }
            std::vector<Vertex> p;
            try {
                p = sub.lift(strong_ore_path(sub.g, sub.id(hx.a()), sub.id(hx.d()), {.fallback = true}).path);
            } catch (const Error& e) {
                if (e.status() != Status::not_found) throw;
                continue;
            }
            return settle(concat(p, {hx.c(), u, hx.e(), hx.f(), hx.b()}), concat(p, {hx.e(), u, hx.c(), hx.b(), hx.f()}),
                          "c6-case-2", hx.walk());
        }
        return exhaustive("case 2: no connector middle vertex leaves a Hamilton {a,d}-path");
    }

    /// Last resort for the small orders where the case analysis has no path
    /// to work with: scan Hamilton cycles for an even one.
    SwitchOutcome exhaustive(const std::string& why) {
        if (g_.order() > enumeration_cap()) fail(Status::not_found, why);
        HamiltonCycleEnumerator en(g_);
        while (auto c = en.next()) {
            if (!parity_census(chi_, *c).is_even()) continue;
            chain_.push_back("c6-exhaustive");
            SwitchOutcome out;
            out.cycle = *c;
            out.provenance = "c6-exhaustive";
            out.chain = chain_;
            return out;
        }
        fail(Status::internal_contradiction, why + "; and no even-chromatic Hamilton cycle exists");
    }

    SwitchOutcome case3(const Hexagon& hx, Vertex v, Vertex u, int depth) {
        chain_.push_back("c6-case-3");
        Sub sub(g_, {hx.b(), hx.c(), u, hx.e(), hx.f(), v});
        const int m = sub.g.order();
        if (m >= 2 && min_degree(sub.g) >= m / 2 + 1) {
            auto p = sub.lift(hamilton_path_between(sub.g, sub.id(hx.a()), sub.id(hx.d())));
            return settle(concat(p, {hx.c(), u, hx.e(), hx.f(), v, hx.b()}),
                          concat(p, {hx.e(), u, hx.c(), hx.b(), v, hx.f()}), "c6-case-3", hx.walk());
        }
        const std::array<Hexagon, 4> labellings{hx, hx.mirror_ad(), hx.mirror_bf(), hx.mirror_ad().mirror_bf()};
        for (int allow_a = 0; allow_a < 2; ++allow_a)
            for (int sv = 0; sv < m; ++sv) {
                if (sub.g.degree(sv) > m / 2) continue;
                const Vertex w = sub.orig[static_cast<std::size_t>(sv)];
                for (const auto& lab : labellings) {
                    if (w == lab.d() || (w == lab.a() && !allow_a)) continue;
                    if (!g_.adjacent(w, lab.b()) || !g_.adjacent(w, lab.e()) || !g_.adjacent(w, lab.f())) continue;
                    if (w != lab.a())
                        if (auto r = pretest(w, lab.b(), lab.a(), lab.f())) return *r;
                    return c6(Hexagon{{lab.f(), w, lab.b(), lab.c(), lab.d(), lab.e()}}, depth + 1);
                }
            }
        fail(Status::internal_contradiction, "case 3: no low-degree vertex sees b, e, f under any labelling");
    }

    const EdgeColoring& chi_;
    const Graph& g_;
    std::vector<std::string> chain_;
};

/// x, y, z pairwise distinct; picks distinct u in N(x)&N(y), v in N(y)&N(z), w in N(z)&N(x).
Walk transitivity_hexagon(const Graph& g, Vertex x, Vertex y, Vertex z) {
    DynBitset used = g.empty_set();
    for (auto s : {x, y, z}) used.set(static_cast<std::size_t>(s));
    auto pick = [&](Vertex p, Vertex q) {
        DynBitset cand = g.neighbors(p) & g.neighbors(q);
        cand.subtract(used);
        std::size_t i = cand.find_first();
        if (i >= cand.size()) fail(Status::internal_contradiction, "common neighbourhoods too small for a transitivity hexagon");
        used.set(i);
        return static_cast<Vertex>(i);
    };
    Vertex u = pick(x, y), v = pick(y, z), w = pick(z, x);
    return make_cycle({x, u, y, v, z, w});
}

}  // namespace

int AgreementPartition::class_count() const {
    return std::any_of(side.begin(), side.end(), [](int s) { return s == 1; }) ? 2 : 1;
}

SwitchOutcome switch_c4(const EdgeColoring& chi, const Walk& c4) {
    require_setting(chi);
    return Switcher(chi).c4(c4);
}

SwitchOutcome switch_c6(const EdgeColoring& chi, const Walk& c6) {
    require_setting(chi);
    if (c6.size() != 6) fail(Status::bad_witness, "witness is not a 6-cycle");
    Hexagon hx{};
    std::copy(c6.vertices.begin(), c6.vertices.end(), hx.h.begin());
    return Switcher(chi).c6(hx, 0);
}

std::variant<AgreementPartition, OddWitness> agreement_partition(const EdgeColoring& chi) {
    require_setting(chi);
    const Graph& g = chi.host();
    const int n = g.order();
    AgreementPartition part;
    std::vector<char> agree(static_cast<std::size_t>(n * n), 1);
    auto at = [&](Vertex x, Vertex y) -> char& { return agree[static_cast<std::size_t>(x * n + y)]; };

    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            DynBitset common = g.neighbors(x) & g.neighbors(y);
            int same = -1, diff = -1;
            common.for_each([&](std::size_t i) {
                auto u = static_cast<Vertex>(i);
                int& slot = chi.color(x, u) == chi.color(y, u) ? same : diff;
                if (slot < 0) slot = u;
            });
            if (same >= 0 && diff >= 0) return OddWitness{make_cycle({x, same, y, diff})};
            const bool ag = diff < 0;
            at(x, y) = at(y, x) = ag;
            part.witness_table.push_back({x, y, ag, ag ? same : diff});
        }

    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            for (Vertex z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                if (at(x, y) && at(y, z) && !at(x, z)) return OddWitness{transitivity_hexagon(g, x, y, z)};
            }

    part.side.assign(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> reps;
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (at(v, reps[k])) {
                part.side[static_cast<std::size_t>(v)] = static_cast<int>(k);
                break;
            }
        if (part.side[static_cast<std::size_t>(v)] < 0) {
            part.side[static_cast<std::size_t>(v)] = static_cast<int>(reps.size());
            reps.push_back(v);
        }
        if (reps.size() == 3) return OddWitness{transitivity_hexagon(g, reps[0], reps[1], reps[2])};
    }
    return part;
}

SwitchOutcome find_even_hamilton_2col(const EdgeColoring& chi) {
    require_setting(chi);
    auto res = agreement_partition(chi);
    if (auto* w = std::get_if<OddWitness>(&res)) {
        SwitchOutcome out = w->cycle.size() == 4 ? switch_c4(chi, w->cycle) : switch_c6(chi, w->cycle);
        out.chain.insert(out.chain.begin(), w->cycle.size() == 4 ? "agreement:odd-c4" : "agreement:odd-c6");
        return out;
    }
    SwitchOutcome out;
    out.cycle = dirac_hamilton_cycle(chi.host());
    out.provenance = "agreement-endgame";
    out.chain = {"agreement:partition", "agreement-endgame"};
    if (!parity_census(chi, out.cycle).is_even())
        fail(Status::internal_contradiction, "agreement partition holds but the Hamilton cycle is odd-chromatic");
    return out;
}

}  // namespace oddramsey
