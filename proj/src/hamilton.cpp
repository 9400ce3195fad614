#include "oddramsey/hamilton.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace oddramsey {

Graph ClosureTrace::closure() const {
    Graph g = base;
    for (const auto& s : added) g.add_edge(s.edge.u, s.edge.v);
    return g;
}

ClosureTrace bondy_chvatal_closure(const Graph& g, int threshold) {
    ClosureTrace trace{g, threshold, {}};
    Graph cur = g;
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = cur.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (cur.adjacent(u, v)) continue;
                int sum = deg[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(v)];
                if (sum < threshold) continue;
                cur.add_edge(u, v);
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(v)];
                trace.added.push_back({Edge(u, v), sum});
                changed = true;
            }
        }
    }
    return trace;
}

namespace {

/// Rotates a closed cycle so that it reads x, ..., y with x,y adjacent on it.
std::vector<Vertex> open_at(const std::vector<Vertex>& cyc, Vertex x, Vertex y) {
    const std::size_t n = cyc.size();
    auto pos = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), x) - cyc.begin());
    std::vector<Vertex> out(n);
    if (cyc[(pos + n - 1) % n] == y) {
        for (std::size_t i = 0; i < n; ++i) out[i] = cyc[(pos + i) % n];
    } else {
        for (std::size_t i = 0; i < n; ++i) out[i] = cyc[(pos + n - i) % n];
    }
    return out;
}

}  // namespace

Walk unwind_closure(const ClosureTrace& trace, const Walk& cycle) {
    Graph cur = trace.closure();
    const int n = cur.order();
    if (trace.threshold < n)
        fail(Status::precondition_failed, "unwinding needs a closure threshold of at least the vertex count");
    if (!is_hamilton_cycle(cur, cycle)) fail(Status::invalid_input, "cycle is not Hamiltonian in the closure");

    std::vector<Vertex> cyc = cycle.vertices;
    for (auto it = trace.added.rbegin(); it != trace.added.rend(); ++it) {
        const Vertex x = it->edge.u, y = it->edge.v;
        cur.remove_edge(x, y);
        const std::size_t m = cyc.size();
        auto px = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), x) - cyc.begin());
        bool uses = cyc[(px + 1) % m] == y || cyc[(px + m - 1) % m] == y;
        if (!uses) continue;
        auto c = open_at(cyc, x, y);  // c[0]=x ... c[m-1]=y
        std::size_t pick = m;
        for (std::size_t i = 1; i + 2 < m; ++i) {
            if (cur.adjacent(x, c[i + 1]) && cur.adjacent(y, c[i])) {
                pick = i;
                break;
            }
        }
        if (pick == m)
            fail(Status::internal_contradiction,
                 "no crossing pair for closure edge " + std::to_string(x) + "-" + std::to_string(y));
        std::vector<Vertex> next;
        next.reserve(m);
        next.push_back(x);
        for (std::size_t i = pick + 1; i < m; ++i) next.push_back(c[i]);
        for (std::size_t i = pick; i >= 1; --i) next.push_back(c[i]);
        cyc = std::move(next);
    }
    Walk out = make_cycle(std::move(cyc));
    if (!is_hamilton_cycle(trace.base, out))
        fail(Status::internal_contradiction, "unwound cycle is not Hamiltonian in the base graph");
    return out;
}

namespace {

class Backtracker {
public:
    Backtracker(const Graph& g, SearchLimits limits) : g_(g), n_(g.order()), limits_(limits) {}

    std::optional<std::vector<Vertex>> cycle() {
        if (n_ < 3) return std::nullopt;
        Vertex start = 0;
        for (int v = 1; v < n_; ++v)
            if (g_.degree(v) < g_.degree(start)) start = v;
        if (g_.degree(start) < 2) return std::nullopt;
        return run(start, -1);
    }

    std::optional<std::vector<Vertex>> path(Vertex from, Vertex to) {
        if (from == to) return std::nullopt;
        return run(from, to);
    }

private:
    std::optional<std::vector<Vertex>> run(Vertex start, Vertex target) {
        start_ = start;
        target_ = target;
        unvisited_ = DynBitset(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            if (v != start) unvisited_.set(static_cast<std::size_t>(v));
        path_.assign(1, start);
        if (dfs()) return path_;
        return std::nullopt;
    }

    bool feasible() const {
        const Vertex end = path_.back();
        bool ok = true;
        unvisited_.for_each([&](std::size_t wi) {
            if (!ok) return;
            auto w = static_cast<Vertex>(wi);
            const auto& nb = g_.neighbors(w);
            int avail = static_cast<int>(nb.intersection_count(unvisited_)) + (nb.test(static_cast<std::size_t>(end)) ? 1 : 0);
            int need = 2;
            if (target_ < 0) {
                if (end != start_ && nb.test(static_cast<std::size_t>(start_))) ++avail;
            } else if (w == target_) {
                need = 1;
            }
            if (avail < need) ok = false;
        });
        if (!ok) return false;
        if (target_ < 0 && unvisited_.any()) {
            const auto& nb = g_.neighbors(start_);
            if (nb.intersection_count(unvisited_) == 0 && !nb.test(static_cast<std::size_t>(end))) return false;
        }
        return true;
    }

    bool dfs() {
        if (++nodes_ > limits_.max_nodes) fail(Status::cap_exceeded, "Hamilton search node budget exhausted");
        const Vertex u = path_.back();
        if (static_cast<int>(path_.size()) == n_) {
            if (target_ < 0) return g_.adjacent(u, start_);
            return u == target_;
        }
        DynBitset cand = g_.neighbors(u) & unvisited_;
        for (std::size_t vi = cand.find_first(); vi < cand.size(); vi = cand.find_next(vi + 1)) {
            auto v = static_cast<Vertex>(vi);
            if (v == target_ && static_cast<int>(path_.size()) != n_ - 1) continue;
            path_.push_back(v);
            unvisited_.reset(vi);
            if (feasible() && dfs()) return true;
            unvisited_.set(vi);
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int n_;
    SearchLimits limits_;
    Vertex start_ = 0;
    Vertex target_ = -1;
    DynBitset unvisited_;
    std::vector<Vertex> path_;
    std::uint64_t nodes_ = 0;
};

/// Path x..y from a Hamilton cycle of the auxiliary graph where w sees only x and y.
Walk strip_auxiliary(const std::vector<Vertex>& cyc, Vertex w, Vertex x) {
    const std::size_t m = cyc.size();
    auto pw = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), w) - cyc.begin());
    std::vector<Vertex> p;
    p.reserve(m - 1);
    for (std::size_t i = 1; i < m; ++i) p.push_back(cyc[(pw + i) % m]);
    if (p.front() != x) std::reverse(p.begin(), p.end());
    return make_path(std::move(p));
}

Graph with_auxiliary(const Graph& g, Vertex x, Vertex y) {
    const int n = g.order();
    Graph aux(n + 1);
    for (const auto& e : g.edges()) aux.add_edge(e.u, e.v);
    aux.add_edge(x, n);
    aux.add_edge(y, n);
    return aux;
}

bool clique_on_first(const Graph& g, int n) {
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (!g.adjacent(u, v)) return false;
    return true;
}

/// Closure route for an {x,y}-path: succeeds when the closure of the
/// auxiliary graph is a clique on V(G).
std::optional<Walk> closure_route(const Graph& g, Vertex x, Vertex y) {
    const int n = g.order();
    Graph aux = with_auxiliary(g, x, y);
    auto trace = bondy_chvatal_closure(aux, n + 1);
    Graph cl = trace.closure();
    if (!clique_on_first(cl, n)) return std::nullopt;
    std::vector<Vertex> cyc{n, x};
    for (int v = 0; v < n; ++v)
        if (v != x && v != y) cyc.push_back(v);
    cyc.push_back(y);
    Walk base = unwind_closure(trace, make_cycle(std::move(cyc)));
    return strip_auxiliary(base.vertices, n, x);
}

void check_pair(const Graph& g, Vertex x, Vertex y) {
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) fail(Status::invalid_input, "endpoint out of range");
    if (x == y) fail(Status::invalid_input, "path endpoints must be distinct");
}

}  // namespace

std::optional<Walk> backtrack_hamilton_cycle(const Graph& g, SearchLimits limits) {
    Backtracker bt(g, limits);
    auto c = bt.cycle();
    if (!c) return std::nullopt;
    return make_cycle(std::move(*c));
}

std::optional<Walk> backtrack_hamilton_path(const Graph& g, Vertex x, Vertex y, SearchLimits limits) {
    check_pair(g, x, y);
    const bool flip = g.degree(y) < g.degree(x);
    Backtracker bt(g, limits);
    auto p = flip ? bt.path(y, x) : bt.path(x, y);
    if (!p) return std::nullopt;
    if (flip) std::reverse(p->begin(), p->end());
    return make_path(std::move(*p));
}

Walk hamilton_path_between(const Graph& g, Vertex x, Vertex y) {
    check_pair(g, x, y);
    if (auto p = closure_route(g, x, y)) return *p;
    const int n = g.order();
    Graph aux = with_auxiliary(g, x, y);
    auto trace = bondy_chvatal_closure(aux, n + 1);
    auto c = backtrack_hamilton_cycle(trace.closure());
    if (!c) fail(Status::not_found, "no Hamilton path between " + std::to_string(x) + " and " + std::to_string(y));
    Walk base = unwind_closure(trace, *c);
    return strip_auxiliary(base.vertices, n, x);
}

OreCase classify_ore_case(const Graph& g) {
    const int n = g.order();
    if (n < 3 || min_degree(g) < n / 2) return OreCase::none;
    if (n % 2 == 0) {
        int high = 0;
        for (int v = 0; v < n; ++v) high += g.degree(v) >= n / 2 + 1;
        if (2 * high > n) return OreCase::even_dense;
        if (2 * high == n) return OreCase::even_balanced;
        return OreCase::none;
    }
    int high = 0;
    for (int v = 0; v < n; ++v) high += g.degree(v) >= (n + 1) / 2;
    if (2 * high > n + 3) return OreCase::odd_dense;
    return OreCase::none;
}

namespace {

/// x u_1 u_2 v_2 u_3 v_3 ... u_{n/2} y over V_0 = high-degree class, V_1 = independent class.
Walk interleaved_path(const Graph& g, Vertex x, Vertex y, const std::vector<Vertex>& high, const std::vector<Vertex>& low) {
    std::optional<Edge> inner;
    for (std::size_t i = 0; i < high.size() && !inner; ++i)
        for (std::size_t j = i + 1; j < high.size(); ++j)
            if (g.adjacent(high[i], high[j])) {
                inner = Edge(high[i], high[j]);
                break;
            }
    if (!inner) fail(Status::internal_contradiction, "high-degree class spans no edge");
    std::vector<Vertex> us{inner->u, inner->v};
    for (auto v : high)
        if (v != inner->u && v != inner->v) us.push_back(v);
    std::vector<Vertex> vs;
    for (auto v : low)
        if (v != x && v != y) vs.push_back(v);
    std::vector<Vertex> p{x, us[0], us[1]};
    for (std::size_t k = 0; k < vs.size(); ++k) {
        p.push_back(vs[k]);
        p.push_back(us[k + 2]);
    }
    p.push_back(y);
    Walk w = make_path(std::move(p));
    if (!is_hamilton_path(g, w, x, y))
        fail(Status::internal_contradiction, "interleaved construction produced an invalid path");
    return w;
}

}  // namespace

StrongOreResult strong_ore_path(const Graph& g, Vertex x, Vertex y, StrongOreOptions opts) {
    check_pair(g, x, y);
    const int n = g.order();
    const OreCase which = classify_ore_case(g);

    auto fallback = [&](const std::string& why) -> StrongOreResult {
        if (!opts.fallback) fail(Status::precondition_failed, why);
        auto p = backtrack_hamilton_path(g, x, y);
        if (!p) fail(Status::not_found, "no Hamilton path between " + std::to_string(x) + " and " + std::to_string(y));
        return StrongOreResult{*p, which, false, true};
    };

    if (which == OreCase::none) return fallback("no strengthened-Ore hypothesis holds");

    if (auto p = closure_route(g, x, y)) return StrongOreResult{*p, which, false, false};

    if (which != OreCase::even_balanced)
        fail(Status::internal_contradiction, "closure of the auxiliary graph is not a clique although the degree hypothesis holds");

    std::vector<Vertex> high, low;
    for (int v = 0; v < n; ++v) (g.degree(v) == n / 2 ? low : high).push_back(v);
    for (std::size_t i = 0; i < low.size(); ++i)
        for (std::size_t j = i + 1; j < low.size(); ++j)
            if (g.adjacent(low[i], low[j]))
                fail(Status::internal_contradiction, "closure failed but the degree-n/2 class is not independent");
    const bool x_low = g.degree(x) == n / 2, y_low = g.degree(y) == n / 2;
    if (!x_low || !y_low) return fallback("balanced case covers only pairs inside the degree-n/2 class");
    return StrongOreResult{interleaved_path(g, x, y, high, low), which, true, false};
}

Walk dirac_hamilton_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 3) fail(Status::precondition_failed, "Hamilton cycles need at least 3 vertices");
    auto trace = bondy_chvatal_closure(g, n);
    Graph cl = trace.closure();
    Walk cyc;
    if (cl.is_complete()) {
        std::vector<Vertex> vs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) vs[static_cast<std::size_t>(v)] = v;
        cyc = make_cycle(std::move(vs));
    } else {
        auto c = backtrack_hamilton_cycle(cl);
        if (!c) fail(Status::not_found, "graph has no Hamilton cycle");
        cyc = *c;
    }
    return unwind_closure(trace, cyc);
}

Walk hamilton_cycle_avoiding_edge(const Graph& g, Edge forbidden) {
    Graph h = g;
    h.remove_edge(forbidden.u, forbidden.v);
    auto c = backtrack_hamilton_cycle(h);
    if (!c) fail(Status::not_found, "no Hamilton cycle avoids the forbidden edge");
    return *c;
}

Walk short_connector(const Graph& g, Vertex a, Vertex b, std::span<const Vertex> avoid) {
    check_pair(g, a, b);
    if (g.adjacent(a, b)) return make_path({a, b});
    DynBitset common = g.neighbors(a) & g.neighbors(b);
    for (auto s : avoid) common.reset(static_cast<std::size_t>(s));
    std::size_t x = common.find_first();
    if (x >= common.size())
        fail(Status::not_found, "no connector of length at most 2 between " + std::to_string(a) + " and " + std::to_string(b));
    return make_path({a, static_cast<Vertex>(x), b});
}

int enumeration_cap() {
    if (const char* env = std::getenv("ODDRAMSEY_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 12;
}

HamiltonCycleEnumerator::HamiltonCycleEnumerator(const Graph& g, int cap)
    : g_(&g), n_(g.order()), visited_(static_cast<std::size_t>(g.order())) {
    if (n_ > cap) fail(Status::cap_exceeded, "enumeration cap " + std::to_string(cap) + " exceeded");
    if (n_ < 3) {
        done_ = true;
        return;
    }
    path_.push_back(0);
    cursor_.push_back(-1);
    visited_.set(0);
}

std::optional<Walk> HamiltonCycleEnumerator::next() {
    while (!done_) {
        const std::size_t d = path_.size() - 1;
        const Vertex u = path_[d];
        DynBitset cand = g_->neighbors(u);
        cand.subtract(visited_);
        std::size_t vi = cand.find_next(static_cast<std::size_t>(cursor_[d] + 1));
        if (vi >= cand.size()) {
            if (d == 0) {
                done_ = true;
                break;
            }
            visited_.reset(static_cast<std::size_t>(u));
            path_.pop_back();
            cursor_.pop_back();
            continue;
        }
        auto v = static_cast<Vertex>(vi);
        cursor_[d] = v;
        if (static_cast<int>(d) + 2 == n_) {
            if (g_->adjacent(v, 0) && path_[1] < v) {
                std::vector<Vertex> out = path_;
                out.push_back(v);
                return make_cycle(std::move(out));
            }
            continue;
        }
        path_.push_back(v);
        cursor_.push_back(-1);
        visited_.set(vi);
    }
    return std::nullopt;
}

std::uint64_t count_hamilton_cycles(const Graph& g, int cap) {
    HamiltonCycleEnumerator en(g, cap);
    std::uint64_t c = 0;
    while (en.next()) ++c;
    return c;
}

}  // namespace oddramsey
