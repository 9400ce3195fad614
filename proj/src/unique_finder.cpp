#include "oddramsey/unique_finder.hpp"

#include <algorithm>

#include "oddramsey/hamilton.hpp"

namespace oddramsey {

ColorLedger::ColorLedger(int palette) : unused_(static_cast<std::size_t>(palette) + 1, true) { unused_[0] = false; }

std::vector<Color> ColorLedger::unused_colors() const {
    std::vector<Color> out;
    for (Color c = 1; c <= palette(); ++c)
        if (unused(c)) out.push_back(c);
    return out;
}

int ColorLedger::unused_count() const { return static_cast<int>(unused_colors().size()); }

Color ColorLedger::lowest_free() const {
    for (Color c = 1; c <= palette(); ++c)
        if (!unused(c)) return c;
    return 0;
}

void ColorLedger::free_color(Color c, const std::string& step, const std::string& reason, std::vector<Vertex> where) {
    if (c < 1 || c > palette()) fail(Status::internal_contradiction, "freeing a colour outside the palette");
    if (!unused(c)) fail(Status::internal_contradiction, "colour " + std::to_string(c) + " freed twice");
    unused_[static_cast<std::size_t>(c)] = false;
    history_.push_back({step, "free:" + reason, c, std::move(where)});
}

Vertex VirtualVertexMap::twin(Vertex v) const {
    for (const auto& [u, w] : pairs) {
        if (w == v) return u;
        if (u == v) return w;
    }
    return -1;
}

namespace {

int real_order(const UniqueState& st) { return st.chi.order(); }

bool is_free(const UniqueState& st, Vertex x, Vertex y) { return st.ledger.free(st.work.color(x, y)); }

std::vector<Vertex> members(const DynBitset& s) { return s.to_vector(); }

/// Claw at `center` in the lowest unused colour (other than `skip`) with three
/// leaves in R minus `exclude`.
std::optional<Claw> find_claw(const UniqueState& st, Vertex center, const std::vector<Vertex>& exclude = {}, Color skip = 0) {
    DynBitset pool = st.coll.remaining;
    if (center < real_order(st)) pool.reset(static_cast<std::size_t>(center));
    for (auto v : exclude) pool.reset(static_cast<std::size_t>(v));
    for (Color c : st.ledger.unused_colors()) {
        if (c == skip) continue;
        Claw k{center, {}, c};
        int got = 0;
        for (std::size_t z = pool.find_first(); z < pool.size() && got < 3; z = pool.find_next(z + 1))
            if (st.work.color(center, static_cast<Vertex>(z)) == c) k.leaves[static_cast<std::size_t>(got++)] = static_cast<Vertex>(z);
        if (got == 3) return k;
    }
    return std::nullopt;
}

void take_from_r(UniqueState& st, std::initializer_list<Vertex> vs) {
    for (auto v : vs) {
        if (!st.coll.remaining.test(static_cast<std::size_t>(v))) fail(Status::internal_contradiction, "vertex taken from R twice");
        st.coll.remaining.reset(static_cast<std::size_t>(v));
    }
}

void take_claw(UniqueState& st, const Claw& k, const std::string& step, const std::string& reason) {
    take_from_r(st, {k.center, k.leaves[0], k.leaves[1], k.leaves[2]});
    st.ledger.free_color(k.color, step, reason, {k.center, k.leaves[0], k.leaves[1], k.leaves[2]});
}

void require_not_dangerous(const UniqueState& st, Vertex v, const std::string& what) {
    if (is_dangerous(st, v)) fail(Status::internal_contradiction, what + " " + std::to_string(v) + " is dangerous");
}

/// Count of colours occurring exactly once over the edges of a set of paths.
bool has_unique_on_paths(const UniqueState& st) {
    ParityCensus cen(st.work.palette());
    for (const auto& p : st.coll.paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) cen.add(st.work.color(p[i], p[i + 1]));
    return cen.has_unique();
}

struct EndpointRef {
    std::size_t path;
    Vertex v;
};

std::vector<EndpointRef> endpoints(const PreservedCollection& coll) {
    std::vector<EndpointRef> out;
    for (std::size_t i = 0; i < coll.paths.size(); ++i) {
        const auto& p = coll.paths[i];
        if (p.size() < 2) fail(Status::internal_contradiction, "preserved path with fewer than two vertices");
        out.push_back({i, p.front()});
        out.push_back({i, p.back()});
    }
    return out;
}

std::size_t path_of(const PreservedCollection& coll, Vertex end) {
    for (std::size_t i = 0; i < coll.paths.size(); ++i)
        if (coll.paths[i].front() == end || coll.paths[i].back() == end) return i;
    fail(Status::internal_contradiction, "vertex " + std::to_string(end) + " is not a path endpoint");
}

/// Joins the path ending at p to the path starting at q, optionally through `mid`.
void merge_at(PreservedCollection& coll, Vertex p, Vertex q, std::optional<Vertex> mid = std::nullopt) {
    std::size_t i = path_of(coll, p), j = path_of(coll, q);
    if (i == j) fail(Status::internal_contradiction, "merging a path with itself");
    auto a = coll.paths[i], b = coll.paths[j];
    if (a.back() != p) std::reverse(a.begin(), a.end());
    if (b.front() != q) std::reverse(b.begin(), b.end());
    if (mid) a.push_back(*mid);
    a.insert(a.end(), b.begin(), b.end());
    coll.paths[i] = std::move(a);
    coll.paths.erase(coll.paths.begin() + static_cast<long>(j));
}

/// Orients a path so it starts at `start`.
std::vector<Vertex> from(std::vector<Vertex> p, Vertex start) {
    if (p.front() != start) std::reverse(p.begin(), p.end());
    return p;
}

Walk concat_everything(const UniqueState& st) {
    std::vector<Vertex> seq;
    for (const auto& p : st.coll.paths) seq.insert(seq.end(), p.begin(), p.end());
    for (auto v : members(st.coll.remaining)) seq.push_back(v);
    return make_cycle(std::move(seq));
}

Vertex first_free_neighbor(const UniqueState& st, Vertex w, const DynBitset& pool, std::initializer_list<Vertex> skip) {
    for (std::size_t z = pool.find_first(); z < pool.size(); z = pool.find_next(z + 1)) {
        auto zv = static_cast<Vertex>(z);
        if (std::find(skip.begin(), skip.end(), zv) != skip.end()) continue;
        if (is_free(st, w, zv)) return zv;
    }
    fail(Status::internal_contradiction, "endpoint " + std::to_string(w) + " has no free neighbour left in R");
}

}  // namespace

UniqueState make_unique_state(const EdgeColoring& chi) {
    UniqueState st;
    st.chi = chi;
    st.work = chi;
    st.ledger = ColorLedger(chi.palette());
    st.coll.remaining = DynBitset(static_cast<std::size_t>(chi.order()));
    for (int v = 0; v < chi.order(); ++v) st.coll.remaining.set(static_cast<std::size_t>(v));
    st.virt.real_order = chi.order();
    return st;
}

bool is_dangerous(const UniqueState& st, Vertex v) { return find_claw(st, v).has_value(); }

void max_claw_collection(UniqueState& st, const std::vector<Claw>& seed) {
    const int n = real_order(st);
    ColorLedger fresh(st.chi.palette());
    for (auto e : st.ledger.history()) fresh.note(std::move(e));
    if (!st.ledger.history().empty()) fresh.note({"claws", "restart", 0, {}});
    st.ledger = std::move(fresh);
    st.coll = PreservedCollection{};
    st.coll.remaining = DynBitset(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) st.coll.remaining.set(static_cast<std::size_t>(v));

    for (const auto& k : seed) {
        take_claw(st, k, "claws", "seed claw");
        st.coll.claws.push_back(k);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!st.coll.remaining.test(static_cast<std::size_t>(v))) continue;
        if (auto k = find_claw(st, v)) {
            take_claw(st, *k, "claws", "claw");
            st.coll.claws.push_back(*k);
        }
    }
    for (auto v : members(st.coll.remaining)) require_not_dangerous(st, v, "after the claw step, R vertex");
}

std::optional<std::vector<Claw>> resolve_dangerous(UniqueState& st) {
    auto& claws = st.coll.claws;
    for (std::size_t i = 0; i < claws.size(); ++i) {
        const Claw h = claws[i];
        for (std::size_t li = 0; li < 3; ++li) {
            auto k1 = find_claw(st, h.leaves[li]);
            if (!k1) continue;
            const Vertex o1 = h.leaves[(li + 1) % 3], o2 = h.leaves[(li + 2) % 3];
            std::vector<Vertex> used(k1->leaves.begin(), k1->leaves.end());
            for (Vertex o : {o1, o2})
                if (auto k2 = find_claw(st, o, used, k1->color)) {
                    // two disjoint claws replace one: the collection was not maximum
                    std::vector<Claw> bigger = claws;
                    bigger[i] = *k1;
                    bigger.push_back(*k2);
                    st.ledger.note({"dangerous", "augment", k2->color, {h.center, k1->center, k2->center}});
                    return bigger;
                }
            claws[i] = *k1;
            st.coll.paths.push_back({o1, h.center, o2});
            take_from_r(st, {k1->leaves[0], k1->leaves[1], k1->leaves[2]});
            st.ledger.free_color(k1->color, "dangerous", "exchanged claw", {k1->center, k1->leaves[0], k1->leaves[1], k1->leaves[2]});
            break;
        }
    }
    for (const auto& k : claws)
        for (auto l : k.leaves) require_not_dangerous(st, l, "claw leaf");
    for (const auto& p : st.coll.paths) {
        require_not_dangerous(st, p.front(), "cherry endpoint");
        require_not_dangerous(st, p.back(), "cherry endpoint");
    }
    for (auto v : members(st.coll.remaining)) require_not_dangerous(st, v, "R vertex");
    return std::nullopt;
}

void harvest_cherries_matchings(UniqueState& st) {
    const int n = real_order(st);
    for (Color c : st.ledger.unused_colors()) {
        auto r = members(st.coll.remaining);
        bool done = false;
        for (auto z : r) {
            std::vector<Vertex> nb;
            for (auto y : r)
                if (y != z && st.work.color(z, y) == c) nb.push_back(y);
            if (nb.size() >= 2) {
                st.coll.paths.push_back({nb[0], z, nb[1]});
                take_from_r(st, {nb[0], z, nb[1]});
                st.ledger.free_color(c, "harvest", "cherry", {nb[0], z, nb[1]});
                done = true;
                break;
            }
        }
        if (done) continue;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = i + 1; j < r.size(); ++j)
                if (st.work.color(r[i], r[j]) == c) es.emplace_back(r[i], r[j]);
        for (std::size_t i = 0; i < es.size() && !done; ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                const Edge a = es[i], b = es[j];
                if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
                st.coll.paths.push_back({a.u, a.v});
                st.coll.paths.push_back({b.u, b.v});
                take_from_r(st, {a.u, a.v, b.u, b.v});
                st.ledger.free_color(c, "harvest", "2-matching", {a.u, a.v, b.u, b.v});
                done = true;
                break;
            }
    }

    auto r = members(st.coll.remaining);
    for (Color c : st.ledger.unused_colors()) {
        int edges = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = i + 1; j < r.size(); ++j) edges += st.work.color(r[i], r[j]) == c;
        if (edges > 1) fail(Status::internal_contradiction, "unused colour " + std::to_string(c) + " still spans two edges in R");
    }
    if (static_cast<int>(r.size()) < 4 * st.ledger.unused_count())
        fail(Status::internal_contradiction, "|R| < 4|U| after harvesting");

    // split claws into singleton + cherry and install the virtual twins
    const int s = static_cast<int>(st.coll.claws.size());
    const Color gadget = st.ledger.lowest_free();
    if (s > 0 && gadget == 0) fail(Status::internal_contradiction, "no free colour for the gadget edges");
    EdgeColoring work(Graph::complete(n + s), st.chi.palette());
    auto real_of = [&](Vertex v) { return v < n ? v : st.coll.claws[static_cast<std::size_t>(v - n)].leaves[0]; };
    for (Vertex x = 0; x < n + s; ++x)
        for (Vertex y = x + 1; y < n + s; ++y) {
            Vertex rx = real_of(x), ry = real_of(y);
            work.set_color(x, y, rx == ry ? gadget : st.chi.color(rx, ry));
        }
    st.work = std::move(work);
    std::vector<std::vector<Vertex>> split;
    for (int j = 0; j < s; ++j) {
        const auto& k = st.coll.claws[static_cast<std::size_t>(j)];
        st.virt.pairs.emplace_back(k.leaves[0], n + j);
        split.push_back({k.leaves[0], n + j});
        st.ledger.note({"split", "singleton", gadget, {k.leaves[0], n + j}});
    }
    for (const auto& k : st.coll.claws) split.push_back({k.leaves[1], k.center, k.leaves[2]});
    split.insert(split.end(), st.coll.paths.begin(), st.coll.paths.end());
    st.coll.paths = std::move(split);
}

void merge_endpoints(UniqueState& st) {
    auto& coll = st.coll;
    while (true) {
        bool merged = false;
        auto ends = endpoints(coll);
        for (std::size_t i = 0; i < ends.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < ends.size(); ++j)
                if (ends[i].path != ends[j].path && is_free(st, ends[i].v, ends[j].v)) {
                    st.ledger.note({"merge-endpoints", "free-edge", st.work.color(ends[i].v, ends[j].v), {ends[i].v, ends[j].v}});
                    merge_at(coll, ends[i].v, ends[j].v);
                    merged = true;
                    break;
                }
        if (merged) continue;

        struct Link {
            Color c;
            EndpointRef a, b;
        };
        std::vector<Link> links;
        for (std::size_t i = 0; i < ends.size(); ++i)
            for (std::size_t j = i + 1; j < ends.size(); ++j)
                if (ends[i].path != ends[j].path) links.push_back({st.work.color(ends[i].v, ends[j].v), ends[i], ends[j]});
        std::stable_sort(links.begin(), links.end(), [](const Link& x, const Link& y) { return x.c < y.c; });
        for (std::size_t i = 0; i < links.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < links.size() && links[j].c == links[i].c; ++j) {
                const Link &x = links[i], &y = links[j];
                std::array<Vertex, 4> vs{x.a.v, x.b.v, y.a.v, y.b.v};
                std::sort(vs.begin(), vs.end());
                if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) continue;
                const bool same_pair = (x.a.path == y.a.path && x.b.path == y.b.path) || (x.a.path == y.b.path && x.b.path == y.a.path);
                if (same_pair) continue;
                merge_at(coll, x.a.v, x.b.v);
                merge_at(coll, y.a.v, y.b.v);
                st.ledger.free_color(x.c, "merge-endpoints", "double merge", {x.a.v, x.b.v, y.a.v, y.b.v});
                merged = true;
                break;
            }
        if (!merged) break;
    }
    const int m = static_cast<int>(coll.paths.size());
    if (2 * m > st.ledger.unused_count() + 3)
        fail(Status::internal_contradiction, "endpoint merging left 2m' > |U| + 3");
    if (has_unique_on_paths(st)) fail(Status::internal_contradiction, "preserved paths carry a unique colour");
}

Walk special_case_single_unused(UniqueState& st) {
    auto& paths = st.coll.paths;
    const Color c = st.ledger.unused_colors().at(0);
    auto r = members(st.coll.remaining);
    auto avoid_c = [&](const std::vector<Vertex>& vs) {
        Graph g(static_cast<int>(vs.size()));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (st.work.color(vs[i], vs[j]) != c) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        return g;
    };
    auto lift = [&](const std::vector<Vertex>& vs, const Walk& w) {
        std::vector<Vertex> out;
        for (auto v : w.vertices) out.push_back(vs[static_cast<std::size_t>(v)]);
        return out;
    };

    if (paths.size() == 1) {
        const auto& g1 = paths[0];
        const Vertex u = g1.front(), v = g1.back();
        auto sub = avoid_c(r);
        auto idx = [&](Vertex x) { return static_cast<Vertex>(std::find(r.begin(), r.end(), x) - r.begin()); };
        // v G1 u z1 P z2 (back to v); with |R| = 4 the lone c-edge of R can
        // block P for some choices of z1, z2, so every admissible pair is tried
        for (auto z1 : r) {
            if (st.work.color(u, z1) == c) continue;
            for (auto z2 : r) {
                if (z2 == z1 || st.work.color(v, z2) == c) continue;
                Walk p;
                try {
                    p = hamilton_path_between(sub, idx(z1), idx(z2));
                } catch (const Error& e) {
                    if (e.status() != Status::not_found) throw;
                    continue;
                }
                std::vector<Vertex> seq(g1.rbegin(), g1.rend());
                auto lifted = lift(r, p);
                seq.insert(seq.end(), lifted.begin(), lifted.end());
                st.ledger.note({"special-case", "single-path", c, {z1, z2}});
                return make_cycle(std::move(seq));
            }
        }
        // otherwise an endpoint sends c into the c-edge ab of R: spend c twice
        for (Vertex end : {u, v})
            for (auto a : r)
                for (auto b : r)
                    if (a != b && st.work.color(end, a) == c && st.work.color(a, b) == c) {
                        std::vector<Vertex> seq = from(g1, end == u ? v : u);
                        seq.push_back(a);
                        seq.push_back(b);
                        for (auto y : r)
                            if (y != a && y != b) seq.push_back(y);
                        st.ledger.note({"special-case", "single-path-reuse", c, {a, b}});
                        return make_cycle(std::move(seq));
                    }
        fail(Status::internal_contradiction, "no way to close the single path with one unused colour");
    }
    if (paths.size() != 2) fail(Status::internal_contradiction, "|U| = 1 but more than two paths remain");

    std::array<Vertex, 4> ends{paths[0].front(), paths[0].back(), paths[1].front(), paths[1].back()};
    for (std::size_t k = 0; k < 4; ++k)
        for (auto z : r)
            if (st.work.color(ends[k], z) == c) {
                // branch (ii): z u1 G1 v1 u2 G2 v2, with both c-edges z u1 and v1 u2
                std::size_t first = k / 2, second = 1 - first;
                auto a = from(paths[first], ends[k]);
                auto b = paths[second];
                std::vector<Vertex> seq{z};
                seq.insert(seq.end(), a.begin(), a.end());
                seq.insert(seq.end(), b.begin(), b.end());
                for (auto y : r)
                    if (y != z) seq.push_back(y);
                st.ledger.note({"special-case", "colour-reused", c, {z, ends[k]}});
                return make_cycle(std::move(seq));
            }

    // branch (i): every endpoint sees R only in free colours
    if (r.size() < 4) fail(Status::internal_contradiction, "|R| < 4 in the single-unused-colour case");
    const Vertex z1 = r[0], z2 = r[1], z3 = r[2], z4 = r[3];
    // phantom vertices a (between z1, z2) and b (between z3, z4) split a
    // Hamilton cycle into the two linking paths
    const int k = static_cast<int>(r.size());
    Graph g = avoid_c(r);
    Graph h(k + 2);
    for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
    h.add_edge(k, 0);
    h.add_edge(k, 1);
    h.add_edge(k + 1, 2);
    h.add_edge(k + 1, 3);
    auto cyc = backtrack_hamilton_cycle(h);
    if (!cyc) fail(Status::internal_contradiction, "no two disjoint linking paths in R avoiding the unused colour");
    auto cv = cyc->vertices;
    std::rotate(cv.begin(), std::find(cv.begin(), cv.end(), k), cv.end());
    auto bpos = std::find(cv.begin(), cv.end(), k + 1);
    std::vector<Vertex> x(cv.begin() + 1, bpos), y(bpos + 1, cv.end());
    auto real = [&](Vertex i) { return r[static_cast<std::size_t>(i)]; };
    auto assigned = [&](Vertex zi) {
        // z1 - u1', z2 - v1', z3 - u2', z4 - v2'
        Vertex z = real(zi);
        return z == z1 ? ends[0] : z == z2 ? ends[1] : z == z3 ? ends[2] : ends[3];
    };
    // x runs from {z1,z2} to {z3,z4}; y from {z3,z4} back to {z1,z2}
    std::vector<Vertex> seq;
    for (auto v : x) seq.push_back(real(v));
    auto second = from(paths[1], assigned(x.back()));
    seq.insert(seq.end(), second.begin(), second.end());
    for (auto v : y) seq.push_back(real(v));
    auto first = from(paths[0], assigned(y.back()));
    seq.insert(seq.end(), first.begin(), first.end());
    st.ledger.note({"special-case", "two-linkage", c, {z1, z2, z3, z4}});
    return make_cycle(std::move(seq));
}

Terminals merge_cherries(UniqueState& st) {
    auto& coll = st.coll;
    const int u = st.ledger.unused_count();
    const std::size_t m0 = coll.paths.size();
    DynBitset pool = coll.remaining;
    while (coll.paths.size() > 2) {
        std::array<Vertex, 3> w{coll.paths[0].front(), coll.paths[1].front(), coll.paths[2].front()};
        bool done = false;
        for (std::size_t i = 0; i < 3 && !done; ++i)
            for (std::size_t j = i + 1; j < 3 && !done; ++j)
                for (std::size_t z = pool.find_first(); z < pool.size(); z = pool.find_next(z + 1)) {
                    auto v = static_cast<Vertex>(z);
                    if (!is_free(st, w[i], v) || !is_free(st, w[j], v)) continue;
                    merge_at(coll, w[i], w[j], v);
                    coll.cherry_centers.push_back(v);
                    pool.reset(z);
                    st.ledger.note({"merge-cherries", "cherry", 0, {w[i], v, w[j]}});
                    done = true;
                    break;
                }
        if (!done) fail(Status::internal_contradiction, "no two of three endpoints share a free neighbour in R \\ C");
        if (2 * static_cast<int>(coll.cherry_centers.size()) > u - 1)
            fail(Status::internal_contradiction, "|C| exceeds (|U|-1)/2");
    }
    if (m0 >= 2 && coll.cherry_centers.size() != m0 - 2) fail(Status::internal_contradiction, "|C| != m' - 2");

    Terminals t;
    t.w1 = coll.paths[0].front();
    t.w1p = coll.paths[0].back();
    t.z1 = first_free_neighbor(st, t.w1, pool, {});
    t.z1p = first_free_neighbor(st, t.w1p, pool, {t.z1});
    if (coll.paths.size() == 2) {
        t.w2 = coll.paths[1].front();
        t.w2p = coll.paths[1].back();
        t.z2 = first_free_neighbor(st, t.w2, pool, {t.z1, t.z1p});
        t.z2p = first_free_neighbor(st, t.w2p, pool, {t.z1, t.z1p, t.z2});
    }
    st.ledger.note({"merge-cherries", "terminals", 0, {t.z1, t.z1p, t.z2, t.z2p}});
    return t;
}

Walk close_cycle(UniqueState& st, const Terminals& t) {
    const bool two = t.w2 >= 0;
    DynBitset pool = st.coll.remaining;
    for (auto v : st.coll.cherry_centers) pool.reset(static_cast<std::size_t>(v));
    for (auto z : {t.z1, t.z1p, t.z2, t.z2p})
        if (z >= 0) pool.reset(static_cast<std::size_t>(z));
    const auto w = members(pool);
    const int stars = two ? 2 : 1;
    const int order = stars + static_cast<int>(w.size());
    Graph g(order);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (is_free(st, w[i], w[j])) g.add_edge(stars + static_cast<Vertex>(i), stars + static_cast<Vertex>(j));
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto vi = stars + static_cast<Vertex>(i);
        if (is_free(st, t.z1, w[i]) && is_free(st, t.z1p, w[i])) g.add_edge(0, vi);
        if (two && is_free(st, t.z2, w[i]) && is_free(st, t.z2p, w[i])) g.add_edge(1, vi);
    }
    if (order < 3) fail(Status::internal_contradiction, "closing graph has fewer than three vertices");
    for (int v = 0; v < order; ++v)
        if (2 * g.degree(v) < order) fail(Status::internal_contradiction, "closing graph violates Dirac's condition");

    auto cyc = dirac_hamilton_cycle(g).vertices;
    std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), 0), cyc.end());
    auto real = [&](Vertex i) { return w[static_cast<std::size_t>(i - stars)]; };
    const auto& f1 = st.coll.paths[0];
    std::vector<Vertex> seq{t.z1};
    seq.insert(seq.end(), f1.begin(), f1.end());
    seq.push_back(t.z1p);
    if (!two) {
        // z* A: z1 F1 z1' then A backwards to the neighbour of z1
        for (auto it = cyc.rbegin(); it + 1 != cyc.rend(); ++it) seq.push_back(real(*it));
    } else {
        auto star2 = std::find(cyc.begin(), cyc.end(), 1);
        std::vector<Vertex> a(cyc.begin() + 1, star2), b(star2 + 1, cyc.end());
        // Q = z1' b^rev z2', then F2 from w2' to w2, then P^rev = z2 a^rev back to z1
        for (auto it = b.rbegin(); it != b.rend(); ++it) seq.push_back(real(*it));
        seq.push_back(t.z2p);
        const auto& f2 = st.coll.paths[1];
        seq.insert(seq.end(), f2.rbegin(), f2.rend());
        seq.push_back(t.z2);
        for (auto it = a.rbegin(); it != a.rend(); ++it) seq.push_back(real(*it));
    }
    st.ledger.note({"close", "cycle", 0, {}});
    return make_cycle(std::move(seq));
}

Walk expand_virtual(const UniqueState& st, const Walk& aug) {
    const int n = real_order(st);
    std::vector<Vertex> out;
    const auto& vs = aug.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < n) {
            out.push_back(vs[i]);
            continue;
        }
        const Vertex tw = st.virt.twin(vs[i]);
        const Vertex prev = vs[(i + vs.size() - 1) % vs.size()], next = vs[(i + 1) % vs.size()];
        if (prev != tw && next != tw) fail(Status::internal_contradiction, "virtual vertex not next to its twin");
    }
    return make_cycle(std::move(out));
}

UniqueResult find_unique_free_hamilton(const EdgeColoring& chi, UniqueOptions opts) {
    const int n = chi.order(), r = chi.palette();
    if (!chi.host().is_complete()) fail(Status::precondition_failed, "host graph must be complete");
    if (n < 4) fail(Status::precondition_failed, "need n >= 4");
    const bool guaranteed = 4 * r <= n;
    if (!guaranteed && !opts.best_effort) fail(Status::precondition_failed, "r exceeds n/4");

    // Best effort: colours absent from chi cannot be unique on any cycle, so
    // the pipeline runs on the present colours only, relabelled 1..r'.
    EdgeColoring input = chi;
    std::vector<Color> label_of{0};
    if (!guaranteed) {
        std::vector<Color> relabel(static_cast<std::size_t>(r) + 1, 0);
        for (const auto& e : chi.host().edges()) relabel[static_cast<std::size_t>(chi.color(e))] = 1;
        for (Color c = 1; c <= r; ++c)
            if (relabel[static_cast<std::size_t>(c)]) {
                relabel[static_cast<std::size_t>(c)] = static_cast<Color>(label_of.size());
                label_of.push_back(c);
            }
        const int present = static_cast<int>(label_of.size()) - 1;
        input = EdgeColoring(chi.host(), std::max(present, 1));
        for (const auto& e : chi.host().edges()) input.set_color(e.u, e.v, relabel[static_cast<std::size_t>(chi.color(e))]);
    }

    auto run = [&]() {
        UniqueState st = make_unique_state(input);
        std::vector<Claw> seed;
        while (true) {
            max_claw_collection(st, seed);
            auto bigger = resolve_dangerous(st);
            if (!bigger) break;
            seed = std::move(*bigger);
            if (++st.restarts > r) fail(Status::internal_contradiction, "claw collection grew beyond the palette");
        }
        harvest_cherries_matchings(st);
        Walk aug;
        if (st.ledger.unused_count() == 0) {
            aug = concat_everything(st);
        } else {
            merge_endpoints(st);
            const int u = st.ledger.unused_count();
            if (u == 0)
                aug = concat_everything(st);
            else if (u == 1)
                aug = special_case_single_unused(st);
            else
                aug = close_cycle(st, merge_cherries(st));
        }
        if (!is_hamilton_cycle(st.work.host(), aug)) fail(Status::internal_contradiction, "assembled walk is not a Hamilton cycle");
        Walk cyc = expand_virtual(st, aug);
        if (!is_hamilton_cycle(chi.host(), cyc)) fail(Status::internal_contradiction, "expanded walk is not a Hamilton cycle");
        UniqueResult res;
        res.census = parity_census(chi, cyc);
        if (res.census.has_unique())
            fail(Status::internal_contradiction, "colour " + std::to_string(res.census.unique_colors()[0]) + " occurs exactly once");
        res.cycle = std::move(cyc);
        res.trace = st.ledger.history();
        if (label_of.size() > 1)
            for (auto& e : res.trace)
                if (e.color > 0) e.color = label_of[static_cast<std::size_t>(e.color)];
        res.guaranteed = guaranteed;
        res.restarts = st.restarts;
        return res;
    };
    if (guaranteed) return run();
    try {
        return run();
    } catch (const Error& e) {
        fail(Status::unknown, std::string("best-effort run did not succeed: ") + e.what());
    }
}

}  // namespace oddramsey
