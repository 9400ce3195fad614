#include "oddramsey/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "oddramsey/hamilton.hpp"

namespace oddramsey {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) fail(Status::invalid_input, "empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
}

EdgeColoring random_coloring(int n, int r, std::uint64_t seed) {
    if (n < 1 || r < 1) fail(Status::precondition_failed, "need n >= 1 and r >= 1");
    SplitMix64 rng(seed);
    EdgeColoring chi(Graph::complete(n), r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) chi.set_color(u, v, 1 + static_cast<Color>(rng.below(static_cast<std::uint64_t>(r))));
    return chi;
}

namespace {

template <class T>
void shuffle(std::vector<T>& xs, SplitMix64& rng) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.below(i)]);
}

}  // namespace

EdgeColoring random_dense_coloring(int n, int min_deg, int r, std::uint64_t seed) {
    if (n < 1 || r < 1 || min_deg > n - 1) fail(Status::precondition_failed, "need n >= 1, r >= 1 and min_deg < n");
    SplitMix64 rng(seed);
    Graph g = Graph::complete(n);
    auto es = g.edges();
    shuffle(es, rng);
    for (const auto& e : es)
        if (rng.chance(1, 2) && g.degree(e.u) > min_deg && g.degree(e.v) > min_deg) g.remove_edge(e.u, e.v);
    EdgeColoring chi(g, r);
    for (const auto& e : g.edges()) chi.set_color(e.u, e.v, 1 + static_cast<Color>(rng.below(static_cast<std::uint64_t>(r))));
    return chi;
}

EdgeColoring unique_upper_coloring(int n) {
    if (n < 4 || n % 2 != 0) fail(Status::precondition_failed, "n must be even and at least 4");
    const int k = n / 2 + 1;
    EdgeColoring chi(Graph::complete(n), k);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) chi.set_color(u, v, (u < k) == (v < k) ? 1 : u + 1);
    return chi;
}

std::optional<CyclePredicate> parse_predicate(std::string_view s) {
    if (s == "has-unique-color") return CyclePredicate::has_unique;
    if (s == "odd-chromatic") return CyclePredicate::odd_chromatic;
    if (s == "even-chromatic") return CyclePredicate::even_chromatic;
    return std::nullopt;
}

std::string_view to_string(CyclePredicate p) {
    switch (p) {
        case CyclePredicate::has_unique: return "has-unique-color";
        case CyclePredicate::odd_chromatic: return "odd-chromatic";
        case CyclePredicate::even_chromatic: return "even-chromatic";
    }
    return "?";
}

bool satisfies(const ParityCensus& c, CyclePredicate p) {
    switch (p) {
        case CyclePredicate::has_unique: return c.has_unique();
        case CyclePredicate::odd_chromatic: return c.has_odd();
        case CyclePredicate::even_chromatic: return c.is_even();
    }
    return false;
}

CycleVerdict verify_every_cycle(const EdgeColoring& chi, CyclePredicate p) {
    CycleVerdict v;
    HamiltonCycleEnumerator it(chi.host());
    while (auto c = it.next()) {
        ++v.cycles_checked;
        if (!satisfies(parity_census(chi, *c), p)) {
            v.holds = false;
            v.counterexample = std::move(*c);
            break;
        }
    }
    return v;
}

std::optional<RamseyMode> parse_mode(std::string_view s) {
    if (s == "odd") return RamseyMode::odd;
    if (s == "unique") return RamseyMode::unique;
    return std::nullopt;
}

std::string_view to_string(RamseyMode m) { return m == RamseyMode::odd ? "odd" : "unique"; }

OracleResult exact_ramsey(int n, RamseyMode mode, int r, std::uint64_t max_nodes) {
    if (n < 3 || r < 1) fail(Status::precondition_failed, "need n >= 3 and r >= 1");
    const Graph kn = Graph::complete(n);
    const auto edges = kn.edges();
    const std::size_t m = edges.size();
    std::vector<std::size_t> index(static_cast<std::size_t>(n * n));
    for (std::size_t i = 0; i < m; ++i) index[static_cast<std::size_t>(edges[i].u * n + edges[i].v)] = i;

    // each cycle is checked as soon as its last edge (in edge order) is coloured
    std::vector<std::vector<std::vector<std::size_t>>> due(m);
    OracleResult res;
    HamiltonCycleEnumerator it(kn);
    while (auto c = it.next()) {
        std::vector<std::size_t> ids;
        for (const auto& e : c->edges()) ids.push_back(index[static_cast<std::size_t>(e.u * n + e.v)]);
        const std::size_t last = *std::max_element(ids.begin(), ids.end());
        due[last].push_back(std::move(ids));
        ++res.cycles;
    }

    std::vector<Color> col(m, 0);
    std::vector<int> cnt(static_cast<std::size_t>(r) + 1, 0);
    auto ok = [&](const std::vector<std::size_t>& ids) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (auto i : ids) ++cnt[static_cast<std::size_t>(col[i])];
        for (int k : cnt)
            if (mode == RamseyMode::unique ? k == 1 : k % 2 == 1) return true;
        return false;
    };
    auto rec = [&](auto&& self, std::size_t d, int used) -> bool {
        if (d == m) return true;
        const int top = std::min(r, used + 1);
        for (Color c = 1; c <= top; ++c) {
            if (++res.nodes > max_nodes) fail(Status::cap_exceeded, "colouring search node budget exhausted");
            col[d] = c;
            if (std::all_of(due[d].begin(), due[d].end(), ok) && self(self, d + 1, std::max(used, c))) return true;
        }
        return false;
    };
    res.exists = rec(rec, 0, 0);
    if (res.exists) {
        EdgeColoring chi(kn, r);
        for (std::size_t i = 0; i < m; ++i) chi.set_color(edges[i].u, edges[i].v, col[i]);
        res.certificate = std::move(chi);
    }
    return res;
}

std::string_view to_string(AdversarialFamily f) {
    switch (f) {
        case AdversarialFamily::monochromatic: return "monochromatic";
        case AdversarialFamily::star_claws: return "star-claws";
        case AdversarialFamily::proper_folded: return "proper-folded";
        case AdversarialFamily::sparse_rare: return "sparse-rare";
        case AdversarialFamily::split_halves: return "split-halves";
        case AdversarialFamily::nested_blocks: return "nested-blocks";
    }
    return "?";
}

EdgeColoring adversarial_coloring(AdversarialFamily family, int n, int r, std::uint64_t seed) {
    if (n < 4 || r < 1) fail(Status::precondition_failed, "need n >= 4 and r >= 1");
    SplitMix64 rng(seed);
    std::vector<Color> c(static_cast<std::size_t>(n * n), 1);
    auto at = [&](int u, int v) -> Color& { return c[static_cast<std::size_t>(std::min(u, v) * n + std::max(u, v))]; };
    switch (family) {
        case AdversarialFamily::monochromatic:
            break;
        case AdversarialFamily::star_claws:
            for (Color k = 2; k <= r; ++k)
                for (int v = k - 1; v < n; ++v) at(k - 2, v) = k;
            break;
        case AdversarialFamily::proper_folded: {
            const int m = n % 2 == 0 ? n : n + 1;  // odd n: dummy vertex m-1
            for (int i = 0; i < m - 1; ++i) {
                const Color k = 1 + i % r;
                if (m - 1 < n) at(m - 1, i) = k;
                for (int j = 1; j < m / 2; ++j) at((i + j) % (m - 1), (i - j + m - 1) % (m - 1)) = k;
            }
            break;
        }
        case AdversarialFamily::sparse_rare:
            for (Color k = 2; k <= r; ++k) {
                const int edges = 1 + static_cast<int>(rng.below(4));
                for (int i = 0; i < edges; ++i) {
                    int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                    int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
                    if (b >= a) ++b;
                    at(a, b) = k;
                }
            }
            break;
        case AdversarialFamily::split_halves: {
            const int k = n / 2 + 1;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) at(u, v) = (u < k) == (v < k) ? 1 : 1 + u % r;
            break;
        }
        case AdversarialFamily::nested_blocks:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) at(u, v) = 1 + std::min(u * r / n, v * r / n);
            break;
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    EdgeColoring chi(Graph::complete(n), r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) chi.set_color(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)], at(u, v));
    return chi;
}

}  // namespace oddramsey
