#include "oddramsey/bipartite_even.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <unordered_map>

namespace oddramsey {

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // saturate rather than overflow; callers only compare against budgets
        if (r > UINT64_MAX / (n - k + i)) return UINT64_MAX;
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Advances idx to the next k-combination of 0..m-1 in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < m - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

DynBitset support_bits(const HyperEdge& e, int palette) {
    DynBitset b(static_cast<std::size_t>(palette));
    for (auto c : e.support) b.flip(static_cast<std::size_t>(c - 1));
    return b;
}

DynBitset xor_of(const std::vector<DynBitset>& vs, const std::vector<std::size_t>& idx, std::size_t bits) {
    DynBitset acc(bits);
    for (auto i : idx) acc ^= vs[i];
    return acc;
}

std::size_t gf2_rank(std::vector<DynBitset> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].test(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i].test(c)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

ParityCensus bipartite_census(const EdgeColoring& chi, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    ParityCensus cen(chi.palette());
    for (auto x : a)
        for (auto y : b) cen.add(chi.color(x, y));
    return cen;
}

std::vector<Vertex> sorted_union(std::vector<Vertex> a, const std::vector<Vertex>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace

std::vector<std::vector<Vertex>> even_neighborhoods(const EdgeColoring& chi, Vertex u, int s_prime) {
    if (s_prime < 2 || s_prime % 2 != 0) fail(Status::precondition_failed, "s' must be even and at least 2");
    std::map<Color, std::vector<Vertex>> classes;
    for (auto v : chi.host().neighbor_list(u)) classes[chi.color(u, v)].push_back(v);
    std::vector<std::vector<Vertex>> groups;
    for (auto& [c, vs] : classes)
        if (vs.size() >= 2) groups.push_back(vs);

    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    // pick an even number of vertices from each colour class in turn
    auto rec = [&](auto&& self, std::size_t g, int left) -> void {
        if (left == 0) {
            auto s = cur;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        if (g == groups.size()) return;
        self(self, g + 1, left);
        const auto& cls = groups[g];
        for (std::size_t take = 2; take <= cls.size() && static_cast<int>(take) <= left; take += 2) {
            auto idx = first_combination(take);
            do {
                for (auto i : idx) cur.push_back(cls[i]);
                self(self, g + 1, left - static_cast<int>(take));
                cur.resize(cur.size() - take);
            } while (next_combination(idx, cls.size()));
        }
    };
    rec(rec, 0, s_prime);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_strongly_even(const EdgeColoring& chi, const std::vector<Vertex>& v1, const std::vector<Vertex>& v2) {
    for (auto u : v2) {
        if (std::find(v1.begin(), v1.end(), u) != v1.end()) return false;
        ParityCensus cen(chi.palette());
        for (auto v : v1) cen.add(chi.color(u, v));
        if (!cen.is_even()) return false;
    }
    return true;
}

std::optional<StronglyEvenWitness> find_strongly_even(const EdgeColoring& chi, int s_prime, int t_prime) {
    if (t_prime < 1) fail(Status::precondition_failed, "t' must be positive");
    std::map<std::vector<Vertex>, std::vector<Vertex>> owners;
    for (Vertex u = 0; u < chi.order(); ++u)
        for (auto& s : even_neighborhoods(chi, u, s_prime)) owners[std::move(s)].push_back(u);
    for (const auto& [s, us] : owners)
        if (static_cast<int>(us.size()) >= t_prime)
            return StronglyEvenWitness{s, std::vector<Vertex>(us.begin(), us.begin() + t_prime)};
    return std::nullopt;
}

ParityHypergraph build_parity_hypergraph(const EdgeColoring& chi, Vertex w1, Vertex w2, Vertex w3, const std::vector<Vertex>& v2) {
    if (w1 == w2 || w1 == w3 || w2 == w3) fail(Status::precondition_failed, "w1, w2, w3 must be distinct");
    ParityHypergraph h;
    h.palette = chi.palette();
    for (auto u : v2) {
        if (u == w1 || u == w2 || u == w3) fail(Status::precondition_failed, "V_2 meets the w-triple");
        std::array<Color, 3> cs{chi.color(u, w1), chi.color(u, w2), chi.color(u, w3)};
        std::sort(cs.begin(), cs.end());
        HyperEdge e{u, {}};
        if (cs[0] != cs[1] && cs[1] != cs[2])
            e.support = {cs[0], cs[1], cs[2]};
        else if (cs[0] == cs[1])
            e.support = {cs[2]};  // also covers the all-equal triple
        else
            e.support = {cs[0]};
        h.edges.push_back(std::move(e));
    }
    return h;
}

bool is_even_cover(const ParityHypergraph& h, const std::vector<std::size_t>& edges) {
    std::vector<int> deg(static_cast<std::size_t>(h.palette) + 1, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] >= h.edges.size()) return false;
        if (i > 0 && edges[i] <= edges[i - 1]) return false;
        for (auto c : h.edges[edges[i]].support) ++deg[static_cast<std::size_t>(c)];
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

EvenCoverResult find_even_cover(const ParityHypergraph& h, int k, EvenCoverLimits limits) {
    if (k < 2) fail(Status::precondition_failed, "even cover size must be at least 2");
    const std::size_t m = h.edges.size(), kk = static_cast<std::size_t>(k);
    const std::size_t bits = static_cast<std::size_t>(std::max(h.palette, 1));
    if (m < kk) return {Status::not_found, {}, "exhaustive"};

    std::vector<DynBitset> vec;
    for (const auto& e : h.edges) vec.push_back(support_bits(e, static_cast<int>(bits)));
    if (gf2_rank(vec) == m) return {Status::not_found, {}, "independent"};

    if (k % 2 == 0) {
        std::map<std::vector<Color>, std::vector<std::size_t>> same;
        for (std::size_t i = 0; i < m; ++i) same[h.edges[i].support].push_back(i);
        std::vector<std::size_t> picked;
        for (std::size_t i = 0; i < m && picked.size() < kk; ++i) {
            auto& g = same[h.edges[i].support];
            if (g.size() >= 2 && g[0] == i) {
                for (std::size_t j = 0; j + 1 < g.size() && picked.size() < kk; j += 2) {
                    picked.push_back(g[j]);
                    picked.push_back(g[j + 1]);
                }
            }
        }
        if (picked.size() == kk) {
            std::sort(picked.begin(), picked.end());
            return {Status::ok, picked, "duplicate-pairs"};
        }
    }

    const std::size_t h1 = kk / 2, h2 = kk - h1;
    if (binom(m, h1) <= limits.mitm_entries && binom(m, h2) <= limits.mitm_entries) {
        std::unordered_map<DynBitset, std::vector<std::vector<std::size_t>>, DynBitsetHash> half;
        auto idx = first_combination(h1);
        do half[xor_of(vec, idx, bits)].push_back(idx);
        while (next_combination(idx, m));
        std::optional<std::vector<std::size_t>> best;
        auto jdx = first_combination(h2);
        do {
            auto it = half.find(xor_of(vec, jdx, bits));
            if (it == half.end()) continue;
            for (const auto& other : it->second) {
                // every k-set arises with its h1 smallest members on the stored side
                if (other.back() >= jdx.front()) continue;
                std::vector<std::size_t> all = other;
                all.insert(all.end(), jdx.begin(), jdx.end());
                if (!best || all < *best) best = std::move(all);
            }
        } while (next_combination(jdx, m));
        if (best) return {Status::ok, *best, "meet-in-the-middle"};
        return {Status::not_found, {}, "meet-in-the-middle"};
    }

    if (binom(m, kk) <= limits.exhaustive_subsets) {
        auto idx = first_combination(kk);
        do
            if (xor_of(vec, idx, bits).none()) return {Status::ok, idx, "exhaustive"};
        while (next_combination(idx, m));
        return {Status::not_found, {}, "exhaustive"};
    }
    return {Status::unknown, {}, "budget"};
}

int default_t_prime(int n, int r, int s, int t) {
    const int cap = n - std::max(s - 3, 0) - 3;
    if (t / 8 == 0) return cap;
    const double e = 1.5 + 1.0 / (2.0 * (t / 8));
    const double v = std::ceil(std::pow(static_cast<double>(r), e));
    return v >= cap ? cap : static_cast<int>(v);
}

BruteKstResult brute_force_even_kst(const EdgeColoring& chi, int s, int t, std::uint64_t budget) {
    const int n = chi.order();
    if (!chi.host().is_complete()) fail(Status::precondition_failed, "host graph must be complete");
    if (s < 1 || t < 1 || s + t > n) fail(Status::precondition_failed, "need 1 <= s, t and s + t <= n");
    const std::uint64_t a_count = binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s));
    const std::uint64_t b_count = binom(static_cast<std::uint64_t>(n - s), static_cast<std::uint64_t>(t));
    if (a_count == UINT64_MAX || b_count == UINT64_MAX || a_count > budget / std::max<std::uint64_t>(b_count, 1))
        fail(Status::cap_exceeded, "exhaustive K_{s,t} search exceeds its budget");

    const auto bits = static_cast<std::size_t>(chi.palette());
    auto a = first_combination(static_cast<std::size_t>(s));
    do {
        std::vector<Vertex> av(a.begin(), a.end()), rest;
        std::vector<DynBitset> par;
        for (Vertex u = 0; u < n; ++u) {
            if (std::find(av.begin(), av.end(), u) != av.end()) continue;
            DynBitset p(bits);
            for (auto x : av) p.flip(static_cast<std::size_t>(chi.color(u, x) - 1));
            rest.push_back(u);
            par.push_back(std::move(p));
        }
        auto b = first_combination(static_cast<std::size_t>(t));
        do
            if (xor_of(par, b, bits).none()) {
                BruteKstResult res{true, av, {}};
                for (auto i : b) res.b.push_back(rest[i]);
                return res;
            }
        while (next_combination(b, rest.size()));
    } while (next_combination(a, static_cast<std::size_t>(n)));
    return {};
}

KstResult find_even_chromatic_kst(const EdgeColoring& chi, int s, int t, KstOptions opts) {
    const int n = chi.order();
    if (!chi.host().is_complete()) fail(Status::precondition_failed, "host graph must be complete");
    if (s < 2 || t < 1) fail(Status::precondition_failed, "need s >= 2 and t >= 1");
    if (s % 2 == 1 && (s < 3 || t % 2 != 0)) fail(Status::precondition_failed, "odd s needs s >= 3 and t even");
    if (s + t > n) fail(Status::precondition_failed, "need s + t <= n");

    KstResult res;
    auto finish = [&](std::vector<Vertex> a, std::vector<Vertex> b, std::string stage) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        res.census = bipartite_census(chi, a, b);
        if (!res.census.is_even()) fail(Status::internal_contradiction, "assembled K_{s,t} is not even-chromatic");
        res.status = Status::ok;
        res.a = std::move(a);
        res.b = std::move(b);
        res.stage = std::move(stage);
        return res;
    };
    auto certify = [&](std::string stage) {
        res.stage = std::move(stage);
        res.status = Status::unknown;
        if (!opts.certify) return res;
        try {
            if (!brute_force_even_kst(chi, s, t, 10'000'000).found) {
                res.status = Status::not_found;
                res.stage += "+exhaustive";
            }
        } catch (const Error& e) {
            if (e.status() != Status::cap_exceeded) throw;
        }
        return res;
    };

    if (s % 2 == 0) {
        res.t_prime = t;
        auto wit = find_strongly_even(chi, s, t);
        if (!wit) return certify("strongly-even");
        res.v1 = wit->v1;
        return finish(wit->v1, wit->v2, "strongly-even");
    }

    const int s_prime = s - 3;
    const int t_prime = opts.t_prime > 0 ? opts.t_prime : default_t_prime(n, chi.palette(), s, t);
    res.t_prime = t_prime;
    if (t_prime < t) fail(Status::precondition_failed, "t' must be at least t");
    if (s_prime + t_prime + 3 > n) fail(Status::precondition_failed, "need n >= s - 3 + t' + 3 for the w-triple");

    StronglyEvenWitness wit;
    if (s_prime == 0) {
        for (Vertex v = 0; v < t_prime; ++v) wit.v2.push_back(v);
    } else {
        auto found = find_strongly_even(chi, s_prime, t_prime);
        if (!found) return certify("strongly-even");
        wit = std::move(*found);
    }
    res.v1 = wit.v1;

    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v)
        if (std::find(wit.v1.begin(), wit.v1.end(), v) == wit.v1.end() && std::find(wit.v2.begin(), wit.v2.end(), v) == wit.v2.end())
            outside.push_back(v);
    auto w = first_combination(3);
    do {
        const Vertex w1 = outside[w[0]], w2 = outside[w[1]], w3 = outside[w[2]];
        auto h = build_parity_hypergraph(chi, w1, w2, w3, wit.v2);
        auto cover = find_even_cover(h, t, opts.limits);
        if (cover.status == Status::ok) {
            if (!is_even_cover(h, cover.edges)) fail(Status::internal_contradiction, "even cover failed re-verification");
            std::vector<Vertex> u2;
            for (auto i : cover.edges) u2.push_back(h.edges[i].label);
            if (!is_strongly_even(chi, wit.v1, u2)) fail(Status::internal_contradiction, "sub-witness is not strongly even");
            res.w = {w1, w2, w3};
            return finish(sorted_union(wit.v1, res.w), u2, "even-cover:" + cover.tier);
        }
        if (!opts.retry_w) break;
    } while (next_combination(w, outside.size()));
    return certify("even-cover");
}

}  // namespace oddramsey
