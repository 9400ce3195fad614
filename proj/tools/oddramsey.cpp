// Command line front end. Every command prints one JSON document on stdout
// (DOT for `export dot`); timing and diagnostics go to stderr.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "oddramsey/bipartite_even.hpp"
#include "oddramsey/constructions.hpp"
#include "oddramsey/io.hpp"
#include "oddramsey/parity_switch.hpp"
#include "oddramsey/unique_finder.hpp"

using namespace oddramsey;
using io::json;

namespace {

struct Reply {
    Status status = Status::ok;
    json body = json::object();
    bool raw = false;  // body is an instance (or DOT text) printed as is
};

json cycle_json(const EdgeColoring& chi, const Walk& w) {
    return {{"cycle", io::walk_to_json(w)}, {"census", io::census_to_json(parity_census(chi, w))}};
}

Reply find_even_hamilton(const std::string& input) {
    auto chi = io::read_instance(input);
    auto out = find_even_hamilton_2col(chi);
    Reply r;
    r.body = cycle_json(chi, out.cycle);
    r.body["provenance"] = out.provenance;
    r.body["chain"] = out.chain;
    if (out.witness) r.body["witness"] = io::walk_to_json(*out.witness);
    return r;
}

Reply find_unique_free(const std::string& input, bool best_effort, const std::string& trace_path) {
    auto chi = io::read_instance(input);
    auto out = find_unique_free_hamilton(chi, {.best_effort = best_effort});
    Reply r;
    r.body = cycle_json(chi, out.cycle);
    r.body["guaranteed"] = out.guaranteed;
    r.body["restarts"] = out.restarts;
    if (!trace_path.empty()) {
        std::ofstream t(trace_path);
        if (!t) fail(Status::invalid_input, "cannot write " + trace_path);
        t << io::trace_to_json(out.trace).dump(2) << "\n";
    }
    return r;
}

Reply find_even_kst(const std::string& input, int s, int t, int t_prime, bool retry_w) {
    auto chi = io::read_instance(input);
    auto out = find_even_chromatic_kst(chi, s, t, {.t_prime = t_prime, .retry_w = retry_w});
    Reply r;
    r.status = out.status;
    r.body["stage"] = out.stage;
    r.body["t_prime"] = out.t_prime;
    if (out.status == Status::ok) {
        r.body["A"] = out.a;
        r.body["B"] = out.b;
        r.body["V1"] = out.v1;
        r.body["w"] = out.w;
        r.body["census"] = io::census_to_json(out.census);
    }
    return r;
}

Reply oracle_exact(int n, const std::string& mode_name, int r_max, bool minimum) {
    auto mode = parse_mode(mode_name);
    if (!mode) fail(Status::invalid_input, "mode must be odd or unique");
    Reply rep;
    rep.body["n"] = n;
    rep.body["mode"] = mode_name;
    auto record = [&](int r, const OracleResult& res) {
        json e{{"r", r}, {"exists", res.exists}, {"nodes", res.nodes}, {"cycles", res.cycles}, {"scheme", res.scheme}};
        if (res.certificate) e["certificate"] = io::instance_to_json(*res.certificate);
        return e;
    };
    if (!minimum) {
        auto res = exact_ramsey(n, *mode, r_max);
        auto e = record(r_max, res);
        for (auto& [k, v] : e.items()) rep.body[k] = v;
        return rep;
    }
    json table = json::array();
    rep.body["minimum"] = nullptr;
    for (int r = 1; r <= r_max; ++r) {
        auto res = exact_ramsey(n, *mode, r);
        table.push_back(record(r, res));
        if (res.exists) {
            rep.body["minimum"] = r;
            break;
        }
    }
    rep.body["table"] = std::move(table);
    if (rep.body["minimum"].is_null()) rep.status = Status::not_found;
    return rep;
}

Reply verify_cycles(const std::string& input, const std::string& pred_name) {
    auto pred = parse_predicate(pred_name);
    if (!pred) fail(Status::invalid_input, "unknown predicate " + pred_name);
    auto chi = io::read_instance(input);
    auto v = verify_every_cycle(chi, *pred);
    Reply r;
    r.body["predicate"] = pred_name;
    r.body["holds"] = v.holds;
    r.body["cycles_checked"] = v.cycles_checked;
    if (v.counterexample) r.body["counterexample"] = cycle_json(chi, *v.counterexample);
    return r;
}

std::optional<AdversarialFamily> parse_family(const std::string& s) {
    for (int f = 0; f < adversarial_family_count; ++f)
        if (to_string(static_cast<AdversarialFamily>(f)) == s) return static_cast<AdversarialFamily>(f);
    return std::nullopt;
}

int emit(const Reply& r) {
    if (r.raw && r.body.is_string())
        std::cout << r.body.get<std::string>();
    else if (r.raw)
        std::cout << r.body.dump(2) << "\n";
    else {
        json out = r.body;
        out["status"] = to_string(r.status);
        std::cout << out.dump(2) << "\n";
    }
    return exit_code(r.status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamilton cycles and complete bipartite graphs with colour-parity constraints"};
    app.require_subcommand(1);
    int max_n = 0;
    app.add_option("--max-n", max_n, "Enumeration cap (same as ODDRAMSEY_MAX_N)");

    std::string input, trace, predicate, mode, family;
    int s = 0, t = 0, t_prime = 0, n = 0, r = 0, min_degree = -1;
    std::uint64_t seed = 0;
    bool best_effort = false, retry_w = false, minimum = false;

    auto* find = app.add_subcommand("find", "Search for a structure in an instance");
    find->require_subcommand(1);
    auto* f_even = find->add_subcommand("even-hamilton", "Even-chromatic Hamilton cycle of a 2-coloured dense graph");
    f_even->add_option("--input", input, "Instance JSON ('-' for stdin)")->required();
    auto* f_uniq = find->add_subcommand("unique-free", "Hamilton cycle of K_n with no colour used exactly once");
    f_uniq->add_option("--input", input, "Instance JSON ('-' for stdin)")->required();
    f_uniq->add_flag("--best-effort", best_effort, "Run even when r > n/4 (no guarantee)");
    f_uniq->add_option("--trace", trace, "Write the colour-ledger trace to this file");
    auto* f_kst = find->add_subcommand("even-kst", "Even-chromatic K_{s,t}");
    f_kst->add_option("--input", input, "Instance JSON ('-' for stdin)")->required();
    f_kst->add_option("--s", s, "Size of the first side")->required();
    f_kst->add_option("--t", t, "Size of the second side")->required();
    f_kst->add_option("--t-prime", t_prime, "Size of the strongly-even side (default: see README)");
    f_kst->add_flag("--retry-w", retry_w, "Try further w-triples when one fails");

    auto* construct = app.add_subcommand("construct", "Explicit colourings");
    construct->require_subcommand(1);
    auto* c_upper = construct->add_subcommand("unique-upper", "Colouring of K_n where every Hamilton cycle has a unique colour");
    c_upper->add_option("--n", n, "Even order >= 4")->required();

    auto* oracle = app.add_subcommand("oracle", "Exhaustive oracles");
    oracle->require_subcommand(1);
    auto* o_exact = oracle->add_subcommand("exact", "Decide whether r colours suffice for K_n and C_n");
    o_exact->add_option("--n", n, "Order")->required();
    o_exact->add_option("--mode", mode, "odd or unique")->required();
    o_exact->add_option("--r", r, "Palette size (the upper end with --minimum)")->required();
    o_exact->add_flag("--minimum", minimum, "Report the least r up to --r that suffices");

    auto* gen = app.add_subcommand("gen", "Instance generators");
    gen->require_subcommand(1);
    auto* g_rand = gen->add_subcommand("random", "Uniform random colouring (SplitMix64)");
    g_rand->add_option("--n", n, "Order")->required();
    g_rand->add_option("--r", r, "Palette size")->required();
    g_rand->add_option("--seed", seed, "Seed")->required();
    g_rand->add_option("--min-degree", min_degree, "Random spanning subgraph with this minimum degree instead of K_n");
    auto* g_adv = gen->add_subcommand("adversarial", "Structured colouring of K_n");
    g_adv->add_option("--family", family, "monochromatic, star-claws, proper-folded, sparse-rare, split-halves, nested-blocks")->required();
    g_adv->add_option("--n", n, "Order")->required();
    g_adv->add_option("--r", r, "Palette size")->required();
    g_adv->add_option("--seed", seed, "Seed for the vertex relabelling")->required();

    auto* verify = app.add_subcommand("verify", "Exhaustive checks");
    verify->require_subcommand(1);
    auto* v_cyc = verify->add_subcommand("cycles", "Check a predicate on every Hamilton cycle");
    v_cyc->add_option("--input", input, "Instance JSON ('-' for stdin)")->required();
    v_cyc->add_option("--predicate", predicate, "has-unique-color, odd-chromatic or even-chromatic")->required();

    auto* exp = app.add_subcommand("export", "Conversions");
    exp->require_subcommand(1);
    auto* e_dot = exp->add_subcommand("dot", "Graphviz rendering");
    e_dot->add_option("--input", input, "Instance JSON ('-' for stdin)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code(Status::invalid_input);
    }
    if (max_n > 0) setenv("ODDRAMSEY_MAX_N", std::to_string(max_n).c_str(), 1);

    const auto start = std::chrono::steady_clock::now();
    Reply reply;
    try {
        if (*f_even)
            reply = find_even_hamilton(input);
        else if (*f_uniq)
            reply = find_unique_free(input, best_effort, trace);
        else if (*f_kst)
            reply = find_even_kst(input, s, t, t_prime, retry_w);
        else if (*c_upper)
            reply = {Status::ok, io::instance_to_json(unique_upper_coloring(n)), true};
        else if (*o_exact)
            reply = oracle_exact(n, mode, r, minimum);
        else if (*g_rand)
            reply = {Status::ok, io::instance_to_json(min_degree >= 0 ? random_dense_coloring(n, min_degree, r, seed) : random_coloring(n, r, seed)), true};
        else if (*g_adv) {
            auto fam = parse_family(family);
            if (!fam) fail(Status::invalid_input, "unknown family " + family);
            reply = {Status::ok, io::instance_to_json(adversarial_coloring(*fam, n, r, seed)), true};
        } else if (*v_cyc)
            reply = verify_cycles(input, predicate);
        else if (*e_dot)
            reply = {Status::ok, io::to_dot(io::read_instance(input)), true};
    } catch (const Error& e) {
        reply = {e.status(), {{"error", e.what()}}, false};
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "elapsed_ms " << ms << "\n";
    return emit(reply);
}
