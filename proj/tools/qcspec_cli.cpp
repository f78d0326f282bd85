#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcspec/bounds.hpp"
#include "qcspec/construct.hpp"
#include "qcspec/examples.hpp"
#include "qcspec/lrc.hpp"
#include "qcspec/simulate.hpp"

using namespace qcspec;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kInputError = 1, kInvariant = 2;

// Raised when a computed report contradicts itself.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultBudget;
    std::size_t s = 2;
    std::string engines = "bch,ht,roos,subcode";
    std::string out;
};

json dist(const ExtDistance& d) {
    json j;
    j["value"] = d.is_inf() ? json("inf") : json(d.value);
    j["flag"] = d.flag == DistFlag::exact ? "exact" : d.flag == DistFlag::upper ? "upper" : "lower";
    return j;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << text;
}

QcCode load_code(const std::string& input, const std::string& example) {
    if (!example.empty()) return example_code(example);
    if (input.empty()) throw std::invalid_argument("need a code JSON path or --example");
    std::ifstream f(input);
    if (!f) throw std::invalid_argument("cannot read " + input);
    return qc_from_json(json::parse(f));
}

ExtDistance code_distance(const LinearCode& c, const Globals& g) {
    if (message_count(c.field().q(), c.dim()) <= g.budget) return min_distance_exhaustive(c, g.budget);
    return min_distance_heuristic(c, 5000, g.seed);
}

std::vector<std::size_t> parse_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) out.push_back(std::stoul(tok));
    return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    auto pos = s.find(':');
    if (pos == std::string::npos) return {std::stoul(s), std::stoul(s)};
    return {std::stoul(s.substr(0, pos)), std::stoul(s.substr(pos + 1))};
}

int cmd_bound(const Globals& g, const std::string& input, const std::string& example) {
    QcCode c = load_code(input, example);
    EngineSet eng = parse_engines(g.engines);
    ExtDistance d = code_distance(c.scalar(), g);
    auto ds = prior_spectral(c, eng);
    auto dj = jensen_bound(c, false, g.budget);
    auto dspec = optimize_spectral(c, g.s, eng);
    json rep = {{"code", qc_to_json(c)}, {"length", c.length()}, {"k", c.dim()}, {"d", dist(d)},
                {"d_S", ds.to_json()},   {"d_J", dj.to_json()},  {"d_Spec", dspec.to_json()}, {"s", g.s}};
    std::cout << "n=" << c.n() << " ell=" << c.ell() << " q=" << c.field().q() << " length=" << c.length()
              << " k=" << c.dim() << "\n";
    std::cout << "d        " << d.str() << (d.flag == DistFlag::upper ? " (upper, heuristic)" : "") << "\n";
    std::cout << "d_S      " << ds.value.str() << "\n";
    std::cout << "d_J      " << dj.value.str() << "\n";
    std::cout << "d_Spec(" << g.s << ") " << dspec.value.str() << "\n";
    for (const auto& p : dspec.picks) {
        std::cout << "  pick L={";
        for (std::size_t i = 0; i < p.L.size(); ++i) std::cout << (i ? "," : "") << p.L[i];
        std::cout << "} d_L=" << p.d.str() << " " << method_name(p.method) << "\n";
    }
    write_out(g.out, rep.dump(2) + "\n");
    if (d.flag == DistFlag::exact)
        for (const auto* b : {&ds.value, &dj.value, &dspec.value})
            if (*b > d) throw InvariantViolation("a bound exceeds the exact distance");
    return kOk;
}

int cmd_simulate(const Globals& g, SimConfig cfg, const std::string& ell, const std::string& r, const std::string& s) {
    std::tie(cfg.ell_min, cfg.ell_max) = parse_range(ell);
    std::tie(cfg.r_min, cfg.r_max) = parse_range(r);
    cfg.s_values = parse_list(s);
    cfg.seed = g.seed;
    cfg.budget = g.budget;
    cfg.engines = parse_engines(g.engines);
    auto rep = run_simulation(cfg);
    std::cout << "nontrivial " << rep.rows.size() << "  trivial " << rep.trivial << "\n";
    std::cout << "bound       sharp  best\n";
    for (const auto& t : rep.tally) std::cout << std::left << std::setw(12) << t.name << std::setw(7) << t.sharp << t.best << "\n";
    if (!g.out.empty()) {
        write_out(g.out + ".csv", rep.csv());
        write_out(g.out + ".json", rep.to_json().dump(2) + "\n");
    }
    if (rep.violations) throw InvariantViolation("a bound exceeds the exact distance");
    return kOk;
}

json picks_json(const std::vector<DefiningSetBound>& picks) {
    json a = json::array();
    for (const auto& p : picks) a.push_back({{"L", p.L}, {"d_L", dist(p.d)["value"]}, {"method", method_name(p.method)}});
    return a;
}

int cmd_construct(const Globals& g, const std::string& kind, std::uint32_t q, std::uint32_t n, std::uint32_t delta,
                  std::uint32_t a, std::size_t ell, long long gamma, std::size_t k, const std::string& sizes) {
    const auto& F = make_field_q(q);
    json out;
    if (kind == "design") {
        DesignResult d = sizes.empty() ? throw std::invalid_argument("design needs --sizes") : build_design_blocks(F, parse_list(sizes));
        auto picks = group_bch_picks(d);
        auto v = design_bound(d, picks);
        json h = json::array();
        for (const auto& p : d.h) h.push_back(p.coeffs());
        out = {{"code", qc_to_json(d.code)},
               {"certificate", {{"designed_distance", dist(v)}, {"picks", picks_json(picks)}, {"h", h}, {"gammas", d.gammas}}}};
        std::cout << "design [" << d.code.length() << "," << d.code.dim() << "," << v.str() << "]_" << q << "\n";
    } else if (kind == "lrc-c1" || kind == "lrc-c2") {
        auto r = kind == "lrc-c1" ? build_lrc_c1(F, n, delta, a) : build_lrc_c2(F, n, delta, a);
        auto jb = jensen_bound(r.code, false, g.budget);
        out = {{"code", qc_to_json(r.code)},
               {"certificate", {{"length", r.length}, {"dim", r.dim}, {"distance", r.distance}, {"factors", r.factors},
                                {"jensen", jb.to_json()}}}};
        std::cout << kind << " [" << r.length << "," << r.dim << "," << r.distance << "]_" << q << " Jensen "
                  << jb.value.str() << "\n";
        if (jb.value.value < r.distance) throw InvariantViolation("Jensen bound below the claimed distance");
    } else if (kind == "lrc-c3") {
        auto r = build_lrc_c3(F, n, ell, F.from_int(gamma));
        auto isb = improved_spectral(r.code, r.picks);
        out = {{"code", qc_to_json(r.code)},
               {"certificate", {{"h", r.h.coeffs()}, {"improved_spectral", isb.to_json()}, {"picks", picks_json(r.picks)}}}};
        std::cout << "lrc-c3 [" << r.code.length() << "," << r.code.dim() << "," << isb.value.str() << "]_" << q << "\n";
    } else if (kind == "grs") {
        auto c = extended_grs(F, q, k);
        out = {{"q", field_to_json(F)}, {"length", c.length()}, {"k", c.dim()}, {"generator", c.generator()}};
        auto d = code_distance(c, g);
        out["d"] = dist(d);
        std::cout << "grs [" << c.length() << "," << c.dim() << "," << d.str() << "]_" << q << "\n";
    } else {
        throw std::invalid_argument("unknown construction: " + kind);
    }
    if (g.out.empty()) std::cout << out.dump(2) << "\n";
    write_out(g.out, out.dump(2) + "\n");
    return kOk;
}

int cmd_lrc(const Globals& g, const std::string& input, const std::string& example) {
    QcCode c = load_code(input, example);
    auto p = qc_locality(c, g.budget);
    ExtDistance d = code_distance(c.scalar(), g);
    json rep = {{"length", c.length()}, {"k", c.dim()}, {"d", dist(d)}, {"locality", p.to_json()}};
    std::cout << "length=" << c.length() << " k=" << c.dim() << " d=" << d.str() << "\n";
    std::cout << "locality rho=" << p.rho << " delta=" << p.delta.str() << " kappa=" << p.kappa.value
              << (p.kappa.exact ? "" : " (approximate)") << "\n";
    if (!p.delta.is_inf() && c.dim() > 0) {
        auto b1 = lrc_bound_1(c.length(), c.dim(), p.rho, p.delta.value);
        rep["bound_1"] = b1;
        std::cout << "bound 1 (distance)  " << b1 << "\n";
        if (p.kappa.value > 0) {
            auto b2 = lrc_bound_2(c.length(), c.dim(), p.delta.value, p.kappa.value, c.field().q());
            rep["bound_2"] = {{"value", b2}, {"approximate", !p.kappa.exact}};
            std::cout << "bound 2 (distance)  " << b2 << (p.kappa.exact ? "" : " (approximate)") << "\n";
            if (!d.is_inf()) {
                auto b3 = lrc_bound_3(c.length(), d.value, p.delta.value, p.kappa.value, c.field().q());
                rep["bound_3"] = {{"value", b3.value}, {"z", b3.z}, {"approximate", true}};
                std::cout << "bound 3 (dimension) " << b3.value << " (approximate)\n";
            }
            if (d.flag == DistFlag::exact && p.kappa.exact && std::int64_t(d.value) > b2)
                throw InvariantViolation("distance exceeds bound 2");
        }
        if (d.flag == DistFlag::exact && std::int64_t(d.value) > b1) throw InvariantViolation("distance exceeds bound 1");
    }
    write_out(g.out, rep.dump(2) + "\n");
    return kOk;
}

int cmd_examples(const Globals& g, const std::string& name) {
    std::vector<std::string> names;
    if (name == "all") names = example_names();
    else if (std::find(example_names().begin(), example_names().end(), name) != example_names().end())
        names = {name};
    else
        throw std::invalid_argument("unknown example: " + name);
    json all = json::array();
    bool ok = true;
    for (const auto& nm : names) {
        auto r = run_example(nm);
        for (const auto& l : r.lines)
            std::cout << (l.pass ? "PASS " : "FAIL ") << nm << ": " << l.what << " = " << l.got << " (want " << l.want << ")\n";
        std::cout << (r.pass() ? "PASS " : "FAIL ") << nm << " (" << r.seconds << " s)\n";
        ok = ok && r.pass();
        all.push_back(r.to_json());
    }
    write_out(g.out, all.dump(2) + "\n");
    return ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-cyclic code distance bounds and constructions"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Seed for random streams");
    app.add_option("--budget", g.budget, "Largest message count for exhaustive distance");
    app.add_option("--s", g.s, "Number of picks for the improved spectral bound");
    app.add_option("--engines", g.engines, "Defining-set engines: bch,ht,roos,subcode");
    app.add_option("--out", g.out, "Write the machine-readable report here");
    app.fallthrough();

    std::string input, example;
    auto* bound = app.add_subcommand("bound", "Distance and bound report for a code JSON");
    bound->add_option("input", input, "Code JSON path");
    bound->add_option("--example", example, "Use a named worked-example code instead");

    SimConfig cfg;
    std::string ell = "2:4", r = "1:0", s_list = "2,3";
    auto* sim = app.add_subcommand("simulate", "Random quasi-cyclic ensemble with all bounds");
    sim->add_option("--q", cfg.q, "Field size");
    sim->add_option("--n", cfg.n, "Co-index");
    sim->add_option("--ell", ell, "Index range lo:hi");
    sim->add_option("--r", r, "Generator count range lo:hi (hi 0 means ell)");
    sim->add_option("--trials", cfg.trials, "Trials per tuple");
    sim->add_option("--s-values", s_list, "Comma-separated s values");
    sim->add_option("--threads", cfg.threads, "Worker threads");

    std::string kind;
    std::uint32_t q = 0, n = 0, delta = 2, a = 1;
    std::size_t cell = 2, k = 1;
    long long gamma = -1;
    std::string sizes;
    auto* con = app.add_subcommand("construct", "Build a designed or locally repairable code");
    con->add_option("kind", kind, "design | lrc-c1 | lrc-c2 | lrc-c3 | grs")->required();
    con->add_option("--q", q, "Field size")->required();
    con->add_option("--n", n, "Co-index");
    con->add_option("--delta", delta, "Local distance");
    con->add_option("--a", a, "Constituent parameter a");
    con->add_option("--ell", cell, "Index for lrc-c3");
    con->add_option("--gamma", gamma, "Nonzero field element (as an integer) for lrc-c3");
    con->add_option("--k", k, "Dimension for grs");
    con->add_option("--sizes", sizes, "Group sizes for design, comma-separated");

    auto* lrc = app.add_subcommand("lrc", "Locality profile and the three locality bounds");
    lrc->add_option("input", input, "Code JSON path");
    lrc->add_option("--example", example, "Use a named worked-example code instead");

    std::string ex_name = "all";
    auto* exs = app.add_subcommand("examples", "Reproduce the worked examples and tables");
    exs->add_option("name", ex_name, "Check name or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }
    try {
        if (*bound) return cmd_bound(g, input, example);
        if (*sim) return cmd_simulate(g, cfg, ell, r, s_list);
        if (*con) return cmd_construct(g, kind, q, n, delta, a, cell, gamma, k, sizes);
        if (*lrc) return cmd_lrc(g, input, example);
        if (*exs) return cmd_examples(g, ex_name);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariant;
    }
    return kInputError;
}
