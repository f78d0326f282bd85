#include "qcspec/examples.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qcspec/bounds.hpp"
#include "qcspec/construct.hpp"
#include "qcspec/lrc.hpp"
#include "qcspec/simulate.hpp"

namespace qcspec {

namespace {

PolyVec pv(const FieldCtx& f, const std::vector<std::vector<long long>>& comps) {
    PolyVec v;
    for (const auto& c : comps) v.push_back(Poly::from_ints(f, c));
    return v;
}

Mat digits(const std::vector<std::string>& rows) {
    Mat m;
    for (const auto& s : rows) {
        Vec v;
        for (char ch : s) v.push_back(Elem(ch - '0'));
        m.push_back(v);
    }
    return m;
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(const ExtDistance& d) { return d.str(); }
std::string str(const std::string& s) { return s; }
std::string str(const Poly& p) { return p.str(); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string str(const ExpSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

class Recorder {
public:
    explicit Recorder(ExampleResult& r) : r_(r) {}
    template <class A, class B>
    void eq(const std::string& what, const A& got, const B& want) {
        r_.lines.push_back({what, str(got), str(want), got == want});
    }
    template <class A, class B>
    void at_least(const std::string& what, const A& got, const B& want) {
        r_.lines.push_back({what, str(got), ">= " + str(want), got >= want});
    }
    template <class A, class B>
    void at_most(const std::string& what, const A& got, const B& want) {
        r_.lines.push_back({what, str(got), "<= " + str(want), got <= want});
    }
    void ok(const std::string& what, bool pass, const std::string& detail = "") {
        r_.lines.push_back({what, detail.empty() ? str(pass) : detail, "true", pass});
    }

private:
    ExampleResult& r_;
};

std::string params(const QcCode& c) {
    return "[" + std::to_string(c.length()) + "," + std::to_string(c.dim()) + "]_" + std::to_string(c.field().q());
}

std::string params(std::size_t len, std::size_t k, std::uint32_t q) {
    return "[" + std::to_string(len) + "," + std::to_string(k) + "]_" + std::to_string(q);
}

void worked_example(Recorder& rec, const std::string& name, const std::vector<std::string>& shown, std::uint64_t d,
                    std::size_t s, ExtDistance dspec, std::optional<ExtDistance> dj, ExtDistance ds) {
    QcCode c = example_code(name);
    rec.ok("scalar generator matches the displayed matrix",
           component_major(c.scalar(), c.n(), c.ell()) == LinearCode(c.field(), c.length(), digits(shown)));
    rec.eq("exact distance", min_distance_exhaustive(c.scalar()), ExtDistance::of(d));
    rec.eq("improved spectral bound, s=" + std::to_string(s), optimize_spectral(c, s).value, dspec);
    if (dj) rec.eq("Jensen bound", jensen_bound(c).value, *dj);
    rec.eq("prior spectral bound", prior_spectral(c).value, ds);
}

void run_9_2_6(Recorder& rec) {
    worked_example(rec, "example-9-2-6", {"101011110", "011110101"}, 6, 2, ExtDistance::of(6), std::nullopt,
                   ExtDistance::of(3));
}

void run_12_3_4(Recorder& rec) {
    worked_example(rec, "example-12-3-4", {"101000101000", "011000011000", "000111000111"}, 4, 3, ExtDistance::of(4),
                   ExtDistance::of(2), ExtDistance::of(2));
}

void run_8_6_2(Recorder& rec) {
    worked_example(rec, "example-8-6-2", {"10020000", "01020000", "00120000", "00001001", "00000102", "00000011"}, 2, 2,
                   ExtDistance::of(2), ExtDistance::of(1), ExtDistance::of(1));
    QcCode c = example_code("example-8-6-2");
    const auto& F = c.field();
    rec.eq("Lally diagonal entry 1", c.lally().at(0, 0), Poly::from_ints(F, {2, 1}));
    rec.eq("Lally diagonal entry 2", c.lally().at(1, 1), Poly::from_ints(F, {1, 1}));
    // eigenvalues as elements of the base field
    ExpSet vals;
    for (auto e : c.eigenvalues()) {
        Elem v = c.ext().pow(c.factorization().alpha, e);
        vals.push_back(c.to_ext().in_image(v) ? c.to_ext().preimage(v) : 99);
    }
    rec.eq("eigenvalues in GF(3)", normalize(vals, 100), ExpSet{1, 2});
}

void run_10_5_4(Recorder& rec) {
    const auto& F = make_field(3);
    auto cf = factor_xn_minus_1(F, 5);
    auto d = build_design(F, {5, 2, {{cf.factor_of(0)}, {cf.factor_of(1)}}, {F.from_int(-1)}});
    rec.eq("h(x) coefficients", d.h[0], Poly::from_ints(F, {1, 1, 1, 1, 1, -1}));
    rec.eq("parameters", params(d.code), std::string("[10,5]_3"));
    rec.eq("exact distance", min_distance_exhaustive(d.code.scalar()), ExtDistance::of(4));
    std::vector<DefiningSetBound> picks = {{{1, 2, 3}, ExtDistance::of(4), BoundMethod::BCH},
                                           {{0}, ExtDistance::of(2), BoundMethod::BCH}};
    rec.eq("design bound", design_bound(d, picks), ExtDistance::of(4));
    rec.eq("improved spectral bound on the same picks", improved_spectral(d.code, picks).value, ExtDistance::of(4));
    rec.eq("Jensen bound", jensen_bound(d.code).value, ExtDistance::of(2));
    const auto& cons = d.code.constituents();
    bool shape = cons.size() == 2 && cons[0].field->q() == 3 && cons[1].field->q() == 81;
    rec.ok("constituent fields GF(3), GF(81)", shape);
    if (shape) {
        rec.ok("constituent over GF(3) generated by (1 1)", cons[0].code.generator() == Mat{{1, 1}});
        rec.ok("constituent over GF(81) generated by (1 -1)", cons[1].code.generator() == Mat{{1, cons[1].field->neg(1)}});
    }
}

void run_12_2_8(Recorder& rec) {
    const auto& F = make_field(5);
    auto r = build_lrc_c3(F, 4, 3, F.from_int(-1));
    rec.eq("h(x) coefficients", r.h, Poly::monomial(F, 4));
    rec.eq("parameters", params(r.code), std::string("[12,2]_5"));
    auto d = min_distance_exhaustive(r.code.scalar());
    rec.eq("exact distance", d, ExtDistance::of(8));
    auto p = qc_locality(r.code);
    rec.eq("locality rho", std::uint64_t(p.rho), std::uint64_t(1));
    rec.eq("locality delta", p.delta, ExtDistance::of(4));
    rec.eq("Singleton-type locality bound", lrc_bound_1(12, 2, p.rho, p.delta.value), std::int64_t(8));
    rec.eq("Griesmer-type locality bound", lrc_bound_2(12, 2, p.delta.value, p.kappa.value, 5), std::int64_t(8));
    rec.ok("local dimension exact", p.kappa.exact, "kappa=" + std::to_string(p.kappa.value));
}

void run_c1(Recorder& rec) {
    const auto& F = make_field(2, 2);
    auto r = build_lrc_c1(F, 3, 2, 1);
    rec.eq("parameters", params(r.code), params(15, 9, 4));
    rec.eq("dimension formula (q+1-a)(n-delta+1)+1", std::uint64_t(r.code.dim()), std::uint64_t((4 + 1 - 1) * 2 + 1));
    auto d = min_distance_exhaustive(r.code.scalar());
    rec.eq("exact distance a n", d, ExtDistance::of(3));
    auto p = qc_locality(r.code);
    rec.eq("locality rho", std::uint64_t(p.rho), std::uint64_t(2));
    rec.eq("locality delta", p.delta, ExtDistance::of(2));
    rec.ok("local dimension exact", p.kappa.exact, "kappa=" + std::to_string(p.kappa.value));
    rec.eq("Singleton-type locality bound", lrc_bound_1(15, 9, p.rho, p.delta.value), std::int64_t(d.value));
    rec.eq("Griesmer-type locality bound", lrc_bound_2(15, 9, p.delta.value, p.kappa.value, 4), std::int64_t(d.value));
    rec.at_least("Jensen lower bound", jensen_bound(r.code).value, ExtDistance::of(3));
}

void run_table2(Recorder& rec, bool jensen_only) {
    for (const auto& row : design_table()) {
        std::string tag = "row " + std::to_string(row.no) + " q=" + std::to_string(row.q_min) + ": ";
        const auto& F = make_field_q(row.q_min);
        auto d = build_design_blocks(F, row.sizes);
        auto picks = group_bch_picks(d);
        auto isb = improved_spectral(d.code, picks).value;
        if (jensen_only) {
            rec.at_least(tag + "improved spectral >= Jensen", isb, jensen_bound(d.code).value);
            continue;
        }
        std::size_t len = row.ell * (row.q_min - 1), red = 0;
        for (auto s : row.sizes) red += s;
        rec.eq(tag + "parameters", params(d.code), params(len, len - red, row.q_min));
        auto designed = design_bound(d, picks);
        rec.eq(tag + "designed distance", designed, ExtDistance::of(row.d));
        rec.eq(tag + "improved spectral on the construction picks", isb, designed);
        rec.at_most(tag + "Singleton defect", std::uint64_t(len - d.code.dim() + 1 - row.d), row.defect);
        if (message_count(row.q_min, d.code.dim()) <= kDefaultBudget)
            rec.at_least(tag + "exact distance", min_distance_exhaustive(d.code.scalar()), ExtDistance::of(row.d));
    }
}

void run_table3(Recorder& rec, std::uint32_t q, std::uint64_t qc_dim, std::uint64_t bch_dim) {
    const auto& F = make_field(q);
    auto d = build_design_blocks(F, design_sizes(6, 3));
    rec.eq("quasi-cyclic dimension", std::uint64_t(d.code.dim()), qc_dim);
    rec.eq("BCH dimension", bch_dimension(q, 3 * (q - 1), 6), bch_dim);
    auto designed = design_bound(d, group_bch_picks(d));
    rec.eq("designed distance", designed, ExtDistance::of(6));
    auto h = min_distance_heuristic_run(d.code.scalar(), 10000, 7, 2, 6);
    rec.eq("lightest codeword found", h.distance, ExtDistance::of(6));
    rec.ok("witness lies in the code", d.code.scalar().contains(h.witness),
           std::to_string(h.iterations) + " iterations");
    rec.at_most("iterations used", h.iterations, std::uint64_t(10000));
}

// Structural facts that every quasi-cyclic code satisfies.
bool structure_holds(const QcCode& c, std::string& why) {
    const auto& E = c.ext();
    std::size_t total = 0;
    for (const auto& e : c.eigen()) {
        if (e.basis.size() != e.multiplicity) {
            why = "eigenspace dimension differs from multiplicity";
            return false;
        }
        total += e.multiplicity;
    }
    if (total != c.length() - c.dim()) {
        why = "multiplicities do not sum to ell n - k";
        return false;
    }
    Mat h = spectral_parity_check(c);
    for (const auto& row : h)
        for (const auto& g : c.scalar().generator()) {
            Elem s = 0;
            for (std::size_t i = 0; i < row.size(); ++i) s = E.add(s, E.mul(row[i], c.to_ext()(g[i])));
            if (s != 0) {
                why = "parity check does not annihilate the code";
                return false;
            }
        }
    if (rank(E, h) != total) {
        why = "parity check rank differs";
        return false;
    }
    if (!(concat_reconstruct(c) == c.scalar())) {
        why = "concatenation does not rebuild the code";
        return false;
    }
    return true;
}

void run_property_suite(Recorder& rec) {
    struct Part {
        std::uint32_t q, n;
        std::size_t ell_max;
        std::uint64_t trials, need;
    };
    std::uint64_t sharp_spec3 = 0, sharp_j = 0;
    for (auto part : {Part{2, 3, 4, 30, 200}, Part{3, 4, 3, 25, 80}}) {
        SimConfig cfg;
        cfg.q = part.q;
        cfg.n = part.n;
        cfg.ell_min = 2;
        cfg.ell_max = part.ell_max;
        cfg.trials = part.trials;
        cfg.seed = 20240601;
        cfg.s_values = {2, 3, 4};
        auto rep = run_simulation(cfg);
        std::string tag = "q=" + std::to_string(part.q) + ": ";
        rec.at_least(tag + "nontrivial codes", std::uint64_t(rep.rows.size()), part.need);
        std::uint64_t chain = 0, jens = 0, mono = 0, structure = 0;
        std::string why;
        for (const auto& r : rep.rows) {
            bool c_ok = r.d_s <= r.d_spec[0];
            for (const auto& v : r.d_spec) c_ok = c_ok && v <= r.d;
            chain += !c_ok;
            jens += !(r.d_j <= r.d);
            mono += !(r.d_spec[0] <= r.d_spec[1] && r.d_spec[1] <= r.d_spec[2]);
            std::string w;
            if (!structure_holds(sim_code(cfg, r.tuple, r.trial), w)) {
                ++structure;
                why = w;
            }
        }
        rec.eq(tag + "codes with d_S <= d_Spec(s) <= d violated", chain, std::uint64_t(0));
        rec.eq(tag + "codes with d_J > d", jens, std::uint64_t(0));
        rec.eq(tag + "codes with d_Spec not monotone in s", mono, std::uint64_t(0));
        rec.eq(tag + "codes failing structural identities" + (why.empty() ? "" : " (" + why + ")"), structure,
               std::uint64_t(0));
        std::uint64_t s3 = rep.tally[1].sharp, j = rep.tally[3].sharp;
        rec.ok(tag + "sharp counts d_Spec(2), d_Spec(3), d_Spec(4), d_J, d_S", true,
               std::to_string(rep.tally[0].sharp) + ", " + std::to_string(s3) + ", " + std::to_string(rep.tally[2].sharp) +
                   ", " + std::to_string(j) + ", " + std::to_string(rep.tally[4].sharp));
        sharp_spec3 += s3;
        sharp_j += j;
    }
    rec.at_least("sharp count of d_Spec(3) vs d_J over all codes", sharp_spec3, sharp_j);
}

using Runner = std::function<void(Recorder&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> r = {
        {"example-9-2-6", run_9_2_6},
        {"example-12-3-4", run_12_3_4},
        {"example-8-6-2", run_8_6_2},
        {"design-10-5-4", run_10_5_4},
        {"lrc-c3-12-2-8", run_12_2_8},
        {"table2", [](Recorder& rec) { run_table2(rec, false); }},
        {"table3-q11", [](Recorder& rec) { run_table3(rec, 11, 22, 21); }},
        {"table3-q13", [](Recorder& rec) { run_table3(rec, 13, 28, 23); }},
        {"lrc-c1-15-9-3", run_c1},
        {"property-suite", run_property_suite},
        {"table2-jensen", [](Recorder& rec) { run_table2(rec, true); }},
    };
    return r;
}

}  // namespace

bool ExampleResult::pass() const {
    if (lines.empty()) return false;
    for (const auto& l : lines)
        if (!l.pass) return false;
    return true;
}

nlohmann::json ExampleResult::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["pass"] = pass();
    j["seconds"] = seconds;
    for (const auto& l : lines) j["checks"].push_back({{"what", l.what}, {"got", l.got}, {"want", l.want}, {"pass", l.pass}});
    return j;
}

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

ExampleResult run_example(const std::string& name) {
    for (const auto& [n, f] : registry()) {
        if (n != name) continue;
        ExampleResult r{name, {}, 0};
        Recorder rec(r);
        auto t0 = std::chrono::steady_clock::now();
        try {
            f(rec);
        } catch (const std::exception& e) {
            r.lines.push_back({"completed without error", e.what(), "no exception", false});
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (name == "example-9-2-6") rec.ok("runtime under 5 s", r.seconds < 5.0, std::to_string(r.seconds) + " s");
        return r;
    }
    throw std::invalid_argument("unknown example: " + name);
}

const std::vector<std::string>& example_code_names() {
    static const std::vector<std::string> names = {"example-9-2-6", "example-12-3-4", "example-8-6-2",
                                                   "design-10-5-4", "lrc-c3-12-2-8", "lrc-c1-15-9-3"};
    return names;
}

QcCode example_code(const std::string& name) {
    if (name == "example-9-2-6") {
        const auto& F = make_field(2);
        return QcCode(F, 3, 3, {pv(F, {{0, 1, 1}, {1, 1}, {1, 0, 1}})});
    }
    if (name == "example-12-3-4") {
        const auto& F = make_field(2);
        return QcCode(F, 3, 4, {pv(F, {{1, 0, 1}, {1, 1, 1}, {1, 0, 1}, {1, 1, 1}})});
    }
    if (name == "example-8-6-2") {
        const auto& F = make_field(3);
        return QcCode(F, 4, 2, {pv(F, {{2, 1, 2, 1}, {1, 2, 1}}), pv(F, {{0, 1, 2}, {1, 1, 1, 1}})});
    }
    if (name == "design-10-5-4") {
        const auto& F = make_field(3);
        return QcCode(F, 5, 2, {pv(F, {{1}, {1, 1, 1, 1, 1, -1}}), pv(F, {{0}, {-1, 0, 0, 0, 0, 1}})});
    }
    if (name == "lrc-c3-12-2-8") {
        const auto& F = make_field(5);
        return build_lrc_c3(F, 4, 3, F.from_int(-1)).code;
    }
    if (name == "lrc-c1-15-9-3") return build_lrc_c1(make_field(2, 2), 3, 2, 1).code;
    throw std::invalid_argument("unknown example code: " + name);
}

LinearCode component_major(const LinearCode& c, std::uint32_t n, std::size_t ell) {
    Mat rows;
    for (const auto& v : c.generator()) {
        Vec out(v.size());
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < ell; ++j) out[j * n + i] = v[i * ell + j];
        rows.push_back(out);
    }
    return LinearCode(c.field(), c.length(), rows);
}

}  // namespace qcspec
