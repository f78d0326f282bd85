#include "qcspec/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qcspec {

SplitMix64::result_type SplitMix64::operator()() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do x = (*this)();
    while (x >= limit);
    return x % bound;
}

SplitMix64 sim_stream(std::uint64_t seed, std::uint64_t tuple, std::uint64_t trial) {
    SplitMix64 a(seed);
    SplitMix64 b(a() ^ tuple);
    SplitMix64 c(b() ^ trial);
    return SplitMix64(c());
}

std::vector<PolyVec> random_generators(const FieldCtx& f, std::uint32_t n, std::size_t ell, std::size_t r,
                                       SplitMix64& rng) {
    std::vector<PolyVec> gens;
    for (std::size_t t = 0; t < r; ++t) {
        PolyVec row;
        for (std::size_t j = 0; j < ell; ++j) {
            std::vector<Elem> c(n);
            for (auto& x : c) x = Elem(rng.below(f.q()));
            row.emplace_back(f, c);
        }
        gens.push_back(std::move(row));
    }
    return gens;
}

void SimConfig::validate() const {
    make_field_q(q);
    if (n == 0 || std::gcd<std::uint64_t>(n, q) != 1) throw std::invalid_argument("simulate: need gcd(n, q) = 1");
    if (ell_min == 0 || ell_min > ell_max) throw std::invalid_argument("simulate: empty index range");
    if (r_min == 0 || (r_max != 0 && r_min > r_max)) throw std::invalid_argument("simulate: empty generator range");
    if (trials == 0) throw std::invalid_argument("simulate: need at least one trial");
    if (s_values.empty()) throw std::invalid_argument("simulate: need at least one s");
    for (auto s : s_values)
        if (s == 0) throw std::invalid_argument("simulate: s must be positive");
    if (message_count(q, ell_max * n) > budget)
        throw std::invalid_argument("simulate: q^(ell n) exceeds the distance budget");
}

std::vector<SimTuple> sim_tuples(const SimConfig& cfg) {
    std::vector<SimTuple> out;
    for (std::size_t ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) {
        std::size_t hi = cfg.r_max ? std::min(cfg.r_max, ell) : ell;
        for (std::size_t r = cfg.r_min; r <= hi; ++r) out.push_back({ell, r});
    }
    return out;
}

QcCode sim_code(const SimConfig& cfg, std::uint64_t tuple, std::uint64_t trial) {
    auto tuples = sim_tuples(cfg);
    if (tuple >= tuples.size()) throw std::out_of_range("sim_code: tuple index");
    const auto& F = make_field_q(cfg.q);
    auto rng = sim_stream(cfg.seed, tuple, trial);
    return QcCode(F, cfg.n, tuples[tuple].ell, random_generators(F, cfg.n, tuples[tuple].ell, tuples[tuple].r, rng));
}

namespace {

std::optional<SimRow> evaluate(const SimConfig& cfg, const SimTuple& t, std::uint64_t ti, std::uint64_t trial) {
    QcCode c = sim_code(cfg, ti, trial);
    if (c.dim() == 0 || c.dim() == c.length()) return std::nullopt;
    SimRow row;
    row.tuple = ti;
    row.trial = trial;
    row.ell = t.ell;
    row.r = t.r;
    row.k = c.dim();
    row.d = min_distance_exhaustive(c.scalar(), cfg.budget);
    for (auto s : cfg.s_values) row.d_spec.push_back(optimize_spectral(c, s, cfg.engines).value);
    row.d_j = jensen_bound(c, false, cfg.budget).value;
    row.d_s = prior_spectral(c, cfg.engines).value;
    return row;
}

std::string cell(const ExtDistance& d) { return d.str(); }

}  // namespace

SimReport run_simulation(const SimConfig& cfg) {
    cfg.validate();
    auto tuples = sim_tuples(cfg);
    std::size_t total = tuples.size() * cfg.trials;
    std::vector<std::optional<SimRow>> slots(total);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < total;) {
            std::uint64_t ti = i / cfg.trials, trial = i % cfg.trials;
            slots[i] = evaluate(cfg, tuples[ti], ti, trial);
        }
    };
    unsigned nt = std::max(1u, cfg.threads);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < nt; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    SimReport rep;
    rep.config = cfg;
    for (auto& s : cfg.s_values) rep.tally.push_back({"dSpec_s" + std::to_string(s)});
    rep.tally.push_back({"dJ"});
    rep.tally.push_back({"dS"});
    for (auto& slot : slots) {
        if (!slot) {
            ++rep.trivial;
            continue;
        }
        const SimRow& r = *slot;
        std::vector<ExtDistance> vals = r.d_spec;
        vals.push_back(r.d_j);
        vals.push_back(r.d_s);
        ExtDistance top = vals.front();
        for (const auto& v : vals) top = dmax(top, v);
        for (std::size_t b = 0; b < vals.size(); ++b) {
            if (vals[b] > r.d) ++rep.violations;
            if (vals[b] == r.d) ++rep.tally[b].sharp;
            if (vals[b] == top) ++rep.tally[b].best;
        }
        rep.rows.push_back(r);
    }
    return rep;
}

std::string SimReport::csv() const {
    std::ostringstream os;
    os << "tuple,trial,q,n,ell,r,k,d";
    for (auto s : config.s_values) os << ",dSpec_s" << s;
    os << ",dJ,dS\n";
    for (const auto& r : rows) {
        os << r.tuple << ',' << r.trial << ',' << config.q << ',' << config.n << ',' << r.ell << ',' << r.r << ','
           << r.k << ',' << cell(r.d);
        for (const auto& v : r.d_spec) os << ',' << cell(v);
        os << ',' << cell(r.d_j) << ',' << cell(r.d_s) << '\n';
    }
    return os.str();
}

nlohmann::json SimReport::to_json() const {
    nlohmann::json j;
    j["config"] = {{"q", config.q},         {"n", config.n},           {"ell", {config.ell_min, config.ell_max}},
                   {"r", {config.r_min, config.r_max}}, {"trials", config.trials}, {"seed", config.seed},
                   {"s", config.s_values}};
    j["nontrivial"] = rows.size();
    j["trivial"] = trivial;
    j["violations"] = violations;
    for (const auto& t : tally) j["tally"][t.name] = {{"sharp", t.sharp}, {"best", t.best}};
    return j;
}

}  // namespace qcspec
