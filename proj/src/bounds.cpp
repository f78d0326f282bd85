#include "qcspec/bounds.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcspec {

std::string kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::Jensen: return "Jensen";
        case BoundKind::Spectral: return "Spectral";
        case BoundKind::ImprovedSpectral: return "ImprovedSpectral";
    }
    return "?";
}

EngineSet parse_engines(const std::string& list) {
    EngineSet e;
    e.bch = e.ht = e.roos = e.subcode = false;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "bch") e.bch = true;
        else if (tok == "ht") e.ht = true;
        else if (tok == "roos") e.roos = true;
        else if (tok == "subcode") e.subcode = true;
        else if (!tok.empty()) throw std::invalid_argument("unknown engine: " + tok);
    }
    return e;
}

namespace {

nlohmann::json dist_json(const ExtDistance& d) {
    if (d.is_inf()) return "inf";
    return d.value;
}

// Exact distance when the budget allows; otherwise the trivial lower bound 1.
ExtDistance distance_or_one(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
    if (c.dim() == 0) return ExtDistance::inf();
    if (message_count(c.field().q(), c.dim()) > budget) return ExtDistance::of(1, DistFlag::lower);
    return min_distance_exhaustive(c, budget);
}

std::uint64_t best_bch(const ExpSet& zeros, std::uint32_t n) {
    std::uint64_t best = 1;
    for (const auto& b : bch_bound(zeros, n)) best = std::max(best, b.d.value);
    return best;
}

}  // namespace

nlohmann::json BoundCertificate::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_name(kind);
    j["value"] = dist_json(value);
    if (kind == BoundKind::Jensen) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t z = 0; z < constituent_order.size(); ++z)
            rows.push_back({{"factor", constituent_order[z]},
                            {"constituent_d", dist_json(constituent_d[z])},
                            {"partial_sum_d", dist_json(partial_sum_d[z])}});
        j["constituents"] = rows;
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < picks.size(); ++i)
            rows.push_back({{"L", picks[i].L},
                            {"d_L", dist_json(picks[i].d)},
                            {"method", method_name(picks[i].method)},
                            {"intersection_dim", intersection_dim[i]},
                            {"intersection_d", dist_json(intersection_d[i])}});
        j["picks"] = rows;
    }
    return j;
}

bool pick_before(const DefiningSetBound& a, const DefiningSetBound& b) {
    if (a.d != b.d) return a.d > b.d;
    if (a.L.size() != b.L.size()) return a.L.size() < b.L.size();
    return a.L < b.L;
}

std::vector<DefiningSetBound> candidate_pool(const QcCode& c, const EngineSet& engines) {
    ExpSet E = c.eigenvalues();
    std::vector<DefiningSetBound> all;
    if (E.empty()) return all;
    auto add = [&](std::vector<DefiningSetBound> v) { all.insert(all.end(), v.begin(), v.end()); };
    if (engines.bch) add(bch_bound(E, c.n()));
    if (engines.ht) add(ht_bound(E, c.n(), engines.caps));
    if (engines.roos) add(roos_bound(E, c.n(), engines.caps));
    if (engines.subcode) add(subcode_bounds(c.field(), c.n(), E, engines.caps));
    auto out = dedupe(std::move(all));
    std::sort(out.begin(), out.end(), pick_before);
    return out;
}

BoundCertificate jensen_bound(const QcCode& c, bool reverse_ties, std::uint64_t budget) {
    BoundCertificate cert;
    cert.kind = BoundKind::Jensen;
    struct Item {
        std::size_t factor;
        ExtDistance d;
    };
    std::vector<Item> items;
    for (const auto& con : c.constituents())
        if (con.code.dim() > 0) items.push_back({con.factor, distance_or_one(con.code, budget)});
    std::stable_sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
        if (a.d != b.d) return a.d < b.d;
        return reverse_ties ? a.factor > b.factor : a.factor < b.factor;
    });
    const auto& cf = c.factorization();
    std::uint32_t n = c.n();
    ExtDistance best = ExtDistance::inf();
    std::vector<std::size_t> chosen;
    std::vector<char> nonzero(n, 0);
    std::size_t dim = 0;
    for (const auto& it : items) {
        chosen.push_back(it.factor);
        for (auto e : cf.cosets[it.factor]) nonzero[e] = 1;
        dim += cf.cosets[it.factor].size();
        ExtDistance part;
        if (dim == n) {
            part = ExtDistance::of(1);
        } else {
            // a term that cannot go below the running minimum needs no exact distance
            ExpSet zeros;
            for (std::uint32_t e = 0; e < n; ++e)
                if (!nonzero[e]) zeros.push_back(e);
            ExtDistance lower = ExtDistance::of(best_bch(zeros, n), DistFlag::lower);
            if (it.d * lower >= best && !best.is_inf()) {
                part = lower;
            } else {
                LinearCode sum_code = minimal_ideal_sum(c, chosen);
                part = message_count(c.field().q(), sum_code.dim()) <= budget ? min_distance_exhaustive(sum_code, budget)
                                                                               : lower;
            }
        }
        cert.constituent_order.push_back(it.factor);
        cert.constituent_d.push_back(it.d);
        cert.partial_sum_d.push_back(part);
        best = dmin(best, it.d * part);
    }
    cert.value = best;
    return cert;
}

BoundCertificate improved_spectral(const QcCode& c, std::vector<DefiningSetBound> picks) {
    if (picks.empty()) throw std::invalid_argument("improved_spectral: no picks");
    ExpSet E = c.eigenvalues();
    for (auto& p : picks) {
        p.L = normalize(p.L, c.n());
        if (!is_subset(p.L, E)) throw std::invalid_argument("improved_spectral: pick is not contained in the eigenvalues");
    }
    std::stable_sort(picks.begin(), picks.end(), pick_before);
    BoundCertificate cert;
    cert.kind = picks.size() == 1 ? BoundKind::Spectral : BoundKind::ImprovedSpectral;
    ExtDistance best = picks[0].d;
    std::optional<LinearCode> inter;
    for (const auto& p : picks) {
        LinearCode ec = common_eigenspace(c, p.L).eigencode;
        if (inter) {
            best = dmin(best, p.d * cert.intersection_d.back());
            inter = intersect(*inter, ec);
        } else {
            inter = ec;
        }
        cert.picks.push_back(p);
        cert.intersection_dim.push_back(inter->dim());
        cert.intersection_d.push_back(distance_or_one(*inter));
    }
    cert.value = dmin(best, cert.intersection_d.back());
    return cert;
}

BoundCertificate optimize_spectral(const QcCode& c, std::size_t s, const EngineSet& engines) {
    if (s == 0) throw std::invalid_argument("optimize_spectral: s must be positive");
    auto pool = candidate_pool(c, engines);
    if (pool.empty()) {
        BoundCertificate cert;
        cert.kind = s == 1 ? BoundKind::Spectral : BoundKind::ImprovedSpectral;
        cert.value = ExtDistance::of(1);
        return cert;
    }
    std::vector<LinearCode> eig;
    for (const auto& p : pool) eig.push_back(common_eigenspace(c, p.L).eigencode);
    std::map<Mat, ExtDistance> dcache;
    auto dist = [&](const LinearCode& code) {
        auto it = dcache.find(code.generator());
        if (it != dcache.end()) return it->second;
        return dcache[code.generator()] = distance_or_one(code);
    };

    ExtDistance best = ExtDistance::of(0);
    std::vector<std::size_t> best_tuple, tuple;
    // Picks are taken in pool order, so each extension only lowers the running minimum.
    auto rec = [&](auto&& self, std::size_t start, const ExtDistance& partial, const LinearCode* inter) -> void {
        for (std::size_t i = start; i < pool.size(); ++i) {
            ExtDistance np;
            std::optional<LinearCode> ni;
            if (!inter) {
                np = pool[i].d;
                ni = eig[i];
            } else {
                np = dmin(partial, pool[i].d * dist(*inter));
                ni = intersect(*inter, eig[i]);
            }
            if (np <= best) break;  // later picks have smaller d_L
            tuple.push_back(i);
            ExtDistance val = dmin(np, dist(*ni));
            if (val > best) {
                best = val;
                best_tuple = tuple;
            }
            if (tuple.size() < s && val < np) self(self, i + 1, np, &*ni);
            tuple.pop_back();
        }
    };
    rec(rec, 0, ExtDistance::inf(), nullptr);

    std::vector<DefiningSetBound> picks;
    for (auto i : best_tuple) picks.push_back(pool[i]);
    BoundCertificate cert = improved_spectral(c, picks);
    if (cert.value != best) throw std::logic_error("optimize_spectral: certificate disagrees with the search");
    cert.kind = s == 1 ? BoundKind::Spectral : BoundKind::ImprovedSpectral;
    return cert;
}

BoundCertificate prior_spectral(const QcCode& c, const EngineSet& engines) { return optimize_spectral(c, 1, engines); }

}  // namespace qcspec
