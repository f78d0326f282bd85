#include "qcspec/lrc.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qcspec {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::uint64_t griesmer_upper(std::uint32_t q, std::uint32_t n, std::uint64_t delta) {
    std::uint64_t k = 0;
    while (k < n && griesmer(k + 1, delta, q) <= n) ++k;
    return k;
}

// Random systematic generators [I | A]; true when one reaches distance delta.
bool random_witness(std::uint32_t q, std::uint32_t n, std::uint64_t k, std::uint64_t delta) {
    const auto& F = make_field_q(q);
    std::mt19937_64 rng(0x5eed + 131 * n + 17 * k + delta);
    std::uniform_int_distribution<Elem> pick(0, q - 1);
    for (int t = 0; t < 4000; ++t) {
        Mat g(k, Vec(n, 0));
        for (std::size_t i = 0; i < k; ++i) {
            g[i][i] = 1;
            for (std::size_t j = k; j < n; ++j) g[i][j] = pick(rng);
        }
        if (min_distance_exhaustive(LinearCode(F, n, g)).value >= delta) return true;
    }
    return false;
}

}  // namespace

KappaResult kappa_for(std::uint32_t q, std::uint32_t n, std::uint64_t delta) {
    if (n == 0 || delta == 0) throw std::invalid_argument("kappa_for: need n, delta >= 1");
    if (delta == 1) return {n, true};
    if (delta > n) return {0, true};
    if (delta == n) return {1, true};
    std::uint64_t up = griesmer_upper(q, n, delta);
    // repetition code and MDS codes from shortened or punctured extended GRS codes
    if (up <= 1) return {up, true};
    if (up == n - delta + 1 && n <= std::uint64_t(q) + 1) return {up, true};
    if (n <= 8 && q <= 5 && message_count(q, up) <= 100000 && random_witness(q, n, up, delta)) return {up, true};
    return {up, false};
}

LocalityProfile qc_locality(const QcCode& c, std::uint64_t budget) {
    std::vector<std::size_t> I;
    for (const auto& con : c.constituents())
        if (con.code.dim() > 0) I.push_back(con.factor);
    LinearCode local = minimal_ideal_sum(c, I);
    LocalityProfile p{1, ExtDistance::inf(), I, local, {}};
    if (I.empty()) return p;
    p.delta = min_distance_exhaustive(local, budget);
    p.rho = c.n() - p.delta.value + 1;
    p.kappa = kappa_for(c.field().q(), c.n(), p.delta.value);
    for (std::size_t j = 0; j < c.ell(); ++j) {
        std::vector<std::size_t> block;
        for (std::size_t i = 0; i < c.n(); ++i) block.push_back(i * c.ell() + j);
        if (!local.contains(restrict(c.scalar(), block)))
            throw std::logic_error("qc_locality: a column block leaves the local code");
    }
    return p;
}

nlohmann::json LocalityProfile::to_json() const {
    nlohmann::json j;
    j["rho"] = rho;
    j["delta"] = delta.is_inf() ? nlohmann::json("inf") : nlohmann::json(delta.value);
    j["factors"] = factors;
    j["local_dim"] = local.dim();
    j["kappa"] = kappa.value;
    j["kappa_exact"] = kappa.exact;
    return j;
}

std::int64_t lrc_bound_1(std::uint64_t m, std::uint64_t k, std::uint64_t rho, std::uint64_t delta) {
    if (k == 0 || rho == 0) throw std::invalid_argument("lrc_bound_1: need k, rho >= 1");
    return std::int64_t(m) - std::int64_t(k) + 1 - (std::int64_t(ceil_div(k, rho)) - 1) * (std::int64_t(delta) - 1);
}

std::int64_t lrc_bound_2(std::uint64_t m, std::uint64_t k, std::uint64_t delta, std::uint64_t kappa, std::uint64_t q) {
    if (kappa == 0) throw std::invalid_argument("lrc_bound_2: need kappa >= 1");
    std::uint64_t t = ceil_div(k, kappa);
    return std::int64_t(m) - std::int64_t(t * griesmer(kappa, delta, q)) + std::int64_t(griesmer(t * kappa - k + 1, delta, q));
}

std::uint64_t kopt_upper(std::int64_t length, std::uint64_t d, std::uint64_t q) {
    if (d == 0) throw std::invalid_argument("kopt_upper: need d >= 1");
    if (length < std::int64_t(d)) return 0;
    std::uint64_t k = 0;
    while (griesmer(k + 1, d, q) <= std::uint64_t(length)) ++k;
    return k;
}

DimensionBound lrc_bound_3(std::uint64_t m, std::uint64_t d, std::uint64_t delta, std::uint64_t kappa, std::uint64_t q) {
    if (kappa == 0) throw std::invalid_argument("lrc_bound_3: need kappa >= 1");
    std::int64_t gk = std::int64_t(griesmer(kappa, delta, q));
    DimensionBound best{~std::uint64_t(0), 0, true};
    // the inner length only decreases with z, so stop after the first length below d
    for (std::uint64_t z = 0;; ++z) {
        std::uint64_t x = z / kappa, y = z % kappa;
        std::int64_t len = std::int64_t(m) - std::int64_t(x + 1) * gk + std::int64_t(griesmer(kappa - y, delta, q));
        std::uint64_t v = z + kopt_upper(len, d, q);
        if (v < best.value) best = {v, z, true};
        if (len < std::int64_t(d)) break;
    }
    return best;
}

}  // namespace qcspec
