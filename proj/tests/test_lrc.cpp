#include "doctest.h"

#include <random>

#include "qcspec/construct.hpp"
#include "qcspec/lrc.hpp"

using namespace qcspec;

namespace {

std::uint64_t cdiv(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// Oracle: largest k with an [n, k, >= delta]_q code, by trying every systematic generator.
std::uint64_t brute_kappa(std::uint32_t q, std::uint32_t n, std::uint64_t delta) {
    const auto& F = make_field_q(q);
    std::uint64_t best = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        std::size_t free = k * (n - k);
        std::uint64_t total = message_count(q, free);
        bool found = false;
        for (std::uint64_t code = 0; code < total && !found; ++code) {
            Mat g(k, Vec(n, 0));
            std::uint64_t c = code;
            for (std::size_t i = 0; i < k; ++i) {
                g[i][i] = 1;
                for (std::size_t j = k; j < n; ++j, c /= q) g[i][j] = Elem(c % q);
            }
            found = min_distance_exhaustive(LinearCode(F, n, g)).value >= delta;
        }
        if (found) best = k;
    }
    return best;
}

// Oracle: the dimension bound evaluated over every z up to m.
std::uint64_t direct_bound_3(std::uint64_t m, std::uint64_t d, std::uint64_t delta, std::uint64_t kappa, std::uint64_t q) {
    std::uint64_t best = ~std::uint64_t(0);
    for (std::uint64_t z = 0; z <= m + kappa; ++z) {
        std::uint64_t x = z / kappa, y = z % kappa;
        std::int64_t len = std::int64_t(m) - std::int64_t((x + 1) * griesmer(kappa, delta, q)) +
                           std::int64_t(griesmer(kappa - y, delta, q));
        std::uint64_t k = 0;
        while (len >= 0 && griesmer(k + 1, d, q) <= std::uint64_t(len)) ++k;
        best = std::min(best, z + k);
    }
    return best;
}

QcCode random_qc(const FieldCtx& F, std::uint32_t n, std::size_t ell, std::size_t r, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> pick(0, F.q() - 1);
    std::vector<PolyVec> gens;
    for (std::size_t t = 0; t < r; ++t) {
        PolyVec v;
        for (std::size_t j = 0; j < ell; ++j) {
            std::vector<Elem> c(n);
            for (auto& x : c) x = pick(rng);
            v.push_back(Poly(F, c));
        }
        gens.push_back(v);
    }
    return QcCode(F, n, ell, gens);
}

void check_equality(const QcCode& c, std::uint64_t d) {
    auto p = qc_locality(c);
    REQUIRE(!p.delta.is_inf());
    REQUIRE(p.kappa.exact);
    CHECK(lrc_bound_1(c.length(), c.dim(), p.rho, p.delta.value) == std::int64_t(d));
    CHECK(lrc_bound_2(c.length(), c.dim(), p.delta.value, p.kappa.value, c.field().q()) == std::int64_t(d));
    CHECK(lrc_bound_3(c.length(), d, p.delta.value, p.kappa.value, c.field().q()).value >= c.dim());
}

}  // namespace

TEST_CASE("Singleton-type locality bound") {
    CHECK(lrc_bound_1(12, 2, 1, 4) == 8);
    for (std::uint64_t m = 4; m < 20; ++m)
        for (std::uint64_t k = 1; k <= m; ++k)
            for (std::uint64_t rho = 1; rho <= 5; ++rho)
                for (std::uint64_t delta = 1; delta <= 5; ++delta) {
                    auto v = lrc_bound_1(m, k, rho, delta);
                    CHECK(v == std::int64_t(m - k + 1) - std::int64_t((cdiv(k, rho) - 1) * (delta - 1)));
                    if (k <= rho) CHECK(v == std::int64_t(m - k + 1));
                }
    CHECK_THROWS(lrc_bound_1(5, 0, 1, 2));
    CHECK_THROWS(lrc_bound_1(5, 1, 0, 2));
}

TEST_CASE("Griesmer-type locality bound") {
    CHECK(lrc_bound_2(12, 2, 4, 1, 5) == 8);
    for (std::uint64_t q : {2u, 3u, 5u})
        for (std::uint64_t k = 1; k < 8; ++k)
            for (std::uint64_t delta = 1; delta < 6; ++delta) {
                CHECK(lrc_bound_2(30, k, delta, k, q) ==
                      std::int64_t(30 - griesmer(k, delta, q) + griesmer(1, delta, q)));
                for (std::uint64_t kappa = 1; kappa <= 4; ++kappa) {
                    std::uint64_t t = cdiv(k, kappa);
                    CHECK(lrc_bound_2(30, k, delta, kappa, q) ==
                          std::int64_t(30 - t * griesmer(kappa, delta, q) + griesmer(t * kappa - k + 1, delta, q)));
                }
            }
    CHECK_THROWS(lrc_bound_2(5, 1, 2, 0, 2));
}

TEST_CASE("alphabet-dependent dimension bound") {
    auto b = lrc_bound_3(12, 8, 4, 1, 5);
    CHECK(b.value == 2);
    CHECK(b.approximate);
    CHECK(lrc_bound_3(5, 9, 2, 2, 3).value == 0);
    for (std::uint64_t q : {2u, 3u, 4u})
        for (std::uint64_t m = 4; m <= 16; m += 3)
            for (std::uint64_t d = 1; d <= 6; ++d)
                for (std::uint64_t delta = 1; delta <= 4; ++delta)
                    for (std::uint64_t kappa = 1; kappa <= 3; ++kappa)
                        CHECK(lrc_bound_3(m, d, delta, kappa, q).value == direct_bound_3(m, d, delta, kappa, q));
    CHECK(kopt_upper(7, 3, 2) == 4);
    CHECK(kopt_upper(2, 3, 2) == 0);
    CHECK(kopt_upper(-4, 3, 2) == 0);
}

TEST_CASE("optimal local dimension") {
    CHECK(kappa_for(5, 4, 4).value == 1);
    CHECK(kappa_for(5, 4, 4).exact);
    for (std::uint32_t q : {2u, 3u, 7u})
        for (std::uint32_t n = 1; n < 7; ++n) {
            CHECK(kappa_for(q, n, 1).value == n);
            CHECK(kappa_for(q, n, n).value == 1);
            CHECK(kappa_for(q, n, n + 1).value == 0);
        }
    CHECK(kappa_for(4, 3, 2).value == 2);
    CHECK(kappa_for(2, 7, 3).value == 4);
    CHECK(kappa_for(2, 7, 3).exact);
    CHECK(kappa_for(2, 8, 4).value == 4);
    struct Case { std::uint32_t q, nmax; };
    for (auto [q, nmax] : {Case{2, 7}, Case{3, 5}, Case{4, 4}})
        for (std::uint32_t n = 2; n <= nmax; ++n)
            for (std::uint64_t delta = 2; delta < n; ++delta) {
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(delta);
                auto kr = kappa_for(q, n, delta);
                auto truth = brute_kappa(q, n, delta);
                if (kr.exact) CHECK(kr.value == truth);
                else CHECK(kr.value >= truth);
            }
    CHECK_THROWS(kappa_for(2, 0, 1));
}

TEST_CASE("locality of the third LRC construction") {
    const auto& F = make_field(5);
    auto r = build_lrc_c3(F, 4, 3, F.from_int(-1));
    auto p = qc_locality(r.code);
    CHECK(p.rho == 1);
    CHECK(p.delta.value == 4);
    CHECK(p.factors.size() == 1);
    CHECK(p.kappa.value == 1);
    CHECK(lrc_bound_1(12, 2, p.rho, p.delta.value) == 8);
    CHECK(lrc_bound_2(12, 2, p.delta.value, p.kappa.value, 5) == 8);
    CHECK(lrc_bound_3(12, 8, 4, 1, 5).value >= 2);
    auto j = p.to_json();
    CHECK(j["rho"] == 1);
    CHECK(j["delta"] == 4);
}

TEST_CASE("degenerate localities") {
    const auto& F = make_field(3);
    QcCode zero(F, 4, 2, {{Poly(F), Poly(F)}});
    auto pz = qc_locality(zero);
    CHECK(pz.delta.is_inf());
    CHECK(pz.rho == 1);
    CHECK(pz.to_json()["delta"] == "inf");
    QcCode full(F, 4, 2, {{Poly::constant(F, 1), Poly(F)}, {Poly(F), Poly::constant(F, 1)}});
    auto pf = qc_locality(full);
    CHECK(pf.delta.value == 1);
    CHECK(pf.rho == 4);
    CHECK(pf.local.dim() == 4);
}

TEST_CASE("LRC constructions meet both bounds with equality") {
    auto c1 = build_lrc_c1(make_field(2, 2), 3, 2, 1);
    CHECK(min_distance_exhaustive(c1.code.scalar()).value == 3);
    auto p = qc_locality(c1.code);
    CHECK(p.rho == 2);
    CHECK(p.delta.value == 2);
    check_equality(c1.code, 3);
    struct Case { std::uint32_t q, n, delta, a; };
    for (auto [q, n, delta, a] : {Case{5, 4, 2, 1}, Case{5, 4, 3, 1}, Case{5, 4, 3, 3}, Case{7, 3, 2, 2}, Case{7, 6, 5, 5}}) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(delta);
        CAPTURE(a);
        auto r = build_lrc_c1(make_field_q(q), n, delta, a);
        CHECK(qc_locality(r.code).delta.value == delta);
        check_equality(r.code, r.distance);
    }
    auto c2 = build_lrc_c2(make_field(2, 2), 5, 3, 1);
    CHECK(qc_locality(c2.code).delta.value == 3);
    check_equality(c2.code, c2.distance);
    for (std::uint32_t q : {4u, 5u, 7u})
        for (std::size_t ell = 2; ell <= 4; ++ell) {
            auto r = build_lrc_c3(make_field_q(q), q - 1, ell, 1);
            check_equality(r.code, 2 * (q - 1));
        }
}

TEST_CASE("locality bounds are sound on random quasi-cyclic codes") {
    std::mt19937_64 rng(77);
    struct Case { std::uint32_t q, n; std::size_t ell; };
    int checked = 0;
    for (auto [q, n, ell] : {Case{2, 3, 3}, Case{2, 5, 2}, Case{2, 7, 2}, Case{3, 4, 3}, Case{3, 2, 4}, Case{4, 3, 3}, Case{5, 4, 2}})
        for (int t = 0; t < 25; ++t) {
            const auto& F = make_field_q(q);
            auto c = random_qc(F, n, ell, 1 + t % ell, rng);
            if (c.dim() == 0 || c.dim() == c.length()) continue;
            auto p = qc_locality(c);
            auto d = min_distance_exhaustive(c.scalar());
            CHECK(lrc_bound_1(c.length(), c.dim(), p.rho, p.delta.value) >= std::int64_t(d.value));
            if (p.kappa.exact)
                CHECK(lrc_bound_2(c.length(), c.dim(), p.delta.value, p.kappa.value, q) >= std::int64_t(d.value));
            CHECK(lrc_bound_3(c.length(), d.value, p.delta.value, std::max<std::uint64_t>(1, p.kappa.value), q).value >= c.dim());
            ++checked;
        }
    CHECK(checked > 100);
}
