#include "doctest.h"

#include <random>
#include <vector>

#include "qcspec/gf.hpp"

using namespace qcspec;

namespace {

// Schoolbook product of coefficient vectors reduced by a monic modulus.
std::vector<std::uint32_t> naive_mul(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b,
                                     const std::vector<std::uint32_t>& f, std::uint32_t p) {
    std::size_t m = f.size() - 1;
    std::vector<long long> prod(2 * m + 1, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) prod[i + j] += (long long)a[i] * b[j];
    for (std::size_t d = prod.size() - 1; d >= m; --d) {
        long long c = prod[d] % p;
        for (std::size_t i = 0; i <= m; ++i) prod[d - m + i] -= c * f[i];
    }
    std::vector<std::uint32_t> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = std::uint32_t(((prod[i] % p) + p) % p);
    return r;
}

std::uint64_t naive_order_of_x(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    std::size_t m = f.size() - 1;
    std::vector<std::uint32_t> x(m, 0), cur(m, 0), one(m, 0);
    x[1] = 1;
    one[0] = 1;
    cur = x;
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < m; ++i) q *= p;
    for (std::uint64_t k = 1; k <= q; ++k) {
        if (cur == one) return k;
        cur = naive_mul(cur, x, f, p);
    }
    return 0;
}

void check_axioms(const FieldCtx& F, int trials) {
    std::mt19937_64 rng(F.q() * 7919ull + F.m());
    std::uniform_int_distribution<Elem> pick(0, F.q() - 1);
    for (int t = 0; t < trials; ++t) {
        Elem a = pick(rng), b = pick(rng), c = pick(rng);
        REQUIRE(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
        REQUIRE(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
        REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        REQUIRE(F.add(a, b) == F.add(b, a));
        REQUIRE(F.mul(a, b) == F.mul(b, a));
        REQUIRE(F.add(a, F.neg(a)) == 0);
        REQUIRE(F.sub(F.add(a, b), b) == a);
        if (a) REQUIRE(F.mul(a, F.inv(a)) == 1);
        if (F.m() > 1) REQUIRE(F.coeffs(F.mul(a, b)) == naive_mul(F.coeffs(a), F.coeffs(b), F.modulus(), F.p()));
        else REQUIRE(F.mul(a, b) == (std::uint64_t(a) * b) % F.p());
    }
}

}  // namespace

TEST_CASE("prime field GF(2) has generator 1") {
    const auto& F = make_field(2, 1);
    CHECK(F.q() == 2);
    CHECK(F.generator() == 1);
    CHECK(F.modulus().empty());
}

TEST_CASE("GF(4) modulus is x^2+x+1 and x*x = x+1") {
    const auto& F = make_field(2, 2);
    CHECK(F.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    Elem x = F.generator();
    CHECK(x == 2);
    CHECK(F.mul(x, x) == F.from_coeffs({1, 1}));
}

TEST_CASE("modulus is the first primitive polynomial in constant-term-first order") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}, {11, 2}}) {
        const auto& F = make_field(p, m);
        std::uint64_t q = F.q();
        std::vector<std::uint32_t> expect;
        for (std::uint64_t t = 0; t < q && expect.empty(); ++t) {
            std::vector<std::uint32_t> f(m + 1, 0);
            std::uint64_t v = t;
            for (std::uint32_t i = m; i-- > 0;) {
                f[i] = v % p;
                v /= p;
            }
            f[m] = 1;
            if (f[0] && naive_order_of_x(f, p) == q - 1) expect = f;
        }
        CHECK(F.modulus() == expect);
        CHECK(&make_field(p, m) == &F);
    }
}

TEST_CASE("prime field generator is the smallest primitive root") {
    CHECK(make_field(5).generator() == 2);
    CHECK(make_field(7).generator() == 3);
    CHECK(make_field(11).generator() == 2);
    CHECK(make_field(13).generator() == 2);
    CHECK(make_field(17).generator() == 3);
}

TEST_CASE("make_field rejects bad input") {
    CHECK_THROWS_AS(make_field(4, 1), FieldError);
    CHECK_THROWS_AS(make_field(2, 32), FieldError);
    CHECK_THROWS_AS(make_field(3, 20), FieldError);
    CHECK_THROWS_AS(make_field_q(6), FieldError);
    CHECK(make_field_q(9).m() == 2);
}

TEST_CASE("field axioms hold on random triples") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {13, 1}, {2, 2}, {3, 2}, {2, 4}, {3, 4}, {5, 2}, {2, 20}, {3, 13}})
        check_axioms(make_field(p, m), 10000);
}

TEST_CASE("nth_root_of_unity has exact order") {
    const auto& F5 = make_field(5);
    Elem b = nth_root_of_unity(F5, 4);
    CHECK(F5.mul(b, b) == F5.from_int(-1));
    const auto& F81 = make_field(3, 4);
    Elem a = nth_root_of_unity(F81, 5);
    Elem cur = a;
    int ord = 1;
    while (cur != 1) {
        cur = F81.mul(cur, a);
        ++ord;
    }
    CHECK(ord == 5);
    CHECK(nth_root_of_unity(F81, 1) == 1);
    CHECK_THROWS_AS(nth_root_of_unity(F81, 7), FieldError);
    for (std::uint32_t n : {1u, 2u, 4u, 5u, 8u, 10u, 16u, 20u, 40u, 80u}) {
        Elem w = nth_root_of_unity(F81, n);
        CHECK(F81.pow(w, n) == 1);
        for (std::uint32_t k = 1; k < n; ++k) CHECK(F81.pow(w, k) != 1);
    }
}

TEST_CASE("embeddings fix the prime field and preserve order") {
    const auto& F3 = make_field(3);
    const auto& F81 = make_field(3, 4);
    CHECK(embed(F3, F81)(2) == 2);
    CHECK(embed(make_field(2), make_field(2, 2))(1) == 1);
    const auto& F4 = make_field(2, 2);
    const auto& F16 = make_field(2, 4);
    auto e = embed(F4, F16);
    Elem g = e(F4.generator());
    Elem cur = g;
    int ord = 1;
    while (cur != 1) {
        cur = F16.mul(cur, g);
        ++ord;
    }
    CHECK(ord == 3);
    CHECK_THROWS_AS(embed(F4, make_field(2, 3)), FieldError);
    CHECK_THROWS_AS(embed(F3, F16), FieldError);
}

TEST_CASE("embeddings are homomorphisms on random pairs") {
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>>> cases = {
        {{2, 1}, {2, 4}}, {{2, 2}, {2, 4}}, {{2, 2}, {2, 6}}, {{2, 3}, {2, 6}},
        {{3, 1}, {3, 4}}, {{3, 2}, {3, 4}}, {{5, 1}, {5, 2}}, {{2, 4}, {2, 20}}};
    std::mt19937_64 rng(42);
    for (auto& [s, d] : cases) {
        const auto& S = make_field(s.first, s.second);
        const auto& D = make_field(d.first, d.second);
        auto e = embed(S, D);
        std::uniform_int_distribution<Elem> pick(0, S.q() - 1);
        CHECK(e(0) == 0);
        CHECK(e(1) == 1);
        for (int t = 0; t < 1000; ++t) {
            Elem a = pick(rng), b = pick(rng);
            REQUIRE(e(S.add(a, b)) == D.add(e(a), e(b)));
            REQUIRE(e(S.mul(a, b)) == D.mul(e(a), e(b)));
            REQUIRE(e.preimage(e(a)) == a);
        }
    }
}

TEST_CASE("embedding chains agree with the direct embedding") {
    // Prime subfields are fixed pointwise, so chains starting there compose.
    const auto& F2 = make_field(2);
    const auto& F4 = make_field(2, 2);
    const auto& F16 = make_field(2, 4);
    auto ab = embed(F2, F4), bc = embed(F4, F16), ac = embed(F2, F16);
    for (Elem x = 0; x < 2; ++x) CHECK(bc(ab(x)) == ac(x));
    // A chain between extension fields still lands on the same subfield image.
    const auto& F256 = make_field(2, 8);
    auto e1 = embed(F4, F16), e2 = embed(F16, F256), e3 = embed(F4, F256);
    for (Elem x = 0; x < 4; ++x) CHECK(e3.in_image(e2(e1(x))));
}

TEST_CASE("trace values and linearity") {
    const auto& F81 = make_field(3, 4);
    const auto& F3 = make_field(3);
    CHECK(trace(F81, 0, F3) == 0);
    const auto& F4 = make_field(2, 2);
    const auto& F2 = make_field(2);
    Elem g = F4.generator();
    CHECK(trace(F4, g, F2) == F4.add(g, F4.mul(g, g)));
    CHECK(trace(F4, g, F2) == 1);
    // element already in the subfield: trace is e*x with e the index
    auto e = embed(F3, F81);
    CHECK(trace(F81, e(2), F3) == F3.mul(F3.from_int(4), 2));
    const auto& F9 = make_field(3, 2);
    auto e9 = embed(F9, F81);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Elem> pick(0, F81.q() - 1), pick9(0, 8);
    for (int t = 0; t < 1000; ++t) {
        Elem a = pick(rng), b = pick(rng), c = pick9(rng);
        REQUIRE(trace(F81, F81.add(a, b), F9) == F9.add(trace(F81, a, F9), trace(F81, b, F9)));
        REQUIRE(trace(F81, F81.mul(e9(c), a), F9) == F9.mul(c, trace(F81, a, F9)));
    }
}

TEST_CASE("logs and orders on a large field without tables") {
    const auto& F = make_field(2, 20);
    Elem a = F.exp(123457);
    CHECK(F.log(a) == 123457);
    CHECK(F.order(F.generator()) == F.q() - 1);
    CHECK(F.order(nth_root_of_unity(F, 3)) == 3);
}

TEST_CASE("multiplicative order of q mod n") {
    CHECK(multiplicative_order(2, 3) == 2);
    CHECK(multiplicative_order(3, 5) == 4);
    CHECK(multiplicative_order(5, 4) == 1);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK_THROWS_AS(multiplicative_order(2, 4), FieldError);
}
