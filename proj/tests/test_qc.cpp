#include "doctest.h"

#include <random>

#include "qcspec/qc.hpp"

using namespace qcspec;

namespace {

PolyVec pv(const FieldCtx& f, const std::vector<std::vector<long long>>& comps) {
    PolyVec v;
    for (const auto& c : comps) v.push_back(Poly::from_ints(f, c));
    return v;
}

// Oracle: rows x^s * g for every generator g and shift s, built with polynomial arithmetic.
Mat expand(const FieldCtx& f, std::uint32_t n, const std::vector<PolyVec>& gens) {
    Mat rows;
    for (const auto& g : gens)
        for (std::uint32_t s = 0; s < n; ++s) {
            Vec v(g.size() * n, 0);
            for (std::size_t j = 0; j < g.size(); ++j) {
                Poly p = g[j].shifted(s).mod_xn_minus_1(n);
                for (std::uint32_t i = 0; i < n; ++i) v[i * g.size() + j] = p[i];
            }
            rows.push_back(std::move(v));
        }
    return rows;
}

// Reorder a flat codeword so that each component occupies a block of n coordinates.
Vec component_major(const Vec& v, std::uint32_t n, std::size_t ell) {
    Vec out(v.size());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < ell; ++j) out[j * n + i] = v[i * ell + j];
    return out;
}

LinearCode component_major(const LinearCode& c, std::uint32_t n, std::size_t ell) {
    Mat rows;
    for (const auto& r : c.generator()) rows.push_back(component_major(r, n, ell));
    return LinearCode(c.field(), c.length(), rows);
}

Mat bits(const std::vector<std::string>& rows) {
    Mat m;
    for (const auto& s : rows) {
        Vec v;
        for (char ch : s) v.push_back(Elem(ch - '0'));
        m.push_back(v);
    }
    return m;
}

QcCode random_qc(const FieldCtx& f, std::uint32_t n, std::size_t ell, std::size_t gens, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> pick(0, f.q() - 1);
    std::vector<PolyVec> g;
    for (std::size_t a = 0; a < gens; ++a) {
        PolyVec row;
        for (std::size_t j = 0; j < ell; ++j) {
            std::vector<Elem> c(n);
            for (auto& x : c) x = pick(rng);
            row.emplace_back(f, c);
        }
        g.push_back(row);
    }
    return QcCode(f, n, ell, g);
}

// Structural identities every quasi-cyclic code must satisfy.
void check_structure(const QcCode& c) {
    const auto& F = c.field();
    const auto& E = c.ext();
    CHECK(LinearCode(F, c.length(), expand(F, c.n(), c.generators())) == c.scalar());
    std::size_t total = 0;
    for (const auto& e : c.eigen()) {
        CHECK(e.basis.size() == e.multiplicity);
        total += e.multiplicity;
        // every eigencode word is orthogonal to the eigenspace
        for (const auto& u : e.eigencode.generator())
            for (const auto& v : e.basis) {
                Elem s = 0;
                for (std::size_t j = 0; j < c.ell(); ++j) s = E.add(s, E.mul(c.to_ext()(u[j]), v[j]));
                CHECK(s == 0);
            }
    }
    CHECK(total == c.length() - c.dim());
    Mat h = spectral_parity_check(c);
    CHECK(h.size() == total);
    for (const auto& row : h)
        for (const auto& g : c.scalar().generator()) {
            Elem s = 0;
            for (std::size_t t = 0; t < c.length(); ++t) s = E.add(s, E.mul(row[t], c.to_ext()(g[t])));
            CHECK(s == 0);
        }
    // the parity check has full rank, so it cuts out exactly the code
    CHECK(rank(E, h) == total);
    std::size_t from_constituents = 0;
    for (const auto& con : c.constituents()) from_constituents += con.check.deg() * con.code.dim();
    CHECK(from_constituents == c.dim());
    CHECK(concat_reconstruct(c) == c.scalar());
}

}  // namespace

TEST_CASE("the binary [9,2] code") {
    const auto& F = make_field(2);
    QcCode c(F, 3, 3, {pv(F, {{0, 1, 1}, {1, 1}, {1, 0, 1}})});
    CHECK(c.dim() == 2);
    CHECK(c.scalar() == LinearCode(F, 9, bits({"101011110", "011110101"})));
    CHECK(c.eigenvalues() == ExpSet{0, 1, 2});
    CHECK(spectral_parity_check(c).size() == 7);
    CHECK(c.lally().at(0, 0) == Poly::from_ints(F, {1, 1}));
    check_structure(c);
}

TEST_CASE("the binary [12,3] code") {
    const auto& F = make_field(2);
    QcCode c(F, 3, 4, {pv(F, {{1, 0, 1}, {1, 1, 1}, {1, 0, 1}, {1, 1, 1}})});
    CHECK(c.dim() == 3);
    // the displayed matrix lists each component as a block of n coordinates
    auto shown = LinearCode(F, 12, bits({"101000101000", "011000011000", "000111000111"}));
    CHECK(component_major(c.scalar(), 3, 4) == shown);
    CHECK(c.eigenvalues() == ExpSet{0, 1, 2});
    check_structure(c);
}

TEST_CASE("the ternary [8,6] code") {
    const auto& F = make_field(3);
    QcCode c(F, 4, 2, {pv(F, {{2, 1, 2, 1}, {1, 2, 1}}), pv(F, {{0, 1, 2}, {1, 1, 1, 1}})});
    CHECK(c.dim() == 6);
    CHECK(c.lally().at(0, 0) == Poly::from_ints(F, {2, 1}));
    CHECK(c.lally().at(1, 1) == Poly::from_ints(F, {1, 1}));
    CHECK(c.lally().at(0, 1).is_zero());
    auto shown = LinearCode(F, 8, bits({"10020000", "01020000", "00120000", "00001001", "00000102", "00000011"}));
    CHECK(component_major(c.scalar(), 4, 2) == shown);
    // eigenvalues 1 and -1, i.e. alpha^0 and alpha^2 for alpha of order 4
    CHECK(c.eigenvalues() == ExpSet{0, 2});
    check_structure(c);
}

TEST_CASE("constituents of the ternary [10,5] design code") {
    const auto& F = make_field(3);
    QcCode c(F, 5, 2, {pv(F, {{1}, {0, 1, 1, 1, 1}}), pv(F, {{0}, {-1, 0, 0, 0, 0, 1}})});
    CHECK(c.dim() == 5);
    const auto& cons = c.constituents();
    REQUIRE(cons.size() == 2);
    CHECK(cons[0].field->q() == 3);
    CHECK(cons[0].code.generator() == Mat{{1, 1}});
    CHECK(cons[1].field->q() == 81);
    CHECK(cons[1].code.generator() == Mat{{1, cons[1].field->neg(1)}});
    check_structure(c);
}

TEST_CASE("degenerate codes") {
    const auto& F = make_field(2);
    QcCode zero(F, 5, 3, {});
    CHECK(zero.dim() == 0);
    CHECK(zero.eigenvalues() == full_set(5));
    CHECK(concat_reconstruct(zero).dim() == 0);
    // constant diagonal: no eigenvalues, every word
    QcCode full(F, 5, 2, {pv(F, {{1}, {0}}), pv(F, {{0}, {1}})});
    CHECK(full.dim() == 10);
    CHECK(full.eigenvalues().empty());
    CHECK(spectral_parity_check(full).empty());
    for (const auto& con : full.constituents()) CHECK(con.code.dim() == 2);
    CHECK_THROWS_AS(QcCode(F, 4, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(QcCode(F, 5, 2, {pv(F, {{1}})}), std::invalid_argument);
}

TEST_CASE("common eigenspaces") {
    const auto& F = make_field(2);
    QcCode c(F, 3, 3, {pv(F, {{0, 1, 1}, {1, 1}, {1, 0, 1}})});
    auto all = common_eigenspace(c, {0, 1, 2});
    auto one = common_eigenspace(c, {0});
    CHECK(all.basis.size() <= one.basis.size());
    CHECK(one.eigencode.contains(LinearCode(F, 3, {})));
    // fewer constraints give a smaller eigencode
    CHECK(all.eigencode.contains(one.eigencode));
    auto none = common_eigenspace(c, {});
    CHECK(none.eigencode.dim() == 0);
    QcCode d(F, 3, 2, {pv(F, {{1, 1}, {1, 1}}), pv(F, {{0}, {1}})});
    CHECK(d.eigenvalues() == ExpSet{0});
    CHECK_THROWS_AS(common_eigenspace(d, {1}), std::invalid_argument);
}

TEST_CASE("structure of random codes") {
    std::mt19937_64 rng(2024);
    struct Case {
        std::uint32_t q, n;
        std::size_t ell, gens;
    };
    std::vector<Case> cases = {{2, 3, 2, 1}, {2, 3, 3, 2}, {2, 5, 2, 1}, {2, 7, 3, 1}, {3, 4, 2, 2}, {3, 5, 3, 1},
                               {4, 3, 2, 1}, {4, 5, 2, 2}, {5, 4, 3, 2}, {2, 9, 2, 1}, {3, 8, 2, 1}, {7, 3, 2, 1}};
    int count = 0;
    for (int round = 0; round < 17; ++round)
        for (const auto& cs : cases) {
            const auto& F = make_field_q(cs.q);
            QcCode c = random_qc(F, cs.n, cs.ell, cs.gens, rng);
            check_structure(c);
            ++count;
        }
    CHECK(count >= 200);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(3);
    for (std::uint32_t q : {2u, 4u, 9u}) {
        const auto& F = make_field_q(q);
        QcCode c = random_qc(F, 5, 3, 2, rng);
        auto j = qc_to_json(c);
        QcCode back = qc_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back.lally() == c.lally());
        CHECK(back.scalar() == c.scalar());
        CHECK(&back.field() == &c.field());
    }
    auto bad = nlohmann::json::parse(R"({"q": 3, "n": 4, "ell": 1, "generators": [[[5]]]})");
    CHECK_THROWS(qc_from_json(bad));
    auto pm = nlohmann::json::parse(R"({"q": [2, 2], "n": 3, "ell": 1, "generators": [[[1, 3]]]})");
    CHECK(qc_from_json(pm).field().q() == 4);
}
