#include "doctest.h"

#include <algorithm>
#include <random>

#include "qcspec/code.hpp"

using namespace qcspec;

namespace {

Mat random_matrix(const FieldCtx& f, std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<Elem> pick(0, f.q() - 1);
    Mat m(r, Vec(c));
    for (auto& row : m)
        for (auto& x : row) x = pick(rng);
    return m;
}

// Oracle: enumerate messages in lexicographic order and encode each one.
std::uint64_t brute_distance(const LinearCode& c) {
    const auto& F = c.field();
    std::size_t k = c.dim();
    if (k == 0) return ExtDistance::kInf;
    std::vector<Elem> msg(k, 0);
    std::uint64_t best = ExtDistance::kInf;
    while (true) {
        std::size_t i = 0;
        while (i < k && msg[i] == F.q() - 1) msg[i++] = 0;
        if (i == k) break;
        ++msg[i];
        Vec cw(c.length(), 0);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < c.length(); ++j)
                cw[j] = F.add(cw[j], F.mul(msg[r], c.generator()[r][j]));
        best = std::min<std::uint64_t>(best, weight(cw));
    }
    return best;
}

std::vector<Vec> all_codewords(const LinearCode& c) {
    const auto& F = c.field();
    std::vector<Vec> out;
    std::vector<Elem> msg(c.dim(), 0);
    out.push_back(Vec(c.length(), 0));
    while (true) {
        std::size_t i = 0;
        while (i < msg.size() && msg[i] == F.q() - 1) msg[i++] = 0;
        if (i == msg.size()) break;
        ++msg[i];
        out.push_back(c.encode(msg));
    }
    return out;
}

}  // namespace

TEST_CASE("ExtDistance arithmetic") {
    auto inf = ExtDistance::inf();
    auto three = ExtDistance::of(3);
    CHECK((inf * three).is_inf());
    CHECK((three * inf).is_inf());
    CHECK((three * ExtDistance::of(2)).value == 6);
    CHECK(dmin(inf, three) == three);
    CHECK(dmin(three, inf) == three);
    CHECK(dmax(inf, three).is_inf());
    CHECK(three < inf);
}

TEST_CASE("the [9,2] scalar code has distance 6") {
    const auto& F = make_field(2);
    LinearCode c(F, 9, {{1, 0, 1, 0, 1, 1, 1, 1, 0}, {0, 1, 1, 1, 1, 0, 1, 0, 1}});
    CHECK(c.dim() == 2);
    CHECK(min_distance_exhaustive(c).value == 6);
}

TEST_CASE("trivial and repetition codes") {
    CHECK(min_distance_exhaustive(LinearCode::zero(make_field(3), 5)).is_inf());
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
        const auto& F = make_field_q(q);
        for (std::size_t m = 1; m <= 7; ++m) {
            LinearCode rep(F, m, {Vec(m, 1)});
            CHECK(min_distance_exhaustive(rep).value == m);
        }
        CHECK(min_distance_exhaustive(LinearCode::full(F, 4)).value == 1);
    }
}

TEST_CASE("budget is enforced") {
    const auto& F = make_field(3);
    CHECK_THROWS_AS(min_distance_exhaustive(LinearCode::full(F, 10), 1000), BudgetExceeded);
}

TEST_CASE("exhaustive distance matches plain enumeration") {
    std::mt19937_64 rng(5);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        const auto& F = make_field_q(q);
        for (int t = 0; t < 30; ++t) {
            std::size_t m = 3 + t % 7;
            std::size_t k = 1 + t % std::min<std::size_t>(m, q <= 3 ? 6 : 3);
            LinearCode c(F, m, random_matrix(F, rng, k, m));
            if (c.dim() == 0) continue;
            CHECK(min_distance_exhaustive(c).value == brute_distance(c));
        }
    }
    // binary lengths beyond one machine word use the generic walk
    const auto& F2 = make_field(2);
    LinearCode wide(F2, 70, random_matrix(F2, rng, 6, 70));
    CHECK(min_distance_exhaustive(wide).value == brute_distance(wide));
}

TEST_CASE("distance is invariant under row operations and column permutation") {
    std::mt19937_64 rng(9);
    const auto& F = make_field(3);
    for (int t = 0; t < 20; ++t) {
        Mat g = random_matrix(F, rng, 3, 7);
        LinearCode c(F, 7, g);
        auto d = min_distance_exhaustive(c);
        Mat g2 = g;
        for (auto& x : g2[0]) x = F.mul(x, 2);
        for (std::size_t j = 0; j < 7; ++j) g2[1][j] = F.add(g2[1][j], g2[2][j]);
        CHECK(min_distance_exhaustive(LinearCode(F, 7, g2)) == d);
        std::vector<std::size_t> perm = {6, 2, 4, 0, 1, 5, 3};
        CHECK(min_distance_exhaustive(restrict(c, perm)) == d);
    }
}

TEST_CASE("heuristic never undercuts the exhaustive distance") {
    std::mt19937_64 rng(21);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const auto& F = make_field_q(q);
        for (int t = 0; t < 25; ++t) {
            std::size_t m = 6 + t % 8;
            std::size_t k = 2 + t % 4;
            LinearCode c(F, m, random_matrix(F, rng, k, m));
            if (message_count(q, c.dim()) > 100000 || c.dim() == 0) continue;
            auto ex = min_distance_exhaustive(c);
            auto h = min_distance_heuristic(c, 300, 1000 + t);
            CHECK(h.flag == DistFlag::upper);
            CHECK(h >= ex);
            CHECK(h == ex);
        }
    }
}

TEST_CASE("heuristic is deterministic and finds weight-one rows") {
    const auto& F = make_field(5);
    LinearCode c(F, 6, {{0, 0, 3, 0, 0, 0}, {1, 1, 1, 1, 1, 1}});
    auto r = min_distance_heuristic_run(c, 50, 7);
    CHECK(r.distance.value == 1);
    CHECK(r.iterations == 1);
    CHECK(c.contains(r.witness));
    std::mt19937_64 rng(3);
    LinearCode d(F, 12, random_matrix(F, rng, 5, 12));
    CHECK(min_distance_heuristic(d, 40, 99).value == min_distance_heuristic(d, 40, 99).value);
}

TEST_CASE("intersections") {
    const auto& F = make_field(3);
    LinearCode c1(F, 2, {{0, 1}}), c2(F, 2, {{1, 0}});
    CHECK(intersect(c1, c2).dim() == 0);
    std::mt19937_64 rng(4);
    LinearCode a(F, 6, random_matrix(F, rng, 3, 6));
    CHECK(intersect(a, a) == a);
    CHECK(intersect(LinearCode::full(F, 6), a) == a);
    CHECK_THROWS(intersect(a, LinearCode::full(F, 5)));
}

TEST_CASE("intersection agrees with brute-force subspace enumeration") {
    std::mt19937_64 rng(8);
    for (std::uint32_t q : {2u, 3u}) {
        const auto& F = make_field(q);
        for (int t = 0; t < 60; ++t) {
            std::size_t m = 2 + t % 5;
            LinearCode a(F, m, random_matrix(F, rng, 1 + t % m, m));
            LinearCode b(F, m, random_matrix(F, rng, 1 + (t / 2) % m, m));
            LinearCode c = intersect(a, b);
            CHECK(a.contains(c));
            CHECK(b.contains(c));
            std::size_t common = 0;
            for (const auto& v : all_codewords(a))
                if (b.contains(v)) ++common;
            CHECK(common == message_count(q, c.dim()));
            CHECK(c.dim() + m >= a.dim() + b.dim());
            CHECK(c.dim() <= std::min(a.dim(), b.dim()));
        }
    }
}

TEST_CASE("dual and null space") {
    std::mt19937_64 rng(12);
    const auto& F = make_field(2, 2);
    for (int t = 0; t < 20; ++t) {
        LinearCode c(F, 7, random_matrix(F, rng, 3, 7));
        LinearCode d = c.dual();
        CHECK(c.dim() + d.dim() == 7);
        for (const auto& u : c.generator())
            for (const auto& v : d.generator()) {
                Elem s = 0;
                for (std::size_t i = 0; i < 7; ++i) s = F.add(s, F.mul(u[i], v[i]));
                CHECK(s == 0);
            }
        CHECK(d.dual() == c);
    }
}

TEST_CASE("griesmer function") {
    CHECK(griesmer(1, 4, 5) == 4);
    CHECK(griesmer(2, 8, 5) == 10);
    for (std::uint64_t k = 1; k < 6; ++k) CHECK(griesmer(k, 1, 3) == k);
    CHECK(griesmer(0, 5, 2) == 0);
    for (std::uint64_t q : {2, 3, 5})
        for (std::uint64_t k = 1; k < 7; ++k)
            for (std::uint64_t d = 1; d < 20; ++d) {
                std::uint64_t direct = 0, pw = 1;
                for (std::uint64_t i = 0; i < k; ++i, pw *= q) direct += (d + pw - 1) / pw;
                CHECK(griesmer(k, d, q) == direct);
                CHECK(griesmer(k, d, q) <= k * d);
                CHECK(griesmer(k + 1, d, q) >= griesmer(k, d, q));
                CHECK(griesmer(k, d + 1, q) >= griesmer(k, d, q));
            }
}

TEST_CASE("restriction") {
    const auto& F = make_field(5);
    std::mt19937_64 rng(1);
    LinearCode c(F, 6, random_matrix(F, rng, 3, 6));
    CHECK(restrict(c, {0, 1, 2, 3, 4, 5}) == c);
    CHECK_THROWS(restrict(c, {6}));
    LinearCode r = restrict(c, {1, 3});
    CHECK(r.length() == 2);
    for (const auto& row : c.generator()) CHECK(r.contains(Vec{row[1], row[3]}));
}
