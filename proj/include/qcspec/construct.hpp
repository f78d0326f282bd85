#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcspec/bounds.hpp"
#include "qcspec/qc.hpp"

namespace qcspec {

// Design matrix data: groups are lists of factor indices into the
// factorization of x^n - 1; group i (1-based) uses gamma_u^i.
struct DesignSpec {
    std::uint32_t n = 0;
    std::size_t ell = 0;
    std::vector<std::vector<std::size_t>> groups;
    std::vector<Elem> gammas;  // ell - 1 distinct elements outside {0, 1}
};

struct DesignResult {
    QcCode code;
    PolyMatrix gprime;             // as assembled, before Lally reduction
    std::vector<Poly> h;           // h_1 .. h_{ell-1}
    Poly frak_g;                   // product of all grouped factors
    std::vector<ExpSet> group_roots;
    std::vector<Elem> gammas;
};

// h_u = sum a y with y = frak_g / factor and a(beta) y(beta) = -gamma_u^i at
// every root of the factor. A linear factor x - beta takes a = c x; any other
// factor takes the reduced inverse of y modulo the factor.
DesignResult build_design(const FieldCtx& f, const DesignSpec& spec);

// min over t of t * d_{L_t} for picks taken from distinct groups, in the
// given order. The eigencodes of the first t - 1 groups must meet in a code
// of distance t, which holds for the natural group order; other orders are
// checked and rejected with invalid_argument when the condition fails.
ExtDistance design_bound(const DesignResult& d, const std::vector<DefiningSetBound>& picks);

// Group index (0-based) whose roots contain L; invalid_argument if none.
std::size_t group_of(const DesignResult& d, const ExpSet& L);

// For each group in order, its best BCH pick.
std::vector<DefiningSetBound> group_bch_picks(const DesignResult& d);

// Rows of the table of designed quasi-cyclic codes of length ell(q-1).
struct DesignTableRow {
    int no;
    std::size_t ell;
    std::uint32_t q_min;
    std::vector<std::size_t> sizes;  // |L_1|, ..., |L_ell|
    std::uint64_t d;                 // designed distance
    std::uint64_t defect;            // stated Singleton defect bound
};
const std::vector<DesignTableRow>& design_table();

// Smallest |L_i| >= 1 with i * (|L_i| + 1) >= delta.
std::vector<std::size_t> design_sizes(std::uint64_t delta, std::size_t ell);

// n = q - 1; group i takes the next sizes[i] exponents in ascending order.
DesignResult build_design_blocks(const FieldCtx& f, const std::vector<std::size_t>& sizes);

// Narrow-sense BCH dimension: length minus |q-closure of {1, ..., delta-1}|.
std::uint64_t bch_dimension(std::uint64_t q, std::uint32_t length, std::uint32_t delta);

// Extended GRS code of length points.size() + 1; row t is (v_j gamma_j^t)
// followed by 1 in the last row only.
LinearCode extended_grs(const FieldCtx& f, std::size_t k, const std::vector<Elem>& points,
                        const std::vector<Elem>& multipliers);
// Points are all of GF(q) in index order, multipliers 1; the code is over f,
// which may be an extension of GF(q).
LinearCode extended_grs(const FieldCtx& f, std::uint32_t q, std::size_t k);

struct LrcConstruction {
    QcCode code;
    std::uint64_t length, dim, distance;  // parameters claimed by the construction
    std::vector<std::size_t> factors;     // factors carrying a nonzero constituent
};

// n | q - 1: constituents at beta^1 .. beta^{n-delta+1}.
LrcConstruction build_lrc_c1(const FieldCtx& f, std::uint32_t n, std::uint32_t delta, std::uint32_t a);
// n | q + 1: constituents at x - 1 and at the first (n - delta) / 2 quadratic factors.
LrcConstruction build_lrc_c2(const FieldCtx& f, std::uint32_t n, std::uint32_t delta, std::uint32_t a);

struct LrcC3Result {
    QcCode code;
    Poly a;                 // interpolant of the prescribed values at the n roots
    Poly h;                 // a(x) times the sum of (x^n - 1)/(x - beta^i)
    Poly g;                 // (x^n - 1)/(x - 1)
    PolyMatrix gprime;
    std::vector<DefiningSetBound> picks;  // (Delta, inf) and (nonzero exponents, n)
};
LrcC3Result build_lrc_c3(const FieldCtx& f, std::uint32_t n, std::size_t ell, Elem gamma);

// Primitive n-th root of unity inside GF(q); requires n | q - 1.
Elem base_root(const FieldCtx& f, std::uint32_t n);

}  // namespace qcspec
