#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcspec/gf.hpp"

namespace qcspec {

// Dense univariate polynomial, constant term first, no trailing zeros.
class Poly {
public:
    explicit Poly(const FieldCtx& f) : ctx_(&f) {}
    Poly(const FieldCtx& f, std::vector<Elem> coeffs);

    static Poly constant(const FieldCtx& f, Elem c);
    static Poly monomial(const FieldCtx& f, std::size_t k, Elem c = 1);
    static Poly xn_minus_1(const FieldCtx& f, std::size_t n);
    // Coefficients given as signed integers reduced into the prime field.
    static Poly from_ints(const FieldCtx& f, const std::vector<long long>& c);

    const FieldCtx& field() const { return *ctx_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int deg() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Poly monic() const;
    Elem eval(Elem x) const;
    // Evaluate at a point of an extension field via an embedding of the coefficient field.
    Elem eval(const Embedding& e, Elem x) const;
    Poly map(const Embedding& e) const;
    Poly scaled(Elem s) const;
    Poly shifted(std::size_t k) const;  // multiply by x^k
    Poly derivative() const;
    Poly mod_xn_minus_1(std::size_t n) const;

    std::string str() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    const FieldCtx* ctx_;
    std::vector<Elem> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly g, u, v;  // u*a + v*b = g, g monic (or zero)
};
ExtGcd extended_gcd(const Poly& a, const Poly& b);

Poly modular_inverse(const Poly& a, const Poly& mod);

// Unique polynomial of degree < points.size() through all (points[i], values[i]).
Poly interpolate(const FieldCtx& f, const std::vector<Elem>& points, const std::vector<Elem>& values);

// Inverse of a field embedding applied coefficient-wise; throws if a
// coefficient falls outside the subfield.
Poly pull_back(const Poly& p, const Embedding& e);

// Product of (x - r) over an arbitrary list of roots.
Poly from_roots(const FieldCtx& f, const std::vector<Elem>& roots);

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint64_t q, std::uint32_t n);

struct CosetFactorization {
    std::uint32_t n = 0;
    std::uint32_t r = 0;             // ord_n(q)
    const FieldCtx* base = nullptr;  // F_q
    const FieldCtx* ext = nullptr;   // F_{q^r}
    Elem alpha = 0;                  // primitive n-th root of unity in ext
    std::vector<std::vector<std::uint32_t>> cosets;
    std::vector<Poly> factors;
    std::vector<std::uint32_t> v;    // smallest exponent of each coset

    // Index of the factor that vanishes at alpha^e.
    std::size_t factor_of(std::uint32_t e) const;
    Embedding base_to_ext() const { return Embedding(*base, *ext); }
};

CosetFactorization factor_xn_minus_1(const FieldCtx& f, std::uint32_t n);

class PolyMatrix {
public:
    PolyMatrix(const FieldCtx& f, std::size_t rows, std::size_t cols);

    const FieldCtx& field() const { return *ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const { return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    const FieldCtx* ctx_;
    std::size_t rows_, cols_;
    std::vector<Poly> e_;
};

using PolyVec = std::vector<Poly>;

// Upper-triangular generator matrix with monic diagonal entries dividing
// x^n - 1 and off-diagonal entries reduced modulo the diagonal below them.
PolyMatrix reduce_to_lally_form(const FieldCtx& f, const std::vector<PolyVec>& gens, std::uint32_t n,
                                std::size_t ell);

Poly polymatrix_det(const PolyMatrix& m);

}  // namespace qcspec
