#include "qcspec/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qcspec {

namespace {

void require_same(const Poly& a, const Poly& b) {
    if (&a.field() != &b.field()) throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Poly::Poly(const FieldCtx& f, std::vector<Elem> coeffs) : ctx_(&f), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldCtx& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const FieldCtx& f, std::size_t k, Elem c) {
    std::vector<Elem> v(k + 1, 0);
    v[k] = c;
    return Poly(f, std::move(v));
}

Poly Poly::xn_minus_1(const FieldCtx& f, std::size_t n) {
    std::vector<Elem> v(n + 1, 0);
    v[n] = 1;
    v[0] = f.neg(1);
    return Poly(f, std::move(v));
}

Poly Poly::from_ints(const FieldCtx& f, const std::vector<long long>& c) {
    std::vector<Elem> v;
    v.reserve(c.size());
    for (auto x : c) v.push_back(f.from_int(x));
    return Poly(f, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(ctx_->inv(lead()));
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_->add(ctx_->mul(acc, x), c_[i]);
    return acc;
}

Elem Poly::eval(const Embedding& e, Elem x) const {
    if (&e.src() != ctx_) throw std::invalid_argument("eval: embedding source does not match coefficient field");
    const FieldCtx& D = e.dst();
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = D.add(D.mul(acc, x), e(c_[i]));
    return acc;
}

Poly Poly::map(const Embedding& e) const {
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = e(c_[i]);
    return Poly(e.dst(), std::move(v));
}

Poly Poly::scaled(Elem s) const {
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = ctx_->mul(c_[i], s);
    return Poly(*ctx_, std::move(v));
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> v(k, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(*ctx_, std::move(v));
}

Poly Poly::derivative() const {
    std::vector<Elem> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(ctx_->mul(ctx_->from_int((long long)i), c_[i]));
    return Poly(*ctx_, std::move(v));
}

Poly Poly::mod_xn_minus_1(std::size_t n) const {
    if (c_.size() <= n) return *this;
    std::vector<Elem> v(n, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i % n] = ctx_->add(v[i % n], c_[i]);
    return Poly(*ctx_, std::move(v));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!out.empty()) out += " + ";
        bool show_coeff = c_[i] != 1 || i == 0;
        if (show_coeff) out += std::to_string(c_[i]);
        if (i >= 1) out += show_coeff ? "*x" : "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& F = a.field();
    std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a[i], b[i]);
    return Poly(F, std::move(v));
}

Poly operator-(const Poly& a) {
    const auto& F = a.field();
    std::vector<Elem> v(a.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.neg(a[i]);
    return Poly(F, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& F = a.field();
    std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a[i], b[i]);
    return Poly(F, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& F = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(F);
    std::vector<Elem> v(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] = F.add(v[i + j], F.mul(a[i], b[j]));
    }
    return Poly(F, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (b.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
    const auto& F = a.field();
    if (a.deg() < b.deg()) return {Poly(F), a};
    std::vector<Elem> r = a.coeffs();
    std::vector<Elem> quo(a.deg() - b.deg() + 1, 0);
    Elem linv = F.inv(b.lead());
    int db = b.deg();
    for (int d = a.deg(); d >= db; --d) {
        Elem c = r[d];
        if (!c) continue;
        Elem t = F.mul(c, linv);
        quo[d - db] = t;
        for (int i = 0; i <= db; ++i) r[d - db + i] = F.sub(r[d - db + i], F.mul(t, b[i]));
    }
    r.resize(db);
    return {Poly(F, std::move(quo)), Poly(F, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtGcd extended_gcd(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F, 1), s1(F);
    Poly t0(F), t1 = Poly::constant(F, 1);
    while (!r1.is_zero()) {
        auto [qt, r] = divmod(r0, r1);
        Poly s = s0 - qt * s1;
        Poly t = t0 - qt * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Elem li = F.inv(r0.lead());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly modular_inverse(const Poly& a, const Poly& mod) {
    if (mod.deg() < 1) throw std::invalid_argument("modular_inverse: modulus must have degree >= 1");
    auto eg = extended_gcd(a % mod, mod);
    if (!eg.g.is_one()) throw std::invalid_argument("modular_inverse: inputs are not coprime");
    return eg.u % mod;
}

Poly interpolate(const FieldCtx& f, const std::vector<Elem>& points, const std::vector<Elem>& values) {
    if (points.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
    {
        std::set<Elem> seen(points.begin(), points.end());
        if (seen.size() != points.size()) throw std::invalid_argument("interpolate: duplicate points");
    }
    Poly result(f);
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly basis = Poly::constant(f, 1);
        Elem denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            basis = basis * Poly(f, {f.neg(points[j]), 1});
            denom = f.mul(denom, f.sub(points[i], points[j]));
        }
        result = result + basis.scaled(f.div(values[i], denom));
    }
    return result;
}

Poly pull_back(const Poly& p, const Embedding& e) {
    if (&p.field() != &e.dst()) throw std::invalid_argument("pull_back: polynomial is not over the target field");
    std::vector<Elem> v(p.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = e.preimage(p[i]);
    return Poly(e.src(), std::move(v));
}

Poly from_roots(const FieldCtx& f, const std::vector<Elem>& roots) {
    Poly acc = Poly::constant(f, 1);
    for (Elem r : roots) acc = acc * Poly(f, {f.neg(r), 1});
    return acc;
}

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint64_t q, std::uint32_t n) {
    if (std::gcd(q, std::uint64_t(n)) != 1) throw std::invalid_argument("cyclotomic_cosets: gcd(n, q) != 1");
    std::vector<char> seen(n, 0);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::uint32_t> c;
        std::uint64_t e = s;
        while (!seen[e]) {
            seen[e] = 1;
            c.push_back(std::uint32_t(e));
            e = e * q % n;
        }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t CosetFactorization::factor_of(std::uint32_t e) const {
    e %= n;
    for (std::size_t i = 0; i < cosets.size(); ++i)
        if (std::binary_search(cosets[i].begin(), cosets[i].end(), e)) return i;
    throw std::logic_error("factor_of: exponent not covered");
}

CosetFactorization factor_xn_minus_1(const FieldCtx& f, std::uint32_t n) {
    if (n == 0 || std::gcd(std::uint64_t(n), std::uint64_t(f.p())) != 1)
        throw std::invalid_argument("factor_xn_minus_1: gcd(n, p) != 1");
    CosetFactorization cf;
    cf.n = n;
    cf.base = &f;
    cf.r = multiplicative_order(f.q(), n);
    cf.ext = &nth_root_field(f, n);
    cf.alpha = nth_root_of_unity(*cf.ext, n);
    cf.cosets = cyclotomic_cosets(f.q(), n);
    Embedding e(f, *cf.ext);
    for (const auto& c : cf.cosets) {
        std::vector<Elem> roots;
        for (auto j : c) roots.push_back(cf.ext->pow(cf.alpha, j));
        Poly over_ext = from_roots(*cf.ext, roots);
        cf.factors.push_back(pull_back(over_ext, e));
        cf.v.push_back(c.front());
    }
    return cf;
}

PolyMatrix::PolyMatrix(const FieldCtx& f, std::size_t rows, std::size_t cols)
    : ctx_(&f), rows_(rows), cols_(cols), e_(rows * cols, Poly(f)) {}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch");
    PolyMatrix out(*ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Poly acc(*ctx_);
            for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

namespace {

PolyVec row_combo(const Poly& a, const PolyVec& r, const Poly& b, const PolyVec& s) {
    PolyVec out(r.size(), Poly(a.field()));
    for (std::size_t k = 0; k < r.size(); ++k) out[k] = a * r[k] + b * s[k];
    return out;
}

}  // namespace

PolyMatrix reduce_to_lally_form(const FieldCtx& f, const std::vector<PolyVec>& gens, std::uint32_t n,
                                std::size_t ell) {
    if (std::gcd(std::uint64_t(n), std::uint64_t(f.p())) != 1)
        throw std::invalid_argument("reduce_to_lally_form: gcd(n, p) != 1");
    const Poly xn1 = Poly::xn_minus_1(f, n);
    std::vector<PolyVec> rows;
    // sentinel[i] = j when row i is still the untouched (x^n - 1) e_j row
    std::vector<int> sentinel;
    for (const auto& g : gens) {
        if (g.size() != ell) throw std::invalid_argument("reduce_to_lally_form: generator has wrong length");
        PolyVec r;
        for (const auto& p : g) {
            if (&p.field() != &f) throw std::invalid_argument("reduce_to_lally_form: field mismatch");
            r.push_back(p.mod_xn_minus_1(n));
        }
        rows.push_back(std::move(r));
        sentinel.push_back(-1);
    }
    for (std::size_t j = 0; j < ell; ++j) {
        PolyVec r(ell, Poly(f));
        r[j] = xn1;
        rows.push_back(std::move(r));
        sentinel.push_back(int(j));
    }

    for (std::size_t j = 0; j < ell; ++j) {
        // pivot: lowest degree entry in column j, then lowest row index
        std::size_t piv = rows.size();
        for (std::size_t i = j; i < rows.size(); ++i) {
            if (rows[i][j].is_zero()) continue;
            if (piv == rows.size() || rows[i][j].deg() < rows[piv][j].deg()) piv = i;
        }
        std::swap(rows[j], rows[piv]);
        std::swap(sentinel[j], sentinel[piv]);
        for (std::size_t i = j + 1; i < rows.size(); ++i) {
            if (rows[i][j].is_zero()) continue;
            const Poly a = rows[j][j], b = rows[i][j];
            auto [quo, rem] = divmod(b, a);
            if (rem.is_zero()) {
                rows[i] = row_combo(Poly::constant(f, 1), rows[i], -quo, rows[j]);
            } else {
                auto eg = extended_gcd(a, b);
                PolyVec top = row_combo(eg.u, rows[j], eg.v, rows[i]);
                PolyVec bot = row_combo(b / eg.g, rows[j], -(a / eg.g), rows[i]);
                rows[j] = std::move(top);
                rows[i] = std::move(bot);
                sentinel[j] = -1;
            }
            sentinel[i] = -1;
        }
        Elem li = f.inv(rows[j][j].lead());
        if (li != 1) {
            for (auto& p : rows[j]) p = p.scaled(li);
            sentinel[j] = -1;
        }
        // The (x^n - 1) e_c rows for c > j are still present, so entries in
        // those columns may be reduced modulo x^n - 1.
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = j + 1; c < ell; ++c)
                if (sentinel[i] != int(c)) rows[i][c] = rows[i][c] % xn1;
    }
    for (std::size_t i = ell; i < rows.size(); ++i)
        for (const auto& p : rows[i])
            if (!p.is_zero()) throw std::logic_error("reduce_to_lally_form: elimination left a nonzero row");

    PolyMatrix out(f, ell, ell);
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j) out.at(i, j) = rows[i][j];

    for (std::size_t j = 0; j < ell; ++j) {
        if (!(xn1 % out.at(j, j)).is_zero()) throw std::logic_error("reduce_to_lally_form: diagonal does not divide x^n-1");
        // a full x^n - 1 pivot row only needs (x^n - 1) e_j
        if (out.at(j, j) == xn1)
            for (std::size_t c = j + 1; c < ell; ++c) out.at(j, c) = Poly(f);
    }
    for (std::size_t j = 1; j < ell; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            Poly quo = out.at(i, j) / out.at(j, j);
            if (quo.is_zero()) continue;
            for (std::size_t c = j; c < ell; ++c) out.at(i, c) = out.at(i, c) - quo * out.at(j, c);
        }
    return out;
}

namespace {

Poly det_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    const auto& F = m.field();
    if (row == m.rows()) return Poly::constant(F, 1);
    Poly acc(F);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::size_t c = cols[k];
        if (m.at(row, c).is_zero()) continue;
        cols.erase(cols.begin() + k);
        Poly minor = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + k, c);
        Poly term = m.at(row, c) * minor;
        acc = (k % 2) ? acc - term : acc + term;
    }
    return acc;
}

}  // namespace

Poly polymatrix_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("polymatrix_det: matrix is not square");
    bool upper = true;
    for (std::size_t i = 0; i < m.rows() && upper; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!m.at(i, j).is_zero()) { upper = false; break; }
    if (upper) {
        Poly acc = Poly::constant(m.field(), 1);
        for (std::size_t i = 0; i < m.rows(); ++i) acc = acc * m.at(i, i);
        return acc;
    }
    std::vector<std::size_t> cols(m.cols());
    std::iota(cols.begin(), cols.end(), 0);
    return det_rec(m, cols, 0);
}

}  // namespace qcspec
