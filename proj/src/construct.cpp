#include "qcspec/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qcspec {

namespace {

PolyMatrix identity_times(const FieldCtx& f, std::size_t ell, const Poly& p) {
    PolyMatrix m(f, ell, ell);
    for (std::size_t i = 0; i < ell; ++i) m.at(i, i) = p;
    return m;
}

std::vector<PolyVec> rows_of(const PolyMatrix& m) {
    std::vector<PolyVec> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        PolyVec r;
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

Elem base_root(const FieldCtx& f, std::uint32_t n) {
    if (n == 0 || (f.q() - 1) % n != 0) throw std::invalid_argument("n must divide q - 1");
    // the same root the factorization of x^n - 1 uses, so exponents agree
    return nth_root_of_unity(f, n);
}

DesignResult build_design(const FieldCtx& f, const DesignSpec& spec) {
    std::size_t ell = spec.ell;
    std::uint32_t n = spec.n;
    if (ell == 0 || ell >= f.q()) throw std::invalid_argument("design: need 1 <= ell < q");
    if (spec.groups.size() != ell) throw std::invalid_argument("design: need one factor group per index position");
    if (spec.gammas.size() != ell - 1) throw std::invalid_argument("design: need ell - 1 gammas");
    std::set<Elem> seen_g;
    for (auto g : spec.gammas) {
        if (g >= f.q() || g == 0 || g == 1) throw std::invalid_argument("design: gammas must lie outside {0, 1}");
        if (!seen_g.insert(g).second) throw std::invalid_argument("design: gammas must be distinct");
    }
    auto cf = factor_xn_minus_1(f, n);
    std::set<std::size_t> used;
    Poly frak = Poly::constant(f, 1);
    std::vector<ExpSet> roots;
    for (const auto& grp : spec.groups) {
        if (grp.empty()) throw std::invalid_argument("design: empty factor group");
        ExpSet r;
        for (auto i : grp) {
            if (i >= cf.factors.size()) throw std::invalid_argument("design: factor index out of range");
            if (!used.insert(i).second) throw std::invalid_argument("design: factor used twice");
            frak = frak * cf.factors[i];
            r.insert(r.end(), cf.cosets[i].begin(), cf.cosets[i].end());
        }
        roots.push_back(normalize(r, n));
    }
    Poly xn1 = Poly::xn_minus_1(f, n);
    Poly cofactor = xn1 / frak;

    std::vector<Poly> hs;
    for (std::size_t u = 0; u + 1 < ell; ++u) {
        Poly h(f);
        for (std::size_t i = 0; i < ell; ++i) {
            Elem coef = f.neg(f.pow(spec.gammas[u], i + 1));
            for (auto fi : spec.groups[i]) {
                const Poly& gij = cf.factors[fi];
                Poly y = frak / gij;
                Poly a(f);
                if (gij.deg() == 1) {
                    // a = c x with c beta y(beta) = coef, the root-substitution form
                    Elem beta = f.neg(gij[0]);
                    a = Poly::monomial(f, 1, f.div(coef, f.mul(beta, y.eval(beta))));
                } else {
                    a = modular_inverse(y % gij, gij).scaled(coef) % gij;
                }
                h = h + a * y;
            }
        }
        hs.push_back(h);
    }

    PolyMatrix gp(f, ell, ell), H(f, ell, ell);
    for (std::size_t u = 0; u + 1 < ell; ++u) {
        gp.at(u, u) = Poly::constant(f, 1);
        gp.at(u, ell - 1) = hs[u];
        H.at(u, u) = xn1;
        H.at(u, ell - 1) = -(cofactor * hs[u]);
    }
    gp.at(ell - 1, ell - 1) = frak;
    H.at(ell - 1, ell - 1) = cofactor;
    if (!(H * gp == identity_times(f, ell, xn1))) throw std::logic_error("design: H G' differs from (x^n - 1) I");

    QcCode code(f, n, ell, rows_of(gp));
    return {std::move(code), gp, hs, frak, roots, spec.gammas};
}

std::size_t group_of(const DesignResult& d, const ExpSet& Lin) {
    ExpSet L = normalize(Lin, d.code.n());
    for (std::size_t i = 0; i < d.group_roots.size(); ++i)
        if (!L.empty() && is_subset(L, d.group_roots[i])) return i;
    throw std::invalid_argument("design_bound: pick lies in no single group");
}

namespace {

// Every t columns of the rows (gamma_u^i, ..., 1), i in groups, are independent.
bool prefix_is_mds(const DesignResult& d, const std::vector<std::size_t>& groups) {
    const auto& F = d.code.field();
    std::size_t ell = d.code.ell(), t = groups.size();
    if (t >= ell) return true;
    Mat rows;
    for (auto g : groups) {
        Vec r;
        for (auto gam : d.gammas) r.push_back(F.pow(gam, g + 1));
        r.push_back(1);
        rows.push_back(r);
    }
    std::vector<char> sel(ell, 0);
    std::fill(sel.begin(), sel.begin() + t, 1);
    do {
        Mat sub(t);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < ell; ++j)
                if (sel[j]) sub[i].push_back(rows[i][j]);
        if (rank(F, sub) != t) return false;
    } while (std::prev_permutation(sel.begin(), sel.end()));
    return true;
}

}  // namespace

ExtDistance design_bound(const DesignResult& d, const std::vector<DefiningSetBound>& picks) {
    if (picks.empty() || picks.size() > d.group_roots.size())
        throw std::invalid_argument("design_bound: need between one and ell picks");
    std::vector<std::size_t> groups;
    ExtDistance best = ExtDistance::inf();
    for (std::size_t t = 0; t < picks.size(); ++t) {
        if (t > 0 && !prefix_is_mds(d, groups))
            throw std::invalid_argument("design_bound: pick order not covered by the design");
        std::size_t g = group_of(d, picks[t].L);
        if (std::find(groups.begin(), groups.end(), g) != groups.end())
            throw std::invalid_argument("design_bound: two picks from one group");
        groups.push_back(g);
        best = dmin(best, ExtDistance::of(t + 1) * picks[t].d);
    }
    return best;
}

std::vector<DefiningSetBound> group_bch_picks(const DesignResult& d) {
    std::vector<DefiningSetBound> out;
    for (const auto& roots : d.group_roots) {
        auto cands = bch_bound(roots, d.code.n());
        auto best = std::max_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            if (a.d != b.d) return a.d < b.d;
            return a.L.size() > b.L.size();
        });
        out.push_back(*best);
    }
    return out;
}

const std::vector<DesignTableRow>& design_table() {
    static const std::vector<DesignTableRow> rows = {
        {1, 2, 4, {2, 1}, 3, 1},        {2, 2, 5, {3, 1}, 4, 1},        {3, 2, 7, {4, 2}, 5, 2},
        {4, 2, 9, {5, 2}, 6, 2},        {5, 2, 11, {6, 3}, 7, 3},       {6, 2, 11, {7, 3}, 8, 3},
        {7, 3, 5, {2, 1, 1}, 3, 2},     {8, 3, 7, {3, 1, 1}, 4, 2},     {9, 3, 9, {4, 2, 1}, 5, 3},
        {10, 3, 9, {5, 2, 1}, 6, 3},    {11, 4, 7, {2, 1, 1, 1}, 3, 3}, {12, 4, 7, {3, 1, 1, 1}, 4, 3},
    };
    return rows;
}

std::vector<std::size_t> design_sizes(std::uint64_t delta, std::size_t ell) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= ell; ++i) out.push_back(std::max<std::size_t>(1, (delta + i - 1) / i - 1));
    return out;
}

DesignResult build_design_blocks(const FieldCtx& f, const std::vector<std::size_t>& sizes) {
    std::uint32_t n = f.q() - 1;
    std::size_t ell = sizes.size();
    auto cf = factor_xn_minus_1(f, n);
    DesignSpec spec;
    spec.n = n;
    spec.ell = ell;
    std::uint32_t next = 0;
    for (auto s : sizes) {
        std::vector<std::size_t> grp;
        for (std::size_t t = 0; t < s; ++t, ++next) {
            if (next >= n) throw std::invalid_argument("design: group sizes exceed n");
            grp.push_back(cf.factor_of(next));
        }
        spec.groups.push_back(std::move(grp));
    }
    for (std::size_t u = 0; u + 1 < ell; ++u) spec.gammas.push_back(Elem(u + 2));
    return build_design(f, spec);
}

std::uint64_t bch_dimension(std::uint64_t q, std::uint32_t length, std::uint32_t delta) {
    ExpSet s;
    for (std::uint32_t i = 1; i < delta; ++i) s.push_back(i % length);
    return length - q_closure(s, q, length).size();
}

LinearCode extended_grs(const FieldCtx& f, std::size_t k, const std::vector<Elem>& points,
                        const std::vector<Elem>& multipliers) {
    std::size_t m = points.size();
    if (multipliers.size() != m) throw std::invalid_argument("extended_grs: one multiplier per point");
    if (k == 0 || k > m + 1) throw std::invalid_argument("extended_grs: dimension out of range");
    std::set<Elem> distinct(points.begin(), points.end());
    if (distinct.size() != m) throw std::invalid_argument("extended_grs: points must be distinct");
    for (auto v : multipliers)
        if (v == 0) throw std::invalid_argument("extended_grs: multipliers must be nonzero");
    Mat g(k, Vec(m + 1, 0));
    for (std::size_t j = 0; j < m; ++j) {
        Elem pw = multipliers[j];
        for (std::size_t t = 0; t < k; ++t) {
            g[t][j] = pw;
            pw = f.mul(pw, points[j]);
        }
    }
    g[k - 1][m] = 1;
    return LinearCode(f, m + 1, std::move(g));
}

LinearCode extended_grs(const FieldCtx& f, std::uint32_t q, std::size_t k) {
    const auto& base = make_field_q(q);
    Embedding e(base, f);
    std::vector<Elem> pts;
    for (Elem x = 0; x < q; ++x) pts.push_back(e(x));
    return extended_grs(f, k, pts, std::vector<Elem>(q, 1));
}

namespace {

LrcConstruction assemble_lrc(const FieldCtx& f, std::uint32_t n, const std::vector<std::size_t>& factors,
                             const std::vector<LinearCode>& constituents, std::uint64_t dim, std::uint64_t dist) {
    auto cf = factor_xn_minus_1(f, n);
    std::size_t ell = f.q() + 1;
    Mat rows;
    for (std::size_t t = 0; t < factors.size(); ++t) {
        auto r = concat_rows(f, cf, ell, factors[t], constituents[t]);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    LinearCode flat(f, ell * n, rows);
    QcCode code(f, n, ell, flat_to_generators(f, n, ell, flat.generator()));
    if (!(code.scalar() == flat)) throw std::logic_error("lrc construction: concatenated code is not quasi-cyclic");
    if (code.dim() != dim) throw std::logic_error("lrc construction: dimension differs from the formula");
    return {std::move(code), ell * n, dim, dist, factors};
}

void check_a(std::uint32_t n, std::uint32_t delta, std::uint32_t a) {
    // a <= delta / (n - delta)
    if (a == 0 || std::uint64_t(a) * (n - delta) > delta) throw std::invalid_argument("lrc: need 1 <= a <= delta/(n-delta)");
}

}  // namespace

LrcConstruction build_lrc_c1(const FieldCtx& f, std::uint32_t n, std::uint32_t delta, std::uint32_t a) {
    std::uint32_t q = f.q();
    if (n < 2 || (q - 1) % n != 0) throw std::invalid_argument("lrc-c1: n must divide q - 1");
    if (delta < 2 || delta >= n) throw std::invalid_argument("lrc-c1: need 2 <= delta < n");
    check_a(n, delta, a);
    auto cf = factor_xn_minus_1(f, n);
    std::vector<std::size_t> factors;
    std::vector<LinearCode> cons;
    for (std::uint32_t e = 1; e <= n - delta + 1; ++e) {
        factors.push_back(cf.factor_of(e));
        cons.push_back(extended_grs(f, q, e == 1 ? q - a + 2 : q - a + 1));
    }
    std::uint64_t dim = std::uint64_t(q + 1 - a) * (n - delta + 1) + 1;
    return assemble_lrc(f, n, factors, cons, dim, std::uint64_t(a) * n);
}

LrcConstruction build_lrc_c2(const FieldCtx& f, std::uint32_t n, std::uint32_t delta, std::uint32_t a) {
    std::uint32_t q = f.q();
    if (n < 3 || (q + 1) % n != 0) throw std::invalid_argument("lrc-c2: n must divide q + 1");
    if (delta < 3 || delta >= n || (n - delta) % 2 != 0) throw std::invalid_argument("lrc-c2: need 3 <= delta < n with n - delta even");
    check_a(n, delta, a);
    auto cf = factor_xn_minus_1(f, n);
    const auto& f2 = make_field(f.p(), 2 * f.m());
    std::vector<std::size_t> factors = {cf.factor_of(0)};
    std::vector<LinearCode> cons = {extended_grs(f, q, q - a + 2)};
    for (std::uint32_t i = 1; i <= (n - delta) / 2; ++i) {
        std::size_t fi = cf.factor_of(i);
        if (cf.cosets[fi].size() != 2) throw std::logic_error("lrc-c2: expected a quadratic factor");
        factors.push_back(fi);
        cons.push_back(extended_grs(f2, q, q - a + 1));
    }
    std::uint64_t dim = std::uint64_t(q + 1 - a) * (n - delta + 1) + 1;
    return assemble_lrc(f, n, factors, cons, dim, std::uint64_t(a) * n);
}

LrcC3Result build_lrc_c3(const FieldCtx& f, std::uint32_t n, std::size_t ell, Elem gamma) {
    if (ell < 2) throw std::invalid_argument("lrc-c3: need ell >= 2");
    if (gamma == 0 || gamma >= f.q()) throw std::invalid_argument("lrc-c3: gamma must be a nonzero field element");
    Elem beta = base_root(f, n);
    std::vector<Elem> pts, vals;
    for (std::uint32_t i = 0; i < n; ++i) pts.push_back(f.pow(beta, i));
    for (std::uint32_t i = 0; i < n; ++i) {
        Elem prod = 1;
        for (std::uint32_t j = 0; j < n; ++j)
            if (j != i) prod = f.mul(prod, f.sub(pts[i], pts[j]));
        vals.push_back(f.neg(f.mul(gamma, f.inv(prod))));
    }
    Poly a = interpolate(f, pts, vals);
    Poly xn1 = Poly::xn_minus_1(f, n);
    Poly ysum(f);
    for (auto p : pts) ysum = ysum + xn1 / Poly(f, {f.neg(p), 1});
    Poly h = a * ysum;
    Poly g = xn1 / Poly(f, {f.neg(1), 1});

    PolyMatrix gp(f, ell, ell), H(f, ell, ell);
    for (std::size_t u = 0; u + 1 < ell; ++u) {
        gp.at(u, u) = g;
        gp.at(u, ell - 1) = g * h;
        H.at(u, u) = Poly(f, {f.neg(1), 1});
        H.at(u, ell - 1) = -h;
    }
    gp.at(ell - 1, ell - 1) = xn1;
    H.at(ell - 1, ell - 1) = Poly::constant(f, 1);
    if (!(H * gp == identity_times(f, ell, xn1))) throw std::logic_error("lrc-c3: H G' differs from (x^n - 1) I");

    QcCode code(f, n, ell, rows_of(gp));
    ExpSet nonzero;
    for (std::uint32_t i = 1; i < n; ++i) nonzero.push_back(i);
    std::vector<DefiningSetBound> picks = {{full_set(n), ExtDistance::inf(), BoundMethod::BCH},
                                           {nonzero, ExtDistance::of(n), BoundMethod::BCH}};
    return {std::move(code), a, h, g, gp, picks};
}

}  // namespace qcspec
