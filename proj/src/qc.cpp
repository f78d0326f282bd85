#include "qcspec/qc.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qcspec {

struct QcCode::Cache {
    std::once_flag eigen_once, constituent_once;
    std::vector<EigenData> eigen;
    std::vector<Constituent> constituents;
};

namespace {

Mat scalar_rows(const FieldCtx& f, std::uint32_t n, std::size_t ell, const std::vector<PolyVec>& gens) {
    Mat rows;
    for (const auto& g : gens)
        for (std::uint32_t s = 0; s < n; ++s) {
            Vec v(ell * n, 0);
            for (std::size_t j = 0; j < ell; ++j)
                for (int i = 0; i <= g[j].deg(); ++i) v[((i + s) % n) * ell + j] = f.add(v[((i + s) % n) * ell + j], g[j][i]);
            rows.push_back(std::move(v));
        }
    return rows;
}

std::vector<PolyVec> checked(const FieldCtx& f, std::uint32_t n, std::size_t ell, std::vector<PolyVec> gens) {
    if (n == 0 || ell == 0) throw std::invalid_argument("quasi-cyclic code: n and ell must be positive");
    if (std::gcd<std::uint64_t>(n, f.q()) != 1) throw std::invalid_argument("quasi-cyclic code: gcd(n, q) must be 1");
    for (auto& g : gens) {
        if (g.size() != ell) throw std::invalid_argument("quasi-cyclic code: generator has wrong number of components");
        for (auto& p : g) {
            if (&p.field() != &f) throw std::invalid_argument("quasi-cyclic code: component over a different field");
            p = p.mod_xn_minus_1(n);
        }
    }
    return gens;
}

// F_q-valued trace of an element of the splitting field.
Elem trace_down(const FieldCtx& big, const Embedding& e, std::uint32_t degree, Elem x) {
    Elem acc = 0;
    for (std::uint32_t i = 0; i < degree; ++i) {
        acc = big.add(acc, x);
        x = big.pow(x, e.src().q());
    }
    return e.preimage(acc);
}

}  // namespace

QcCode::QcCode(const FieldCtx& f, std::uint32_t n, std::size_t ell, std::vector<PolyVec> generators)
    : f_(&f),
      n_(n),
      ell_(ell),
      gens_(checked(f, n, ell, std::move(generators))),
      lally_(reduce_to_lally_form(f, gens_, n, ell)),
      scalar_(f, ell * n, scalar_rows(f, n, ell, gens_)),
      cf_(std::make_shared<const CosetFactorization>(factor_xn_minus_1(f, n))),
      emb_(std::make_shared<const Embedding>(f, *cf_->ext)),
      cache_(std::make_shared<Cache>()) {
    std::size_t diag = 0;
    for (std::size_t j = 0; j < ell; ++j) diag += lally_.at(j, j).deg();
    if (scalar_.dim() != ell * n - diag) throw std::logic_error("quasi-cyclic code: dimension disagrees with the Lally form");
}

Mat QcCode::lally_at(std::uint32_t e) const {
    const auto& E = ext();
    Elem x = E.pow(cf_->alpha, e % n_);
    Mat m(ell_, Vec(ell_, 0));
    for (std::size_t i = 0; i < ell_; ++i)
        for (std::size_t j = i; j < ell_; ++j) m[i][j] = lally_.at(i, j).eval(*emb_, x);
    return m;
}

ExpSet QcCode::eigenvalues() const {
    ExpSet out;
    for (const auto& e : eigen()) out.push_back(e.exponent);
    return out;
}

const std::vector<EigenData>& QcCode::eigen() const {
    std::call_once(cache_->eigen_once, [this] {
        const auto& E = ext();
        for (std::uint32_t e = 0; e < n_; ++e) {
            Elem x = E.pow(cf_->alpha, e);
            std::size_t mult = 0;
            for (std::size_t j = 0; j < ell_; ++j)
                if (lally_.at(j, j).eval(*emb_, x) == 0) ++mult;
            if (mult == 0) continue;
            Mat basis = null_space(E, lally_at(e), ell_);
            LinearCode ec = eigencode_of(*this, basis);
            cache_->eigen.push_back({e, mult, std::move(basis), std::move(ec)});
        }
    });
    return cache_->eigen;
}

LinearCode eigencode_of(const QcCode& c, const Mat& basis) {
    const auto& F = c.field();
    const auto& E = c.ext();
    std::uint32_t r = c.factorization().r;
    Mat cons;
    for (const auto& v : basis) {
        Elem lambda = 1;
        for (std::uint32_t t = 0; t < r; ++t) {
            Vec row(c.ell());
            for (std::size_t j = 0; j < c.ell(); ++j) row[j] = trace_down(E, c.to_ext(), r, E.mul(lambda, v[j]));
            cons.push_back(std::move(row));
            lambda = E.mul(lambda, E.generator());
        }
    }
    return LinearCode(F, c.ell(), null_space(F, cons, c.ell()));
}

CommonEigen common_eigenspace(const QcCode& c, const ExpSet& L) {
    ExpSet eig = c.eigenvalues();
    ExpSet l = normalize(L, c.n());
    if (!is_subset(l, eig)) throw std::invalid_argument("common_eigenspace: L is not contained in the eigenvalues");
    Mat stacked;
    for (auto e : l)
        for (auto& row : c.lally_at(e)) stacked.push_back(std::move(row));
    Mat basis = null_space(c.ext(), stacked, c.ell());
    LinearCode ec = eigencode_of(c, basis);
    return {std::move(basis), std::move(ec)};
}

Mat spectral_parity_check(const QcCode& c) {
    const auto& E = c.ext();
    Mat h;
    for (const auto& ed : c.eigen()) {
        Elem beta = E.pow(c.factorization().alpha, ed.exponent);
        for (const auto& v : ed.basis) {
            Vec row(c.length());
            Elem pw = 1;
            for (std::uint32_t i = 0; i < c.n(); ++i) {
                for (std::size_t j = 0; j < c.ell(); ++j) row[i * c.ell() + j] = E.mul(pw, v[j]);
                pw = E.mul(pw, beta);
            }
            h.push_back(std::move(row));
        }
    }
    return h;
}

const std::vector<Constituent>& QcCode::constituents() const {
    std::call_once(cache_->constituent_once, [this] {
        const auto& E = ext();
        for (std::size_t i = 0; i < cf_->factors.size(); ++i) {
            std::uint32_t deg = std::uint32_t(cf_->cosets[i].size());
            const auto& Ei = make_field(f_->p(), f_->m() * deg);
            Embedding sub(Ei, E);
            Elem x = E.pow(cf_->alpha, cf_->v[i]);
            Mat rows;
            for (std::size_t a = 0; a < ell_; ++a) {
                Vec row(ell_, 0);
                bool nz = false;
                for (std::size_t b = a; b < ell_; ++b) {
                    row[b] = sub.preimage(lally_.at(a, b).eval(*emb_, x));
                    nz |= row[b] != 0;
                }
                if (nz) rows.push_back(std::move(row));
            }
            cache_->constituents.push_back({i, cf_->v[i], cf_->factors[i], &Ei, LinearCode(Ei, ell_, std::move(rows))});
        }
    });
    return cache_->constituents;
}

Mat concat_rows(const FieldCtx& f, const CosetFactorization& cf, std::size_t ell, std::size_t factor,
                const LinearCode& ci) {
    const auto& E = *cf.ext;
    const auto& Ei = ci.field();
    std::uint32_t n = cf.n;
    std::uint32_t deg = std::uint32_t(cf.cosets.at(factor).size());
    if (Ei.p() != f.p() || Ei.m() != f.m() * deg) throw std::invalid_argument("concat_rows: constituent over the wrong field");
    if (ci.length() != ell) throw std::invalid_argument("concat_rows: constituent length differs from the index");
    Embedding sub(Ei, E);
    Embedding down(f, Ei);
    Elem ninv = f.inv(f.from_int(n));
    std::uint32_t v = cf.v[factor];
    // alpha^{-t v} inside E_i for every array row t
    std::vector<Elem> twist(n);
    for (std::uint32_t t = 0; t < n; ++t) twist[t] = sub.preimage(E.pow(cf.alpha, (n - std::uint64_t(t) * v % n) % n));
    Mat rows;
    for (const auto& b : ci.generator()) {
        Elem lambda = 1;
        for (std::uint32_t s = 0; s < deg; ++s) {
            Vec row(ell * n, 0);
            for (std::size_t j = 0; j < ell; ++j) {
                Elem sym = Ei.mul(lambda, b[j]);
                if (sym == 0) continue;
                for (std::uint32_t t = 0; t < n; ++t)
                    row[t * ell + j] = f.mul(ninv, trace_down(Ei, down, deg, Ei.mul(sym, twist[t])));
            }
            rows.push_back(std::move(row));
            lambda = Ei.mul(lambda, Ei.generator());
        }
    }
    return rows;
}

LinearCode concat_reconstruct(const QcCode& c) {
    Mat rows;
    for (const auto& con : c.constituents()) {
        if (con.code.dim() == 0) continue;
        auto r = concat_rows(c.field(), c.factorization(), c.ell(), con.factor, con.code);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return LinearCode(c.field(), c.length(), std::move(rows));
}

std::vector<PolyVec> flat_to_generators(const FieldCtx& f, std::uint32_t n, std::size_t ell, const Mat& rows) {
    std::vector<PolyVec> gens;
    for (const auto& r : rows) {
        if (r.size() != ell * n) throw std::invalid_argument("flat_to_generators: row length mismatch");
        PolyVec g;
        for (std::size_t j = 0; j < ell; ++j) {
            std::vector<Elem> c(n);
            for (std::uint32_t i = 0; i < n; ++i) c[i] = r[i * ell + j];
            g.emplace_back(f, std::move(c));
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

LinearCode minimal_ideal_sum(const QcCode& c, const std::vector<std::size_t>& factors) {
    const auto& F = c.field();
    Poly h = Poly::constant(F, 1);
    for (auto i : factors) h = h * c.factorization().factors.at(i);
    return cyclic_from_check(h, c.n());
}

const FieldCtx& field_from_json(const nlohmann::json& q) {
    if (q.is_array()) {
        if (q.size() != 2) throw std::invalid_argument("field must be q or [p, m]");
        return make_field(q[0].get<std::uint32_t>(), q[1].get<std::uint32_t>());
    }
    return make_field_q(q.get<std::uint32_t>());
}

nlohmann::json field_to_json(const FieldCtx& f) {
    if (f.m() == 1) return f.p();
    return nlohmann::json::array({f.p(), f.m()});
}

nlohmann::json qc_to_json(const QcCode& c) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : c.generators()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& p : g) row.push_back(p.coeffs());
        gens.push_back(std::move(row));
    }
    return {{"q", field_to_json(c.field())}, {"n", c.n()}, {"ell", c.ell()}, {"generators", gens}};
}

QcCode qc_from_json(const nlohmann::json& j) {
    const auto& f = field_from_json(j.at("q"));
    auto n = j.at("n").get<std::uint32_t>();
    auto ell = j.at("ell").get<std::size_t>();
    std::vector<PolyVec> gens;
    for (const auto& g : j.at("generators")) {
        PolyVec row;
        for (const auto& p : g) {
            auto c = p.get<std::vector<Elem>>();
            for (auto x : c)
                if (x >= f.q()) throw std::invalid_argument("coefficient outside the field");
            row.emplace_back(f, std::move(c));
        }
        gens.push_back(std::move(row));
    }
    return QcCode(f, n, ell, std::move(gens));
}

}  // namespace qcspec
