#include "qcspec/cyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qcspec {

ExpSet normalize(ExpSet s, std::uint32_t n) {
    for (auto& e : s) e %= n;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

ExpSet q_closure(const ExpSet& s, std::uint64_t q, std::uint32_t n) {
    if (std::gcd<std::uint64_t>(q, n) != 1) throw std::invalid_argument("q_closure: q and n must be coprime");
    ExpSet out;
    for (auto e : s) {
        std::uint64_t x = e % n;
        do {
            out.push_back(std::uint32_t(x));
            x = x * q % n;
        } while (x != e % n);
    }
    return normalize(std::move(out), n);
}

bool is_q_closed(const ExpSet& s, std::uint64_t q, std::uint32_t n) { return q_closure(s, q, n) == normalize(s, n); }

bool is_subset(const ExpSet& a, const ExpSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

ExpSet full_set(std::uint32_t n) {
    ExpSet s(n);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

std::string method_name(BoundMethod m) {
    switch (m) {
        case BoundMethod::BCH: return "BCH";
        case BoundMethod::HT: return "HT";
        case BoundMethod::Roos: return "Roos";
        case BoundMethod::Subcode: return "Subcode";
    }
    return "?";
}

Poly cyclic_generator_poly(const CosetFactorization& cf, const ExpSet& z) {
    const auto& F = *cf.base;
    if (!is_q_closed(z, F.q(), cf.n)) throw std::invalid_argument("cyclic code: zero set is not closed under multiplication by q");
    Poly g = Poly::constant(F, 1);
    for (std::size_t i = 0; i < cf.cosets.size(); ++i)
        if (std::binary_search(z.begin(), z.end(), cf.cosets[i].front())) g = g * cf.factors[i];
    return g;
}

LinearCode cyclic_from_generator(const Poly& g, std::uint32_t n) {
    const auto& F = g.field();
    if (g.is_zero() || g.deg() > int(n)) throw std::invalid_argument("cyclic_from_generator: bad generator degree");
    if (g.deg() == int(n)) return LinearCode::zero(F, n);
    Mat rows;
    for (int s = 0; s < int(n) - g.deg(); ++s) {
        Vec v(n, 0);
        for (int i = 0; i <= g.deg(); ++i) v[(i + s) % n] = g[i];
        rows.push_back(std::move(v));
    }
    return LinearCode(F, n, std::move(rows));
}

LinearCode cyclic_from_check(const Poly& h, std::uint32_t n) {
    auto [g, r] = divmod(Poly::xn_minus_1(h.field(), n), h);
    if (!r.is_zero()) throw std::invalid_argument("cyclic_from_check: h does not divide x^n-1");
    return cyclic_from_generator(g, n);
}

LinearCode cyclic_from_zeroset(const FieldCtx& f, std::uint32_t n, const ExpSet& z) {
    auto cf = factor_xn_minus_1(f, n);
    return cyclic_from_generator(cyclic_generator_poly(cf, normalize(z, n)), n);
}

namespace {

std::vector<std::uint32_t> coprime_strides(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n == 1) return {1};
    for (std::uint32_t m = 1; m < n; ++m)
        if (std::gcd(m, n) == 1) out.push_back(m);
    return out;
}

ExtDistance value_for(const ExpSet& L, std::uint32_t n, std::uint64_t v) {
    if (L.size() == n) return ExtDistance::inf();
    return ExtDistance::of(v);
}

}  // namespace

std::vector<DefiningSetBound> bch_bound(const ExpSet& zin, std::uint32_t n) {
    ExpSet z = normalize(zin, n);
    std::vector<char> in(n, 0);
    for (auto e : z) in[e] = 1;
    std::vector<DefiningSetBound> out;
    for (auto m : coprime_strides(n))
        for (auto j : z) {
            ExpSet run;
            std::uint32_t e = j;
            while (run.size() < n && in[e]) {
                run.push_back(e);
                ExpSet L = normalize(run, n);
                out.push_back({L, value_for(L, n, run.size() + 1), BoundMethod::BCH});
                e = (e + m) % n;
            }
        }
    return dedupe(std::move(out));
}

std::vector<DefiningSetBound> ht_bound(const ExpSet& zin, std::uint32_t n, const EngineCaps& caps) {
    ExpSet z = normalize(zin, n);
    std::vector<char> in(n, 0);
    for (auto e : z) in[e] = 1;
    std::uint32_t smax = caps.ht_s_max ? std::min(caps.ht_s_max, n) : n;
    std::vector<DefiningSetBound> out;
    for (std::uint32_t j = 0; j < n; ++j) {
        if (!in[j]) continue;
        for (auto a : coprime_strides(n))
            for (std::uint32_t b = 1; b < n; ++b) {
                std::uint32_t gb = std::gcd(b, n);
                for (std::uint32_t s = 1; s <= smax; ++s) {
                    bool any = false;
                    for (std::uint32_t delta = 2; delta <= n + 1; ++delta) {
                        ExpSet A;
                        bool ok = true;
                        for (std::uint32_t i1 = 0; i1 + 2 <= delta && ok; ++i1)
                            for (std::uint32_t i2 = 0; i2 <= s; ++i2) {
                                std::uint32_t e = std::uint32_t((j + std::uint64_t(i1) * a + std::uint64_t(i2) * b) % n);
                                if (!in[e]) { ok = false; break; }
                                A.push_back(e);
                            }
                        if (!ok) break;
                        any = true;
                        if (gb >= delta) continue;
                        A = normalize(std::move(A), n);
                        out.push_back({A, value_for(A, n, delta + s), BoundMethod::HT});
                    }
                    if (!any) break;
                }
            }
    }
    return dedupe(std::move(out));
}

std::vector<DefiningSetBound> roos_bound(const ExpSet& zin, std::uint32_t n, const EngineCaps& caps) {
    ExpSet z = normalize(zin, n);
    std::vector<char> in(n, 0);
    for (auto e : z) in[e] = 1;
    std::uint32_t wcap = std::min(caps.roos_window, n);
    auto strides = coprime_strides(n);
    std::vector<DefiningSetBound> out;
    std::vector<char> shift_ok(n);
    for (std::uint32_t a0 = 0; a0 < n; ++a0)
        for (auto sa : strides)
            for (std::uint32_t la = 1; la <= n; ++la) {
                ExpSet A;
                for (std::uint32_t i = 0; i < la; ++i) A.push_back(std::uint32_t((a0 + std::uint64_t(i) * sa) % n));
                // b is admissible when A + b lies in z
                bool any = false;
                for (std::uint32_t b = 0; b < n; ++b) {
                    shift_ok[b] = 1;
                    for (auto x : A)
                        if (!in[(x + b) % n]) { shift_ok[b] = 0; break; }
                    any |= shift_ok[b];
                }
                if (!any) break;
                for (std::uint32_t w0 = 0; w0 < n; ++w0)
                    for (auto sw : strides)
                        for (std::uint32_t lw = 2; lw <= wcap; ++lw) {
                            // B: admissible points of the window; hull measured along the stride
                            std::vector<std::uint32_t> idx;
                            for (std::uint32_t t = 0; t < lw; ++t)
                                if (shift_ok[(w0 + std::uint64_t(t) * sw) % n]) idx.push_back(t);
                            if (idx.size() < 2) continue;
                            std::uint32_t hull = idx.back() - idx.front() + 1;
                            if (hull != lw) continue;  // only windows that are the hull of B
                            if (hull > idx.size() + la - 1) continue;
                            ExpSet S;
                            for (auto t : idx)
                                for (auto x : A) S.push_back(std::uint32_t((x + w0 + std::uint64_t(t) * sw) % n));
                            S = normalize(std::move(S), n);
                            out.push_back({S, value_for(S, n, la + idx.size()), BoundMethod::Roos});
                        }
            }
    return dedupe(std::move(out));
}

DefiningSetBound subcode_bound(const FieldCtx& f, std::uint32_t n, const ExpSet& P, std::uint64_t budget) {
    if (P.empty()) throw std::invalid_argument("subcode_bound: P must be nonempty");
    ExpSet cl = q_closure(normalize(P, n), f.q(), n);
    LinearCode c = cyclic_from_zeroset(f, n, cl);
    return {normalize(P, n), min_distance_exhaustive(c, budget), BoundMethod::Subcode};
}

std::vector<DefiningSetBound> subcode_bounds(const FieldCtx& f, std::uint32_t n, const ExpSet& zin, const EngineCaps& caps) {
    ExpSet z = normalize(zin, n);
    auto cf = factor_xn_minus_1(f, n);
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < cf.cosets.size(); ++i)
        if (is_subset(cf.cosets[i], z)) inside.push_back(i);
    std::vector<DefiningSetBound> out;
    if (inside.empty() || inside.size() > 16) return out;
    for (std::uint32_t mask = 1; mask < (1u << inside.size()); ++mask) {
        ExpSet P;
        std::size_t deg = 0;
        for (std::size_t b = 0; b < inside.size(); ++b)
            if (mask >> b & 1) {
                const auto& c = cf.cosets[inside[b]];
                P.insert(P.end(), c.begin(), c.end());
                deg += c.size();
            }
        if (message_count(f.q(), n - deg) > caps.subcode_budget) continue;
        out.push_back(subcode_bound(f, n, P, caps.subcode_budget));
    }
    return dedupe(std::move(out));
}

std::vector<DefiningSetBound> dedupe(std::vector<DefiningSetBound> v) {
    std::map<ExpSet, DefiningSetBound> best;
    for (auto& b : v) {
        auto it = best.find(b.L);
        if (it == best.end() || b.d > it->second.d) best[b.L] = b;
    }
    std::vector<DefiningSetBound> out;
    for (auto& [k, b] : best) out.push_back(b);
    return out;
}

}  // namespace qcspec
