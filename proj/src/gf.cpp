#include "qcspec/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <cmath>

namespace qcspec {

namespace {

constexpr std::uint64_t kFieldCap = 1ull << 31;
constexpr std::uint32_t kTableCap = 1u << 16;

using Coeffs = std::vector<std::uint32_t>;

// (a * b) mod f over GF(p); a, b have length m; f monic of degree m.
Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
    std::size_t m = f.size() - 1;
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
        std::uint64_t c = prod[d] % p;
        if (!c) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < m; ++i) {
            // subtract c * f_i * x^(d-m+i)
            std::uint64_t t = (c * f[i]) % p;
            prod[d - m + i] = (prod[d - m + i] + p - t) % p;
        }
    }
    Coeffs r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = std::uint32_t(prod[i] % p);
    return r;
}

Coeffs powmod_x(std::uint64_t e, const Coeffs& f, std::uint32_t p) {
    std::size_t m = f.size() - 1;
    Coeffs result(m, 0), base(m, 0);
    result[0] = 1;
    if (m == 1) base[0] = (p - f[0]) % p;
    else base[1] = 1;
    while (e) {
        if (e & 1) result = mulmod(result, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

bool is_one(const Coeffs& c) {
    if (c.empty() || c[0] != 1) return false;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i]) return false;
    return true;
}

std::uint64_t powmod_u(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d) continue;
        out.push_back(d);
        while (v % d == 0) v /= d;
    }
    if (v > 1) out.push_back(v);
    return out;
}

std::uint32_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 0 || std::gcd(q, n) != 1) throw FieldError("multiplicative_order: q and n not coprime");
    if (n == 1) return 1;
    std::uint64_t x = q % n;
    std::uint32_t r = 1;
    while (x != 1) {
        x = x * (q % n) % n;
        ++r;
    }
    return r;
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    if (!is_prime(p)) throw FieldError("make_field: characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw FieldError("make_field: degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kFieldCap) throw FieldError("make_field: field order exceeds 2^31");
    }
    q_ = std::uint32_t(q);
    order_primes_ = prime_factors(q - 1);

    if (m == 1) {
        // smallest primitive root
        for (std::uint32_t g = 1; g < p; ++g) {
            bool ok = true;
            for (auto r : order_primes_)
                if (powmod_u(g, (q - 1) / r, p) == 1) { ok = false; break; }
            if (ok) { gen_ = g; break; }
        }
    } else {
        // Walk candidates a_0..a_{m-1} with a_0 most significant.
        std::uint64_t total = q;
        bool found = false;
        for (std::uint64_t t = 0; t < total && !found; ++t) {
            Coeffs f(m + 1, 0);
            std::uint64_t v = t;
            for (std::uint32_t i = m; i-- > 0;) {
                f[i] = std::uint32_t(v % p);
                v /= p;
            }
            f[m] = 1;
            if (f[0] == 0) continue;
            if (!is_one(powmod_x(q - 1, f, p))) continue;
            bool prim = true;
            for (auto r : order_primes_)
                if (is_one(powmod_x((q - 1) / r, f, p))) { prim = false; break; }
            if (prim) {
                modulus_ = f;
                found = true;
            }
        }
        if (!found) throw FieldError("make_field: no primitive polynomial found");
        gen_ = p;  // class of x
    }

    if (q_ <= kTableCap) {
        tables_ = true;
        log_.assign(q_, 0);
        exp_.assign(2 * std::size_t(q_ - 1) + 1, 0);
        Elem cur = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = mul_slow(cur, gen_);
        }
        for (std::uint32_t i = q_ - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (q_ - 1)];
    }
}

std::vector<std::uint32_t> FieldCtx::coeffs(Elem a) const {
    std::vector<std::uint32_t> c(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem FieldCtx::from_coeffs(const std::vector<std::uint32_t>& c) const {
    Elem v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i] % p_;
    return v;
}

Elem FieldCtx::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Elem(r);
}

Elem FieldCtx::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem r = 0, place = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        Elem d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        r += d * place;
        place *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem FieldCtx::neg(Elem a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a ? p_ - a : 0;
    Elem r = 0, place = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        Elem d = a % p_;
        r += (d ? p_ - d : 0) * place;
        place *= p_;
        a /= p_;
    }
    return r;
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul_slow(Elem a, Elem b) const {
    if (m_ == 1) return Elem(std::uint64_t(a) * b % p_);
    return from_coeffs(mulmod(coeffs(a), coeffs(b), modulus_, p_));
}

Elem FieldCtx::mul(Elem a, Elem b) const {
    if (!a || !b) return 0;
    if (tables_) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (!a) return 0;
    if (tables_) return exp_[std::uint64_t(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
    Elem r = 1, b = a;
    e %= (q_ - 1);
    while (e) {
        if (e & 1) r = mul_slow(r, b);
        b = mul_slow(b, b);
        e >>= 1;
    }
    return r;
}

Elem FieldCtx::inv(Elem a) const {
    if (!a) throw FieldError("inverse of zero");
    if (tables_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

Elem FieldCtx::exp(std::uint64_t e) const { return pow(gen_, e); }

std::uint64_t FieldCtx::log(Elem a) const {
    if (!a) throw FieldError("log of zero");
    if (tables_) return log_[a];
    // baby-step giant-step
    std::uint64_t n = q_ - 1;
    std::uint64_t s = std::uint64_t(std::ceil(std::sqrt(double(n))));
    std::unordered_map<Elem, std::uint64_t> baby;
    baby.reserve(s * 2);
    Elem cur = 1;
    for (std::uint64_t j = 0; j < s; ++j) {
        baby.emplace(cur, j);
        cur = mul_slow(cur, gen_);
    }
    Elem giant = inv(pow(gen_, s));
    Elem y = a;
    for (std::uint64_t i = 0; i <= s; ++i) {
        auto it = baby.find(y);
        if (it != baby.end()) return (i * s + it->second) % n;
        y = mul_slow(y, giant);
    }
    throw FieldError("log: element not in multiplicative group");
}

std::uint64_t FieldCtx::order(Elem a) const {
    if (!a) throw FieldError("order of zero");
    std::uint64_t o = q_ - 1;
    for (auto r : order_primes_)
        while (o % r == 0 && pow(a, o / r) == 1) o /= r;
    return o;
}

std::string FieldCtx::name() const {
    if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

const FieldCtx& make_field(std::uint32_t p, std::uint32_t m) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldCtx>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, m);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    auto ctx = std::make_unique<FieldCtx>(p, m);
    auto& ref = *ctx;
    registry.emplace(key, std::move(ctx));
    return ref;
}

const FieldCtx& make_field_q(std::uint32_t q) {
    if (q < 2) throw FieldError("field order must be >= 2");
    auto ps = prime_factors(q);
    if (ps.size() != 1) throw FieldError("field order " + std::to_string(q) + " is not a prime power");
    std::uint32_t m = 0;
    for (std::uint64_t v = q; v > 1; v /= ps[0]) ++m;
    return make_field(std::uint32_t(ps[0]), m);
}

const FieldCtx& nth_root_field(const FieldCtx& base, std::uint32_t n) {
    std::uint32_t r = multiplicative_order(base.q(), n);
    return make_field(base.p(), base.m() * r);
}

Elem nth_root_of_unity(const FieldCtx& f, std::uint64_t n) {
    std::uint64_t ord = f.q() - 1;
    if (n == 0 || ord % n) throw FieldError("nth_root_of_unity: n does not divide q-1 in " + f.name());
    return f.exp(ord / n);
}

Embedding::Embedding(const FieldCtx& src, const FieldCtx& dst) : src_(&src), dst_(&dst) {
    if (src.p() != dst.p()) throw FieldError("embed: characteristic mismatch");
    if (dst.m() % src.m()) throw FieldError("embed: " + src.name() + " is not a subfield of " + dst.name());
    std::uint64_t qa = src.q(), qb = dst.q();
    stride_ = (qb - 1) / (qa - 1);

    // The image of the source generator must be a root of its minimal
    // polynomial. Prefer g_dst^stride; otherwise take the smallest power
    // g_dst^(stride * t) that is a root.
    auto root_of_src_minpoly = [&](Elem cand) {
        if (src.m() == 1) return cand == src.generator();
        const auto& f = src.modulus();
        Elem acc = 0, pw = 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            acc = dst.add(acc, dst.mul(Elem(f[i]), pw));
            pw = dst.mul(pw, cand);
        }
        return acc == 0;
    };
    bool found = false;
    for (std::uint64_t t = 1; t < qa; ++t) {
        if (std::gcd(t, qa - 1) != 1) continue;
        Elem cand = dst.exp(stride_ * t);
        if (root_of_src_minpoly(cand)) {
            img_ = cand;
            root_exp_ = t;
            found = true;
            break;
        }
    }
    if (!found) throw FieldError("embed: no root of the source modulus in target");

    if (src.q() <= kTableCap) {
        table_.resize(src.q());
        for (Elem x = 0; x < src.q(); ++x) table_[x] = x ? dst.exp(src.log(x) * stride_ * root_exp_) : 0;
    }
}

Elem Embedding::operator()(Elem x) const {
    if (!table_.empty()) return table_[x];
    if (!x) return 0;
    return dst_->exp(src_->log(x) * stride_ % (dst_->q() - 1) * root_exp_);
}

bool Embedding::in_image(Elem y) const {
    if (!y) return true;
    return dst_->log(y) % stride_ == 0;
}

Elem Embedding::preimage(Elem y) const {
    if (!y) return 0;
    std::uint64_t k = dst_->log(y);
    if (k % stride_) throw FieldError("embed: element not in the image of " + src_->name());
    std::uint64_t na = src_->q() - 1;
    // root_exp_ is a unit mod na; invert it
    long long a = (long long)(root_exp_ % na), b = (long long)na, x0 = 1, x1 = 0;
    while (b) {
        long long qt = a / b;
        long long t = a - qt * b;
        a = b;
        b = t;
        t = x0 - qt * x1;
        x0 = x1;
        x1 = t;
    }
    long long r = x0 % (long long)na;
    if (r < 0) r += (long long)na;
    std::uint64_t tinv = std::uint64_t(r);
    return src_->exp((k / stride_) % na * tinv % na);
}

Embedding embed(const FieldCtx& src, const FieldCtx& dst) { return Embedding(src, dst); }

Elem trace(const FieldCtx& big, Elem el, const FieldCtx& sub) {
    Embedding e(sub, big);
    std::uint32_t deg = big.m() / sub.m();
    Elem acc = 0, x = el;
    for (std::uint32_t i = 0; i < deg; ++i) {
        acc = big.add(acc, x);
        x = big.pow(x, sub.q());
    }
    return e.preimage(acc);
}

}  // namespace qcspec
