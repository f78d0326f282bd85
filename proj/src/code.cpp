#include "qcspec/code.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace qcspec {

ExtDistance operator*(const ExtDistance& a, const ExtDistance& b) {
    DistFlag f = a.flag == b.flag ? a.flag : DistFlag::lower;
    if (a.is_inf() || b.is_inf()) return ExtDistance::inf(f);
    return ExtDistance::of(a.value * b.value, f);
}

ExtDistance dmin(const ExtDistance& a, const ExtDistance& b) { return a.value <= b.value ? a : b; }
ExtDistance dmax(const ExtDistance& a, const ExtDistance& b) { return a.value >= b.value ? a : b; }

std::vector<std::size_t> rref(const FieldCtx& f, Mat& m) {
    std::vector<std::size_t> piv;
    if (m.empty()) return piv;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Elem inv = f.inv(m[r][c]);
        if (inv != 1)
            for (auto& x : m[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Elem t = f.neg(m[i][c]);
            for (std::size_t k = c; k < cols; ++k)
                if (m[r][k]) m[i][k] = f.add(m[i][k], f.mul(t, m[r][k]));
        }
        piv.push_back(c);
        ++r;
    }
    m.resize(r);
    return piv;
}

std::size_t rank(const FieldCtx& f, Mat m) { return rref(f, m).size(); }

Mat null_space(const FieldCtx& f, const Mat& m, std::size_t cols) {
    Mat r = m;
    for (auto& row : r)
        if (row.size() != cols) throw std::invalid_argument("null_space: row length mismatch");
    auto piv = rref(f, r);
    std::vector<char> is_piv(cols, 0);
    for (auto c : piv) is_piv[c] = 1;
    Mat out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_piv[free]) continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r[i][free]);
        out.push_back(std::move(v));
    }
    return out;
}

LinearCode::LinearCode(const FieldCtx& f, std::size_t length, Mat gen) : ctx_(&f), len_(length), gen_(std::move(gen)) {
    for (const auto& row : gen_) {
        if (row.size() != len_) throw std::invalid_argument("LinearCode: generator row length mismatch");
        for (auto x : row)
            if (x >= f.q()) throw std::invalid_argument("LinearCode: entry outside the field");
    }
    piv_ = rref(f, gen_);
}

LinearCode LinearCode::full(const FieldCtx& f, std::size_t length) {
    Mat g(length, Vec(length, 0));
    for (std::size_t i = 0; i < length; ++i) g[i][i] = 1;
    return LinearCode(f, length, std::move(g));
}

LinearCode LinearCode::zero(const FieldCtx& f, std::size_t length) { return LinearCode(f, length, {}); }

LinearCode LinearCode::dual() const { return LinearCode(*ctx_, len_, null_space(*ctx_, gen_, len_)); }

bool LinearCode::contains(const Vec& v) const {
    if (v.size() != len_) return false;
    // reduce v against the RREF rows
    Vec r = v;
    for (std::size_t i = 0; i < gen_.size(); ++i) {
        Elem c = r[piv_[i]];
        if (!c) continue;
        Elem t = ctx_->neg(c);
        for (std::size_t k = 0; k < len_; ++k)
            if (gen_[i][k]) r[k] = ctx_->add(r[k], ctx_->mul(t, gen_[i][k]));
    }
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool LinearCode::contains(const LinearCode& other) const {
    return std::all_of(other.gen_.begin(), other.gen_.end(), [&](const Vec& v) { return contains(v); });
}

Vec LinearCode::encode(const Vec& msg) const {
    if (msg.size() != gen_.size()) throw std::invalid_argument("encode: message length mismatch");
    Vec out(len_, 0);
    for (std::size_t i = 0; i < msg.size(); ++i) {
        if (!msg[i]) continue;
        for (std::size_t k = 0; k < len_; ++k) out[k] = ctx_->add(out[k], ctx_->mul(msg[i], gen_[i][k]));
    }
    return out;
}

std::size_t weight(const Vec& v) {
    return std::size_t(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

std::uint64_t message_count(std::uint64_t q, std::size_t k) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (c > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        c *= q;
    }
    return c;
}

namespace {

// Additive generators of the code over the prime field: row i times x^t.
Mat additive_generators(const LinearCode& c) {
    const auto& F = c.field();
    Mat out;
    for (const auto& row : c.generator())
        for (std::uint32_t t = 0; t < F.m(); ++t) {
            Elem b = F.pow(F.m() == 1 ? 1 : F.generator(), t);
            Vec v(row.size());
            for (std::size_t k = 0; k < row.size(); ++k) v[k] = F.mul(b, row[k]);
            out.push_back(std::move(v));
        }
    return out;
}

// Walks the p-ary modular Gray code over D digits. Each step changes a
// single digit by +1, which adds one additive generator to the codeword.
template <typename Step>
void gray_walk(std::size_t digits, std::uint32_t p, Step&& step) {
    std::vector<std::uint32_t> b(digits, 0);
    while (true) {
        std::size_t j = 0;
        while (j < digits && b[j] == p - 1) b[j++] = 0;
        if (j == digits) return;
        ++b[j];
        if (!step(j)) return;
    }
}

ExtDistance exhaustive_binary_packed(const LinearCode& c, const Mat& gens) {
    // one 64-bit lane per bit of the symbol; position k is bit k of each lane
    const auto& F = c.field();
    std::size_t lanes = F.m();
    std::vector<std::uint64_t> g(gens.size() * lanes, 0);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < gens[i].size(); ++k)
            for (std::size_t t = 0; t < lanes; ++t)
                if ((gens[i][k] >> t) & 1u) g[i * lanes + t] |= std::uint64_t(1) << k;
    std::vector<std::uint64_t> cw(lanes, 0);
    std::uint64_t best = ExtDistance::kInf;
    gray_walk(gens.size(), 2, [&](std::size_t j) {
        std::uint64_t any = 0;
        for (std::size_t t = 0; t < lanes; ++t) {
            cw[t] ^= g[j * lanes + t];
            any |= cw[t];
        }
        std::uint64_t w = std::uint64_t(std::popcount(any));
        if (w && w < best) best = w;
        return best > 1;
    });
    return ExtDistance::of(best);
}

ExtDistance exhaustive_generic(const LinearCode& c, const Mat& gens) {
    const auto& F = c.field();
    std::size_t n = c.length();
    std::vector<Elem> table;
    bool use_table = F.q() <= 256 && !(F.p() == 2) && F.m() > 1;
    if (use_table) {
        table.resize(std::size_t(F.q()) * F.q());
        for (Elem a = 0; a < F.q(); ++a)
            for (Elem b = 0; b < F.q(); ++b) table[std::size_t(a) * F.q() + b] = F.add(a, b);
    }
    Vec cw(n, 0);
    std::size_t w = 0;
    std::uint64_t best = ExtDistance::kInf;
    const std::uint32_t p = F.p(), q = F.q();
    const bool prime = F.m() == 1, binary = p == 2;
    gray_walk(gens.size(), p, [&](std::size_t j) {
        const Vec& g = gens[j];
        for (std::size_t k = 0; k < n; ++k) {
            Elem d = g[k];
            if (!d) continue;
            Elem old = cw[k], nw;
            if (binary) nw = old ^ d;
            else if (prime) {
                nw = old + d;
                if (nw >= p) nw -= p;
            } else if (use_table) nw = table[std::size_t(old) * q + d];
            else nw = F.add(old, d);
            cw[k] = nw;
            w += (nw != 0) - (old != 0);
        }
        if (w && w < best) best = w;
        return best > 1;
    });
    return ExtDistance::of(best);
}

}  // namespace

ExtDistance min_distance_exhaustive(const LinearCode& c, std::uint64_t budget) {
    if (c.dim() == 0) return ExtDistance::inf();
    std::uint64_t msgs = message_count(c.field().q(), c.dim());
    if (msgs > budget)
        throw BudgetExceeded("min_distance_exhaustive: " + std::to_string(c.field().q()) + "^" +
                             std::to_string(c.dim()) + " messages exceed budget " + std::to_string(budget));
    Mat gens = additive_generators(c);
    if (c.field().p() == 2 && c.length() <= 64) return exhaustive_binary_packed(c, gens);
    return exhaustive_generic(c, gens);
}

namespace {

// Portable 64-bit mixer so results do not depend on the standard library.
struct SplitMix64 {
    std::uint64_t s;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace

HeuristicResult min_distance_heuristic_run(const LinearCode& c, std::uint64_t iterations, std::uint64_t seed,
                                           std::size_t w_max, std::uint64_t stop_at) {
    HeuristicResult res;
    res.distance = ExtDistance::inf(DistFlag::upper);
    if (c.dim() == 0) return res;
    const auto& F = c.field();
    std::size_t n = c.length(), k = c.dim();
    SplitMix64 rng{seed};
    std::vector<std::size_t> perm(n);
    std::uint64_t best = ExtDistance::kInf;
    Vec witness;

    auto consider = [&](const Vec& v, const std::vector<std::size_t>& order) {
        std::size_t w = weight(v);
        if (w && w < best) {
            best = w;
            witness.assign(n, 0);
            for (std::size_t i = 0; i < n; ++i) witness[order[i]] = v[i];
        }
    };

    for (std::uint64_t it = 0; it < iterations; ++it) {
        res.iterations = it + 1;
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        Mat g(k, Vec(n));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t i = 0; i < n; ++i) g[r][i] = c.generator()[r][perm[i]];
        rref(F, g);
        // single rows: all nonzero scalar multiples share a weight
        for (const auto& row : g) consider(row, perm);
        if (w_max >= 2) {
            Vec tmp(n);
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = a + 1; b < g.size(); ++b)
                    for (Elem s = 1; s < F.q(); ++s) {
                        for (std::size_t i = 0; i < n; ++i) tmp[i] = F.add(g[a][i], F.mul(s, g[b][i]));
                        consider(tmp, perm);
                    }
        }
        if (w_max >= 3) {
            Vec tmp(n);
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = a + 1; b < g.size(); ++b)
                    for (std::size_t e = b + 1; e < g.size(); ++e)
                        for (Elem s = 1; s < F.q(); ++s)
                            for (Elem t = 1; t < F.q(); ++t) {
                                for (std::size_t i = 0; i < n; ++i)
                                    tmp[i] = F.add(g[a][i], F.add(F.mul(s, g[b][i]), F.mul(t, g[e][i])));
                                consider(tmp, perm);
                            }
        }
        if (best <= std::max<std::uint64_t>(stop_at, 1)) break;
    }
    res.distance = ExtDistance::of(best, DistFlag::upper);
    res.witness = witness;
    return res;
}

ExtDistance min_distance_heuristic(const LinearCode& c, std::uint64_t iterations, std::uint64_t seed, std::size_t w_max) {
    return min_distance_heuristic_run(c, iterations, seed, w_max).distance;
}

ExtDistance min_distance(const LinearCode& c, std::uint64_t budget, std::uint64_t heuristic_iterations, std::uint64_t seed) {
    if (message_count(c.field().q(), c.dim()) <= budget) return min_distance_exhaustive(c, budget);
    return min_distance_heuristic(c, heuristic_iterations, seed);
}

LinearCode sum(const LinearCode& a, const LinearCode& b) {
    if (&a.field() != &b.field() || a.length() != b.length())
        throw std::invalid_argument("sum: codes differ in field or length");
    Mat g = a.generator();
    g.insert(g.end(), b.generator().begin(), b.generator().end());
    return LinearCode(a.field(), a.length(), std::move(g));
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
    if (&a.field() != &b.field() || a.length() != b.length())
        throw std::invalid_argument("intersect: codes differ in field or length");
    return sum(a.dual(), b.dual()).dual();
}

LinearCode restrict(const LinearCode& c, const std::vector<std::size_t>& positions) {
    for (auto p : positions)
        if (p >= c.length()) throw std::out_of_range("restrict: position out of range");
    Mat g;
    for (const auto& row : c.generator()) {
        Vec v;
        v.reserve(positions.size());
        for (auto p : positions) v.push_back(row[p]);
        g.push_back(std::move(v));
    }
    return LinearCode(c.field(), positions.size(), std::move(g));
}

std::uint64_t griesmer(std::uint64_t k, std::uint64_t d, std::uint64_t q) {
    std::uint64_t total = 0, pw = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        total += (d + pw - 1) / pw;
        if (pw > d) {
            total += k - i - 1;  // every remaining term is 1
            break;
        }
        pw *= q;
    }
    return total;
}

}  // namespace qcspec
