#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcspec {

// Element of a finite field, stored as the index sum(a_i * p^i) of its
// coefficient vector over the prime field.
using Elem = std::uint32_t;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class FieldCtx {
public:
    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    // Monic modulus, constant term first; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem generator() const { return gen_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    // Discrete logarithm to base generator(); a must be nonzero.
    std::uint64_t log(Elem a) const;
    Elem exp(std::uint64_t e) const;
    std::uint64_t order(Elem a) const;

    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<std::uint32_t>& c) const;

    std::string name() const;

    FieldCtx(std::uint32_t p, std::uint32_t m);
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

private:
    Elem mul_slow(Elem a, Elem b) const;

    std::uint32_t p_, m_, q_;
    std::vector<std::uint32_t> modulus_;
    Elem gen_ = 1;
    std::vector<std::uint64_t> order_primes_;  // prime divisors of q-1
    bool tables_ = false;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;  // length 2(q-1)
};

// Same (p, m) always yields the same context object for the life of the process.
const FieldCtx& make_field(std::uint32_t p, std::uint32_t m = 1);

// Resolve a field order q = p^m given as a prime power.
const FieldCtx& make_field_q(std::uint32_t q);

const FieldCtx& nth_root_field(const FieldCtx& base, std::uint32_t n);

Elem nth_root_of_unity(const FieldCtx& f, std::uint64_t n);

// Smallest r >= 1 with q^r = 1 mod n.
std::uint32_t multiplicative_order(std::uint64_t q, std::uint64_t n);

bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

// Field homomorphism GF(p^a) -> GF(p^b), a | b.
class Embedding {
public:
    Embedding(const FieldCtx& src, const FieldCtx& dst);

    const FieldCtx& src() const { return *src_; }
    const FieldCtx& dst() const { return *dst_; }
    Elem image_of_generator() const { return img_; }

    Elem operator()(Elem x) const;
    // Inverse on the image; throws if y is not in the image.
    Elem preimage(Elem y) const;
    bool in_image(Elem y) const;

private:
    const FieldCtx* src_;
    const FieldCtx* dst_;
    Elem img_;
    std::uint64_t stride_;  // (q_b - 1) / (q_a - 1)
    std::uint64_t root_exp_;  // img_ = g_dst^(stride_ * root_exp_)
    std::vector<Elem> table_;
};

Embedding embed(const FieldCtx& src, const FieldCtx& dst);

// Trace from el's field down to sub, returned as an element of sub.
Elem trace(const FieldCtx& big, Elem el, const FieldCtx& sub);

}  // namespace qcspec
