#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcspec/code.hpp"
#include "qcspec/poly.hpp"

namespace qcspec {

// Sorted set of exponents i, standing for alpha^i with alpha a primitive n-th root of unity.
using ExpSet = std::vector<std::uint32_t>;

ExpSet normalize(ExpSet s, std::uint32_t n);
ExpSet q_closure(const ExpSet& s, std::uint64_t q, std::uint32_t n);
bool is_q_closed(const ExpSet& s, std::uint64_t q, std::uint32_t n);
bool is_subset(const ExpSet& a, const ExpSet& b);
ExpSet full_set(std::uint32_t n);

enum class BoundMethod { BCH, HT, Roos, Subcode };
std::string method_name(BoundMethod m);

struct DefiningSetBound {
    ExpSet L;
    ExtDistance d;
    BoundMethod method = BoundMethod::BCH;
};

Poly cyclic_generator_poly(const CosetFactorization& cf, const ExpSet& z);
LinearCode cyclic_from_generator(const Poly& g, std::uint32_t n);
// Cyclic code whose check polynomial is h, i.e. generated by (x^n - 1) / h.
LinearCode cyclic_from_check(const Poly& h, std::uint32_t n);
LinearCode cyclic_from_zeroset(const FieldCtx& f, std::uint32_t n, const ExpSet& z);

struct EngineCaps {
    std::uint32_t roos_window = 12;
    std::uint32_t ht_s_max = 0;  // 0 means n
    std::uint64_t subcode_budget = 1000000;
};

// Every consecutive subset of z (stride coprime to n), valued |L|+1; a run
// through all n exponents is valued infinity.
std::vector<DefiningSetBound> bch_bound(const ExpSet& z, std::uint32_t n);
std::vector<DefiningSetBound> ht_bound(const ExpSet& z, std::uint32_t n, const EngineCaps& caps = {});
std::vector<DefiningSetBound> roos_bound(const ExpSet& z, std::uint32_t n, const EngineCaps& caps = {});
// Exact distance of the cyclic code over F_q with zero set q-closure(P).
DefiningSetBound subcode_bound(const FieldCtx& f, std::uint32_t n, const ExpSet& P,
                               std::uint64_t budget = kDefaultBudget);
// Subcode bounds for every nonempty union of cyclotomic cosets inside z.
std::vector<DefiningSetBound> subcode_bounds(const FieldCtx& f, std::uint32_t n, const ExpSet& z,
                                             const EngineCaps& caps = {});

// Keep the largest value per exponent set; output sorted by set.
std::vector<DefiningSetBound> dedupe(std::vector<DefiningSetBound> v);

}  // namespace qcspec
