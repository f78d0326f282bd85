#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcspec/gf.hpp"

namespace qcspec {

using Vec = std::vector<Elem>;
using Mat = std::vector<Vec>;

enum class DistFlag { exact, lower, upper };

// Minimum distance that may be infinite (the zero code).
struct ExtDistance {
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t value = kInf;
    DistFlag flag = DistFlag::exact;

    static ExtDistance inf(DistFlag f = DistFlag::exact) { return {kInf, f}; }
    static ExtDistance of(std::uint64_t v, DistFlag f = DistFlag::exact) { return {v, f}; }

    bool is_inf() const { return value == kInf; }
    std::string str() const { return is_inf() ? "inf" : std::to_string(value); }

    friend bool operator==(const ExtDistance& a, const ExtDistance& b) { return a.value == b.value; }
    friend bool operator!=(const ExtDistance& a, const ExtDistance& b) { return a.value != b.value; }
    friend bool operator<(const ExtDistance& a, const ExtDistance& b) { return a.value < b.value; }
    friend bool operator<=(const ExtDistance& a, const ExtDistance& b) { return a.value <= b.value; }
    friend bool operator>(const ExtDistance& a, const ExtDistance& b) { return a.value > b.value; }
    friend bool operator>=(const ExtDistance& a, const ExtDistance& b) { return a.value >= b.value; }
};

// INF * x = INF for x >= 1.
ExtDistance operator*(const ExtDistance& a, const ExtDistance& b);
ExtDistance dmin(const ExtDistance& a, const ExtDistance& b);
ExtDistance dmax(const ExtDistance& a, const ExtDistance& b);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Row reduction in place; zero rows are dropped. Returns pivot columns.
std::vector<std::size_t> rref(const FieldCtx& f, Mat& m);
std::size_t rank(const FieldCtx& f, Mat m);
// Basis of {x : m x^T = 0} for vectors of the given length.
Mat null_space(const FieldCtx& f, const Mat& m, std::size_t cols);

class LinearCode {
public:
    LinearCode(const FieldCtx& f, std::size_t length, Mat gen);

    static LinearCode full(const FieldCtx& f, std::size_t length);
    static LinearCode zero(const FieldCtx& f, std::size_t length);

    const FieldCtx& field() const { return *ctx_; }
    std::size_t length() const { return len_; }
    std::size_t dim() const { return gen_.size(); }
    const Mat& generator() const { return gen_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    LinearCode dual() const;
    bool contains(const Vec& v) const;
    bool contains(const LinearCode& other) const;
    Vec encode(const Vec& msg) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.ctx_ == b.ctx_ && a.len_ == b.len_ && a.gen_ == b.gen_;
    }

private:
    const FieldCtx* ctx_;
    std::size_t len_;
    Mat gen_;
    std::vector<std::size_t> piv_;
};

std::size_t weight(const Vec& v);

constexpr std::uint64_t kDefaultBudget = 20000000;

// Exact minimum distance by Gray-code enumeration of all messages.
ExtDistance min_distance_exhaustive(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

struct HeuristicResult {
    ExtDistance distance;
    std::uint64_t iterations = 0;  // iterations actually run
    Vec witness;
};

// Randomized information-set search; the result is an upper bound.
// Stops early once a codeword of weight <= stop_at is seen.
HeuristicResult min_distance_heuristic_run(const LinearCode& c, std::uint64_t iterations, std::uint64_t seed,
                                           std::size_t w_max = 2, std::uint64_t stop_at = 0);
ExtDistance min_distance_heuristic(const LinearCode& c, std::uint64_t iterations, std::uint64_t seed,
                                   std::size_t w_max = 2);

// Exhaustive when q^k fits the budget, otherwise heuristic.
ExtDistance min_distance(const LinearCode& c, std::uint64_t budget = kDefaultBudget,
                         std::uint64_t heuristic_iterations = 2000, std::uint64_t seed = 1);

LinearCode sum(const LinearCode& a, const LinearCode& b);
LinearCode intersect(const LinearCode& a, const LinearCode& b);
LinearCode restrict(const LinearCode& c, const std::vector<std::size_t>& positions);

// Griesmer length sum_{i<k} ceil(d / q^i); zero for k = 0.
std::uint64_t griesmer(std::uint64_t k, std::uint64_t d, std::uint64_t q);

// Number of messages q^k, saturating at UINT64_MAX.
std::uint64_t message_count(std::uint64_t q, std::size_t k);

}  // namespace qcspec
