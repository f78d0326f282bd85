#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "qcspec/qc.hpp"

namespace qcspec {

// Largest dimension of an [n, k, >= delta]_q code.
struct KappaResult {
    std::uint64_t value = 0;
    bool exact = false;  // false: Griesmer-feasibility upper value without a witness
};
KappaResult kappa_for(std::uint32_t q, std::uint32_t n, std::uint64_t delta);

struct LocalityProfile {
    std::uint64_t rho = 1;
    ExtDistance delta;                 // distance of the local code; inf for the zero code
    std::vector<std::size_t> factors;  // factors with a nonzero constituent
    LinearCode local;                  // cyclic code of length n
    KappaResult kappa;

    nlohmann::json to_json() const;
};

// Every column block (positions i * ell + j for fixed j) restricts into the
// local code; a logic_error reports a violated containment.
LocalityProfile qc_locality(const QcCode& c, std::uint64_t budget = kDefaultBudget);

// Singleton-type bound m - k + 1 - (ceil(k/rho) - 1)(delta - 1).
std::int64_t lrc_bound_1(std::uint64_t m, std::uint64_t k, std::uint64_t rho, std::uint64_t delta);
// m - ceil(k/kappa) G(kappa, delta) + G(ceil(k/kappa) kappa - k + 1, delta).
std::int64_t lrc_bound_2(std::uint64_t m, std::uint64_t k, std::uint64_t delta, std::uint64_t kappa, std::uint64_t q);

// Largest k with G(k, d) <= length; an upper value for the optimal dimension.
std::uint64_t kopt_upper(std::int64_t length, std::uint64_t d, std::uint64_t q);

struct DimensionBound {
    std::uint64_t value = 0;
    std::uint64_t z = 0;      // minimizing z = x kappa + y
    bool approximate = true;  // the optimal dimension is replaced by kopt_upper
};
// min over z of z + k_opt(m - (x + 1) G(kappa, delta) + G(kappa - y, delta), d).
DimensionBound lrc_bound_3(std::uint64_t m, std::uint64_t d, std::uint64_t delta, std::uint64_t kappa, std::uint64_t q);

}  // namespace qcspec
