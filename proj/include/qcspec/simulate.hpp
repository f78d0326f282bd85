#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcspec/bounds.hpp"

namespace qcspec {

// SplitMix64 generator; one stream per (seed, tuple, trial).
class SplitMix64 {
public:
    using result_type = std::uint64_t;
    explicit SplitMix64(std::uint64_t state) : s_(state) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type(0); }
    result_type operator()();
    // Uniform value in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t s_;
};

SplitMix64 sim_stream(std::uint64_t seed, std::uint64_t tuple, std::uint64_t trial);

// r generators of ell uniformly random components with n coefficients each.
std::vector<PolyVec> random_generators(const FieldCtx& f, std::uint32_t n, std::size_t ell, std::size_t r,
                                       SplitMix64& rng);

struct SimConfig {
    std::uint32_t q = 2;
    std::uint32_t n = 3;
    std::size_t ell_min = 2, ell_max = 4;
    std::size_t r_min = 1, r_max = 0;  // r_max 0 means ell
    std::uint64_t trials = 10;
    std::uint64_t seed = 1;
    std::vector<std::size_t> s_values = {2, 3};
    EngineSet engines;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;

    void validate() const;
};

// One tuple (ell, r) of the ensemble; tuples are numbered in this order.
struct SimTuple {
    std::size_t ell, r;
};
std::vector<SimTuple> sim_tuples(const SimConfig& cfg);

struct SimRow {
    std::uint64_t tuple = 0, trial = 0;
    std::size_t ell = 0, r = 0, k = 0;
    ExtDistance d;
    std::vector<ExtDistance> d_spec;  // one per configured s
    ExtDistance d_j, d_s;
};

struct BoundTally {
    std::string name;
    std::uint64_t sharp = 0, best = 0;
};

struct SimReport {
    SimConfig config;
    std::vector<SimRow> rows;      // nontrivial codes in (tuple, trial) order
    std::uint64_t trivial = 0;     // codes with k = 0 or k = ell n
    std::vector<BoundTally> tally; // d_Spec per s, then d_J, then d_S
    std::uint64_t violations = 0;  // bounds exceeding the exact distance

    std::string csv() const;
    nlohmann::json to_json() const;
};

// Random codes for every tuple and trial, evaluated with all bounds. The
// result does not depend on the number of threads.
SimReport run_simulation(const SimConfig& cfg);

// Code drawn for a given tuple and trial.
QcCode sim_code(const SimConfig& cfg, std::uint64_t tuple, std::uint64_t trial);

}  // namespace qcspec
