#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "qcspec/cyclic.hpp"
#include "qcspec/qc.hpp"

namespace qcspec {

enum class BoundKind { Jensen, Spectral, ImprovedSpectral };
std::string kind_name(BoundKind k);

struct EngineSet {
    bool bch = true, ht = true, roos = true, subcode = true;
    EngineCaps caps;
};

// Parse "bch,ht,roos,subcode"; throws on unknown names.
EngineSet parse_engines(const std::string& list);

struct BoundCertificate {
    BoundKind kind = BoundKind::Jensen;
    ExtDistance value;

    // spectral witnesses, picks in the order used
    std::vector<DefiningSetBound> picks;
    std::vector<std::size_t> intersection_dim;   // dim of C_1 cap ... cap C_j
    std::vector<ExtDistance> intersection_d;

    // Jensen witnesses, constituents in the order used
    std::vector<std::size_t> constituent_order;  // factor indices
    std::vector<ExtDistance> constituent_d;
    std::vector<ExtDistance> partial_sum_d;

    nlohmann::json to_json() const;
};

// Defining-set bounds for the cyclic code with zero set E(c), deduplicated.
std::vector<DefiningSetBound> candidate_pool(const QcCode& c, const EngineSet& engines = {});

// Nonzero constituents sorted by distance; ties by factor index, or the
// reverse when reverse_ties is set.
BoundCertificate jensen_bound(const QcCode& c, bool reverse_ties = false,
                              std::uint64_t budget = kDefaultBudget);

BoundCertificate improved_spectral(const QcCode& c, std::vector<DefiningSetBound> picks);

// Best value over tuples of at most s distinct picks from the candidate pool.
BoundCertificate optimize_spectral(const QcCode& c, std::size_t s, const EngineSet& engines = {});
BoundCertificate prior_spectral(const QcCode& c, const EngineSet& engines = {});

// Order used inside a tuple: larger d_L first, then smaller |L|, then lexicographic.
bool pick_before(const DefiningSetBound& a, const DefiningSetBound& b);

}  // namespace qcspec
