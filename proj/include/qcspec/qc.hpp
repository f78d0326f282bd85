#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "json.hpp"
#include "qcspec/code.hpp"
#include "qcspec/cyclic.hpp"
#include "qcspec/poly.hpp"

namespace qcspec {

struct EigenData {
    std::uint32_t exponent = 0;     // eigenvalue alpha^exponent
    std::size_t multiplicity = 0;   // root multiplicity in det of the Lally form
    Mat basis;                      // eigenspace rows over the splitting field
    LinearCode eigencode;           // length ell over the base field
};

struct CommonEigen {
    Mat basis;
    LinearCode eigencode;
};

struct Constituent {
    std::size_t factor = 0;         // index into the factorization of x^n - 1
    std::uint32_t v = 0;            // coset representative
    Poly check;                     // the irreducible factor f_i
    const FieldCtx* field = nullptr;  // GF(q^deg f_i)
    LinearCode code;                // length ell over field
};

// Quasi-cyclic code of co-index n and index ell. Codeword array position
// (i, j), i < n, j < ell, sits at flat coordinate i * ell + j, so column j
// holds the coefficients of the component polynomial c_j(x).
class QcCode {
public:
    // Components are reduced modulo x^n - 1; each generator must have ell components.
    QcCode(const FieldCtx& f, std::uint32_t n, std::size_t ell, std::vector<PolyVec> generators);

    const FieldCtx& field() const { return *f_; }
    std::uint32_t n() const { return n_; }
    std::size_t ell() const { return ell_; }
    std::size_t length() const { return ell_ * n_; }
    std::size_t dim() const { return scalar_.dim(); }
    const std::vector<PolyVec>& generators() const { return gens_; }
    const PolyMatrix& lally() const { return lally_; }
    const LinearCode& scalar() const { return scalar_; }
    const CosetFactorization& factorization() const { return *cf_; }
    const FieldCtx& ext() const { return *cf_->ext; }
    const Embedding& to_ext() const { return *emb_; }

    // Lally form evaluated at alpha^e over the splitting field.
    Mat lally_at(std::uint32_t e) const;

    // Exponents of the eigenvalues, ascending.
    ExpSet eigenvalues() const;
    const std::vector<EigenData>& eigen() const;
    const std::vector<Constituent>& constituents() const;

private:
    struct Cache;

    const FieldCtx* f_;
    std::uint32_t n_;
    std::size_t ell_;
    std::vector<PolyVec> gens_;
    PolyMatrix lally_;
    LinearCode scalar_;
    std::shared_ptr<const CosetFactorization> cf_;
    std::shared_ptr<const Embedding> emb_;
    std::shared_ptr<Cache> cache_;
};

// Base-field vectors orthogonal to every row of basis (rows over the splitting field).
LinearCode eigencode_of(const QcCode& c, const Mat& basis);

// Intersection of the eigenspaces over L and its eigencode; L must lie in the eigenvalues.
CommonEigen common_eigenspace(const QcCode& c, const ExpSet& L);

// Rows (alpha^{e*0} v, ..., alpha^{e*(n-1)} v) for each eigenvalue alpha^e and
// eigenspace row v. Column order equals the flat codeword layout.
Mat spectral_parity_check(const QcCode& c);

// Flat code rebuilt from the constituents through the idempotent maps.
LinearCode concat_reconstruct(const QcCode& c);

// Flat generator rows (F_q-basis) of <theta_i> box C_i, where C_i is a code of
// length ell over GF(q^deg f_i) and symbols map to length-n words by the
// idempotent map of factor i.
Mat concat_rows(const FieldCtx& f, const CosetFactorization& cf, std::size_t ell, std::size_t factor,
                const LinearCode& ci);

// Read flat codewords back as polynomial generator vectors.
std::vector<PolyVec> flat_to_generators(const FieldCtx& f, std::uint32_t n, std::size_t ell, const Mat& rows);

// Cyclic code of length n over the base field whose nonzeros are the cosets
// of the chosen factors: the direct sum of their minimal ideals.
LinearCode minimal_ideal_sum(const QcCode& c, const std::vector<std::size_t>& factors);

nlohmann::json qc_to_json(const QcCode& c);
QcCode qc_from_json(const nlohmann::json& j);
const FieldCtx& field_from_json(const nlohmann::json& q);
nlohmann::json field_to_json(const FieldCtx& f);

}  // namespace qcspec
