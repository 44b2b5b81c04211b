#pragma once

#include "salemhk/bigfloat.hpp"
#include "salemhk/salem.hpp"
#include "salemhk/transfer.hpp"

#include <cstdint>
#include <vector>

namespace salemhk {

using ComplexVector = std::vector<BigComplex>;

// Residuals are relative: |(w,w)| / (|w|^T |G| |w|), and likewise for the
// pairings against the T^{1,1} basis.
struct PeriodResiduals {
    double isotropy = 0;      // (w, w)
    double pairing = 0;       // (w, conj w), must be > 0 (absolute value)
    double t11 = 0;           // max over the T^{1,1} basis
    double eigen = 0;         // |M w - s w| / |s w| for the generator
};

struct PeriodData {
    ComplexVector omega;
    int embedding_index = 0;       // which interior root / real root was used
    BigComplex eigenvalue;         // sigma(x)
    int family_dimension = 0;      // free complex parameters of the sampler
    mpfr_prec_t precision = 53;
    PeriodResiduals residuals;
};

// Eigenvector of the companion matrix of S for a unit-circle root z in the
// positive complex place of alpha. Throws SignatureMismatch unless the
// transfer of <alpha> has signature (3, 2d-3).
PeriodData period_from_salem(const SalemPolynomial& S, const FieldElement& alpha, mpfr_prec_t bits = 53);

// A seeded point of the period domain inside the sigma-eigenspace of the
// transfer of W. Needs W to have 2 or 3 positive entries at sigma.
PeriodData period_from_rm(const DiagonalFormOverField& W, int sigma_index, std::uint64_t seed,
                          mpfr_prec_t bits = 53);

struct PeriodReport {
    PeriodResiduals residuals;
    bool isotropic = false;
    bool positive = false;
    bool orthogonal = false;
    bool all() const { return isotropic && positive && orthogonal; }
};

PeriodReport verify_period(const PeriodData& P, const RatMatrix& gram, double tol);

// Numeric basis of the orthogonal complement of span(w, conj w).
std::vector<ComplexVector> t11_basis(const PeriodData& P, const RatMatrix& gram);

RatMatrix companion_matrix(const IntPoly& f);
bool is_isometry(const RatMatrix& m, const RatMatrix& gram);
// M^T G M = G for the companion matrix of S and the transfer Gram of <alpha>.
bool companion_isometry_check(const SalemPolynomial& S, const FieldElement& alpha);

} // namespace salemhk
