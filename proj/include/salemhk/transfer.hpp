#pragma once

#include "salemhk/numfield.hpp"
#include "salemhk/qforms.hpp"
#include "salemhk/salem.hpp"

#include <optional>
#include <vector>

namespace salemhk {

// <alpha_1, ..., alpha_m> over a number field.
struct DiagonalFormOverField {
    FieldPtr field;
    std::vector<FieldElement> entries;
};

struct TransferResult {
    RatMatrix gram;
    QuadraticFormQ form;
    std::optional<Signature> closed_form;
};

// Tr_{E/Q}(alpha_i x y) summed over the entries; the Gram is block diagonal
// on the power bases.
TransferResult transfer_quadratic(const DiagonalFormOverField& W);
// Tr_{E/Q}(alpha_i x inv(y)); every entry must be fixed by inv.
TransferResult transfer_hermitian(const DiagonalFormOverField& W, const Involution& inv);
TransferResult transfer_hermitian_rank1(const SalemPolynomial& S, const FieldElement& alpha);

enum class FieldKind { RM, CM, SM };

// Signature of T<a> from the signs of a. RM: signs at every real
// embedding. CM: signs at every embedding of the totally real subfield.
// SM: signs at the embeddings of E0 that extend to complex places of E.
Signature closed_form_signature(FieldKind kind, const std::vector<int>& signs);

// Signature of the transfer of <alpha> under inv, read off from the
// place structure of the fixed field. Complex places of E0 contribute
// (2,2), real places of E0 that split in E contribute (1,1), and real
// places that become complex contribute (2,0) or (0,2) by the sign of alpha.
Signature hermitian_closed_form(const FieldElement& alpha, const Involution& inv);
// Same for the identity involution: (1,1) per complex place, and the
// sign of alpha at each real place.
Signature quadratic_closed_form(const FieldElement& alpha);

// Determinant class against Delta_E^m N(prod alpha_i) (trivial involution)
// or [(-1)^(n/2) Delta_E]^m (nontrivial involution).
bool check_transfer_det(const DiagonalFormOverField& W, const TransferResult& result);
bool check_transfer_det(const DiagonalFormOverField& W, const Involution& inv, const TransferResult& result);

// Q(sqrt d) as Q[x]/(x^2 - d).
FieldPtr quadratic_field(const Int& d);

struct H11Witness {
    Int u, v;
    FieldElement alpha; // (d + u sqrt d) / (2d)
    TransferResult transfer;
};

// Element of Q(sqrt d) whose transfer is <1,1>; nullopt when d is not a
// sum of two squares, in which case no such element exists.
std::optional<H11Witness> construct_H11_witness(const Int& d);

struct BinarySalemConstruction {
    FieldPtr field;        // Q(z), z^2 = -(u + sqrt d)
    Involution involution; // z -> -z
    FieldElement alpha;    // (d + u sqrt d) / d written in z
    TransferResult transfer;
    bool matches_target; // transfer equivalent to H + <1,1>
};

BinarySalemConstruction construct_salem_from_binary(const Int& d, const Int& u, const Int& v);

} // namespace salemhk
