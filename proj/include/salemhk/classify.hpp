#pragma once

#include "salemhk/numfield.hpp"
#include "salemhk/salem.hpp"
#include "salemhk/verdict.hpp"

#include <optional>
#include <string>

namespace salemhk {

struct HKType {
    enum class Kind { K3, Kummer, K3Hilb, OG6, OG10 };
    Kind kind = Kind::K3;
    long n = 0; // only for Kummer and K3Hilb

    // name in {k3, kummer, k3n, og6, og10}; kummer and k3n need n >= 2.
    static HKType parse(const std::string& name, std::optional<long> n = std::nullopt);
    std::string to_string() const;
};

Verdict classify_k3_sm(const SalemPolynomial& S);
Verdict classify_k3_salem_automorphism(const SalemPolynomial& S);
Verdict classify_hk_sm(const SalemPolynomial& S, const HKType& t);
// The same rules from the raw data: half degree d of the Salem field and
// the class of its discriminant.
Verdict classify_hk_sm(int half_degree, const SquareClass& disc, const HKType& t);

Verdict rm_k3_exists(int degree, int m);

// Is n a norm from Q(sqrt d)? Decided by Hilbert symbols (d, n)_v.
Verdict quad_norm_solvable(const Int& d, const Rat& n, bool require_totally_positive);

// RM by a totally real field: its degree, and for quadratic fields the
// squarefree d with E = Q(sqrt d).
struct RMFieldSpec {
    int degree = 2;
    std::optional<Int> disc;
};

Verdict rm_hk_exists(const HKType& t, const RMFieldSpec& field, int m,
                     const std::optional<FieldElement>& witness = std::nullopt);

// alpha positive at exactly one embedding, and N(alpha) Delta_E^m equal to
// target_det modulo squares.
Verdict verify_rm_witness(const FieldElement& alpha, int m, const SquareClass& target_det);

enum class MultiplicationKind { RM, SM };

struct BirFiniteness {
    bool finite = false;
    std::string note;
};

BirFiniteness bir_finiteness(MultiplicationKind kind, bool hyperkaehler = false);

struct RealInterval {
    Rat lo, hi;
};

// Enclosure of log(lambda) of width about 2^-precision_bits.
RealInterval entropy(const SalemPolynomial& S, unsigned precision_bits);

} // namespace salemhk
