#pragma once

#include "salemhk/numfield.hpp"
#include "salemhk/qforms.hpp"
#include "salemhk/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace salemhk {

IntPoly reciprocal(const IntPoly& f);
bool is_self_reciprocal(const IntPoly& f);

// f0 with f0(x + 1/x) * x^d = S(x), for S self-reciprocal of degree 2d.
IntPoly trace_polynomial(const IntPoly& S);

struct SalemPolynomial {
    IntPoly poly;
    IntPoly trace_poly;
    RootInterval lambda; // contains the Salem number, subset of (1, inf)
    SquareClass disc_class;
    Int s_at_1;
    Int s_at_minus1;
    Int disc; // discriminant of poly
    FieldPtr field;

    int degree() const { return poly.degree(); }
    int half_degree() const { return poly.degree() / 2; }
};

struct SalemValidation {
    std::optional<SalemPolynomial> salem;
    std::vector<std::string> reasons;
    bool valid() const { return salem.has_value(); }
};

SalemValidation validate_salem(const RatPoly& f);
SalemValidation validate_salem(const IntPoly& f);
// Throws InvalidInput with the joined reasons on failure.
SalemPolynomial certify_salem(const IntPoly& f);

RootInterval salem_lambda(const SalemPolynomial& S, unsigned precision_bits);
SquareClass salem_disc_class(const SalemPolynomial& S);

// Interior roots of f0 in (-2, 2), increasing; these index the complex
// places of the Salem field.
std::vector<RootInterval> interior_trace_roots(const SalemPolynomial& S);

enum class SplitStatus { Split, NonSplit, Indeterminate };
const char* to_string(SplitStatus s);
SplitStatus split_status(const SalemPolynomial& S, const Int& p);

// Primes dividing disc(S).
std::vector<Int> disc_primes(const SalemPolynomial& S);

struct RealizationResult {
    enum class Outcome { Yes, No, Conditional };
    Outcome outcome = Outcome::No;
    std::string reason;
    std::vector<Int> unresolved;
    std::vector<Evidence> evidence;
};

const char* to_string(RealizationResult::Outcome o);
RealizationResult realization_check(const SalemPolynomial& S, const QuadraticFormQ& U);

// Element y = x + 1/x of the Salem field and h(y) for h in Q[y].
FieldElement salem_trace_element(const SalemPolynomial& S);
FieldElement salem_fixed_element(const SalemPolynomial& S, const RatPoly& h);

struct AlphaSearch {
    std::optional<FieldElement> alpha;
    RatPoly h; // alpha = h(x + 1/x)
    std::size_t tried = 0;
    std::size_t budget = 0;
};

AlphaSearch find_alpha_with_signature(const SalemPolynomial& S, int a_plus, std::size_t budget = 256);

// Presentation E = E0(sqrt(alpha)) of a Salem field over its totally real
// subfield.
struct RelativeSalemPresentation {
    FieldPtr base;      // totally real E0
    FieldElement alpha; // positive at exactly one real embedding
};

RelativeSalemPresentation make_relative_presentation(const FieldPtr& base, const FieldElement& alpha);

} // namespace salemhk
