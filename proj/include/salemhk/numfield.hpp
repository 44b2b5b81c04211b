#pragma once

#include "salemhk/arith.hpp"
#include "salemhk/matrix.hpp"
#include "salemhk/modp.hpp"
#include "salemhk/polynomial.hpp"
#include "salemhk/qforms.hpp"

#include <memory>
#include <string>
#include <vector>

namespace salemhk {

class NumberField;
class FieldElement;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[x]/(f) for a monic irreducible integer polynomial f, with the real
// roots of f isolated at construction.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static FieldPtr create(const IntPoly& min_poly);

    const IntPoly& min_poly() const { return f_; }
    int degree() const { return f_.degree(); }
    const std::vector<RootInterval>& real_roots() const { return real_; }
    int complex_pairs() const { return (degree() - static_cast<int>(real_.size())) / 2; }
    // Tr(x^k) for 0 <= k < 2*degree - 1.
    const std::vector<Rat>& power_traces() const { return traces_; }

    FieldElement element(std::vector<Rat> coeffs) const;
    FieldElement from_poly(const RatPoly& p) const;
    FieldElement from_rational(const Rat& q) const;
    FieldElement one() const;
    FieldElement gen() const;

    RatPoly reduce(const RatPoly& p) const;

    struct Key {};
    NumberField(Key, IntPoly f);

private:
    IntPoly f_;
    RatPoly f_rat_;
    std::vector<RootInterval> real_;
    std::vector<Rat> traces_;
};

class FieldElement {
public:
    FieldElement(FieldPtr field, std::vector<Rat> coeffs);

    const FieldPtr& field() const { return f_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    RatPoly as_poly() const { return RatPoly(c_); }
    bool is_zero() const;
    bool is_rational() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const Rat& s, const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    FieldElement inverse() const;
    FieldElement pow(long e) const;

    RatMatrix multiplication_matrix() const;
    RatPoly charpoly() const;

    std::string to_string(const std::string& var = "x") const;

private:
    FieldPtr f_;
    std::vector<Rat> c_;
};

Rat trace(const FieldElement& e);
Rat norm(const FieldElement& e);

struct FieldSignature {
    int r = 0;
    int s = 0;
    friend bool operator==(const FieldSignature&, const FieldSignature&) = default;
};

FieldSignature field_signature(const NumberField& F);
bool is_totally_real(const NumberField& F);
SquareClass field_disc_class(const NumberField& F);

// Signs of e at the real embeddings, in the order of F.real_roots().
std::vector<int> sign_at_real_embeddings(const FieldElement& e);
// Signs of a rational polynomial g at the real roots of the squarefree
// polynomial f, in increasing root order.
std::vector<int> signs_at_roots(const RatPoly& g, const RatPoly& f, std::vector<RootInterval> roots);

// Q-linear field automorphism of order dividing 2, stored by the image
// of the generator.
class Involution {
public:
    static Involution identity(const FieldPtr& F);
    // x -> 1/x; requires a self-reciprocal minimal polynomial.
    static Involution reciprocal(const FieldPtr& F);
    static Involution from_image(const FieldElement& image);

    const FieldPtr& field() const { return f_; }
    bool is_identity() const { return identity_; }
    const FieldElement& image() const { return powers_[1 % powers_.size()]; }
    FieldElement apply(const FieldElement& e) const;
    bool fixes(const FieldElement& e) const { return apply(e) == e; }

private:
    Involution(FieldPtr f, std::vector<FieldElement> powers, bool identity);
    FieldPtr f_;
    std::vector<FieldElement> powers_; // images of 1, x, x^2, ...
    bool identity_;
};

// G_ij = Tr(alpha * x^i * inv(x^j)) on the power basis.
RatMatrix trace_form_gram(const FieldElement& alpha, const Involution& inv);

// The fixed field of a nontrivial involution presented as Q(y), with
// E = E0(sqrt(delta)), delta = (x - inv x)^2 in E0.
struct FixedSubfield {
    FieldElement y;
    RatPoly min_poly; // monic, degree = [E:Q]/2
    RatPoly delta;    // delta = delta(y)
    std::vector<RootInterval> roots;

    // h with e = h(y); throws InvalidInput when e is not fixed.
    RatPoly express(const FieldElement& e) const;
};

FixedSubfield fixed_subfield(const Involution& inv);

} // namespace salemhk
