#pragma once

#include "salemhk/arith.hpp"
#include "salemhk/matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace salemhk {

struct Signature {
    int pos = 0;
    int neg = 0;
    int index() const { return pos - neg; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct FormInvariants {
    std::size_t dim = 0;
    SquareClass det;
    Signature signature;
    PlaceSet hasse; // places where w(V) = sum_{i<j} (a_i, a_j) is ramified

    friend bool operator==(const FormInvariants& a, const FormInvariants& b)
    {
        return a.dim == b.dim && a.det == b.det && a.signature == b.signature && a.hasse == b.hasse;
    }
};

// Congruence diagonalization over Q. Throws DegenerateForm when det = 0.
std::vector<Rat> diagonalize(const RatMatrix& gram);

// Nondegenerate rational quadratic form. Immutable; the Hasse support is
// computed on first request and cached.
class QuadraticFormQ {
public:
    static QuadraticFormQ from_diag(std::vector<Rat> entries);
    static QuadraticFormQ from_gram(RatMatrix gram);

    std::size_t dim() const;
    bool diagonal_representation() const;
    const RatMatrix& gram() const;
    const std::vector<Rat>& diagonal() const;

    Rat det() const;
    SquareClass det_class() const;
    Signature signature() const;
    int hasse_at(const Place& v) const;
    const PlaceSet& hasse() const;
    FormInvariants invariants() const;
    // {2} plus every odd prime where the form may fail to be unimodular.
    std::vector<Int> bad_primes() const;

    QuadraticFormQ scaled(const Rat& c) const;

private:
    struct State;
    explicit QuadraticFormQ(std::shared_ptr<const State> s) : s_(std::move(s)) {}
    std::shared_ptr<const State> s_;
};

QuadraticFormQ direct_sum(const QuadraticFormQ& a, const QuadraticFormQ& b);
QuadraticFormQ direct_sum(const std::vector<QuadraticFormQ>& parts);
QuadraticFormQ power(const QuadraticFormQ& f, unsigned n);

bool equivalent_over_Qp(const QuadraticFormQ& f, const QuadraticFormQ& g, const Place& v);
bool equivalent_over_Q(const QuadraticFormQ& f, const QuadraticFormQ& g);
bool witt_is_torsion(const QuadraticFormQ& f, const QuadraticFormQ& g);

enum class BBFType { Kummer, OG6, K3n, OG10 };

QuadraticFormQ hyperbolic_plane();
QuadraticFormQ identity_form(unsigned n);
QuadraticFormQ negative_identity_form(unsigned n);
QuadraticFormQ vk3_form();
QuadraticFormQ bbf_form(BBFType type, long n = 0);
std::optional<BBFType> parse_bbf_type(const std::string& name);

struct NamedFormParams {
    std::optional<long> n;
    std::string type;
};

// name in {H, I, negI, VK3, BBF}; H takes an optional power n.
QuadraticFormQ named_form(const std::string& name, const NamedFormParams& params = {});

} // namespace salemhk
