#pragma once

#include "salemhk/polynomial.hpp"

#include <vector>

namespace salemhk {

// Polynomials over F_p, coefficients kept in [0, p).
class ModPoly {
public:
    ModPoly(Int p) : p_(std::move(p)) {}
    ModPoly(Int p, const IntPoly& f);
    ModPoly(Int p, std::vector<Int> c);

    const Int& modulus() const { return p_; }
    const std::vector<Int>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Int& lead() const { return c_.back(); }

    ModPoly monic() const;
    ModPoly derivative() const;
    IntPoly lift() const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    std::pair<ModPoly, ModPoly> divmod(const ModPoly& b) const;
    ModPoly operator%(const ModPoly& b) const { return divmod(b).second; }

private:
    void normalize();
    Int p_;
    std::vector<Int> c_;
};

ModPoly gcd(ModPoly a, ModPoly b);
// Bezout coefficients: s*a + t*b = gcd (monic).
void ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s, ModPoly& t);
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m);

// Monic irreducible factors of a squarefree polynomial mod p, sorted by
// degree then coefficients. Leading coefficient is discarded.
std::vector<ModPoly> factor_squarefree_mod_p(const ModPoly& f);
// Degrees of the irreducible factors (distinct-degree factorization only).
std::vector<int> factor_degrees_mod_p(const ModPoly& f);

// Exact irreducibility over Q of an integer polynomial (content ignored).
bool irreducible_over_Q(const IntPoly& f);

// Lifts f = lc(f) * prod(factors) from mod p to mod p^k. Inputs: monic
// pairwise coprime factors mod p whose product is f/lc(f) mod p.
std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors, const Int& p,
                                 unsigned k);

} // namespace salemhk
