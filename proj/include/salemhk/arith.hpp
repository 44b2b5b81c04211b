#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace salemhk {

using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Int& n);
std::string to_string(const Rat& q);
Rat parse_rational(const std::string& text);

int sign(const Int& n);
int sign(const Rat& q);

// Element of Q*/Q*^2 as (sign, squarefree radical).
struct SquareClass {
    int sign = 1;
    Int radical = 1;

    bool trivial() const { return sign == 1 && radical == 1; }
    Rat value() const { return Rat(sign * radical); }
    std::string to_string() const;

    friend bool operator==(const SquareClass& a, const SquareClass& b)
    {
        return a.sign == b.sign && a.radical == b.radical;
    }
};

SquareClass operator*(const SquareClass& a, const SquareClass& b);

struct Place {
    Int p = 0; // 0 encodes the real place

    static Place infinity() { return Place{}; }
    static Place prime(const Int& q) { return Place{q}; }

    bool is_real() const { return p == 0; }
    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b) { return a.p == b.p; }
    // Finite primes in increasing order, then infinity.
    friend bool operator<(const Place& a, const Place& b)
    {
        if (a.is_real() != b.is_real()) return b.is_real();
        return a.p < b.p;
    }
};

using PlaceSet = std::set<Place>;

PlaceSet symmetric_difference(const PlaceSet& a, const PlaceSet& b);

// Process-wide tuning shared by the factorization routines.
struct ArithConfig {
    unsigned long trial_division_bound = 1UL << 16;
    bool deterministic_primality = false;
};

ArithConfig arith_config();
void set_arith_config(const ArithConfig& cfg);

bool is_prime(const Int& n);
std::map<Int, unsigned> factor(const Int& n);
std::vector<Int> prime_divisors(const Int& n);
std::vector<Int> prime_divisors(const Rat& q);
Int squarefree_part(const Int& n);

SquareClass square_class(const Rat& q);
bool is_square(const Rat& q);
std::optional<Rat> rational_sqrt(const Rat& q);

std::optional<std::pair<Int, Int>> sum_of_two_squares(const Int& d);
bool is_sum_of_two_squares(const Int& d);

long padic_valuation(const Rat& q, const Int& p);
bool is_padic_square(const Rat& q, const Int& p);

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);
PlaceSet quaternion_class(const Rat& a, const Rat& b);

} // namespace salemhk
