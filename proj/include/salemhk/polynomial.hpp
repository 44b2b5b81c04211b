#pragma once

#include "salemhk/arith.hpp"
#include "salemhk/errors.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace salemhk {

// Dense univariate polynomial, coefficients in ascending degree, no
// trailing zeros.
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Poly(std::initializer_list<long> c)
    {
        for (long v : c) c_.emplace_back(v);
        trim();
    }

    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly monomial(const T& v, std::size_t k)
    {
        std::vector<T> c(k + 1, T(0));
        c[k] = v;
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(T(1), 1); }

    const std::vector<T>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const T& lead() const { return c_.back(); }
    bool monic() const { return !c_.empty() && c_.back() == 1; }

    template <class U>
    U eval(const U& x) const
    {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    Poly derivative() const
    {
        std::vector<T> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * T(static_cast<long>(k)));
        return Poly(std::move(d));
    }

    // x^deg * p(1/x); requires p(0) != 0 to keep the degree.
    Poly reversed() const { return Poly(std::vector<T>(c_.rbegin(), c_.rend())); }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const T& s, const Poly& a)
    {
        Poly r = a;
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

RatPoly to_rat(const IntPoly& p);
// Fails with InvalidInput when a coefficient is not an integer.
IntPoly to_int(const RatPoly& p);
// Positive rational multiple with coprime integer coefficients.
IntPoly primitive_part(const RatPoly& p);
Int content(const IntPoly& p);

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly rem(const RatPoly& a, const RatPoly& b);
RatPoly monic_gcd(const RatPoly& a, const RatPoly& b);
RatPoly make_monic(const RatPoly& p);
RatPoly squarefree_part(const RatPoly& p);
bool is_squarefree(const IntPoly& p);
RatPoly compose(const RatPoly& outer, const RatPoly& inner);

Rat resultant(const RatPoly& a, const RatPoly& b);
Rat discriminant(const IntPoly& f);

std::string to_string(const IntPoly& p, const std::string& var = "x");
std::string to_string(const RatPoly& p, const std::string& var = "x");
// Accepts "a0,a1,...,an" (ascending) or an expression such as
// "x^4 - x^3 - 2*x^2 - x + 1". Rational coefficients are allowed.
RatPoly parse_polynomial(const std::string& text, const std::string& var = "x");

// Sturm machinery over exact rationals. A missing bound means -inf (lo)
// or +inf (hi).
std::vector<RatPoly> sturm_chain(const RatPoly& f);
std::size_t count_real_roots_in(const RatPoly& f, const std::optional<Rat>& lo,
                                const std::optional<Rat>& hi);
std::size_t count_real_roots_in(const std::vector<RatPoly>& chain, const std::optional<Rat>& lo,
                                const std::optional<Rat>& hi);

// Open interval (lo, hi) holding exactly one simple root, with f(lo) and
// f(hi) of opposite sign.
struct RootInterval {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
};

Rat cauchy_bound(const RatPoly& f);
std::vector<RootInterval> isolate_real_roots(const RatPoly& f);
RootInterval refine_root(const RatPoly& f, RootInterval iv, const Rat& max_width);
// Simplest rational (smallest denominator, then numerator) strictly
// inside (lo, hi).
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

} // namespace salemhk
