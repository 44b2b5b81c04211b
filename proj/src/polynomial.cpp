#include "salemhk/polynomial.hpp"

#include "salemhk/matrix.hpp"

#include <cctype>
#include <sstream>

namespace salemhk {

RatPoly to_rat(const IntPoly& p)
{
    std::vector<Rat> c;
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

IntPoly to_int(const RatPoly& p)
{
    std::vector<Int> c;
    for (const auto& v : p.coeffs()) {
        if (v.get_den() != 1) throw InvalidInput("non-integer coefficient " + v.get_str());
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p)
{
    if (p.is_zero()) return IntPoly();
    Int l = 1, g = 0;
    for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Int> c;
    for (const auto& v : p.coeffs()) {
        c.push_back(Int(v.get_num() * (l / v.get_den())));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.back().get_mpz_t());
    }
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

Int content(const IntPoly& p)
{
    Int g = 0;
    for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rat> q(a.degree() - db + 1, Rat(0));
    Rat inv = 1 / b.lead();
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        Rat f = r[k] * inv;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
    }
    r.resize(db);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rem(const RatPoly& a, const RatPoly& b)
{
    return divmod(a, b).second;
}

RatPoly make_monic(const RatPoly& p)
{
    if (p.is_zero()) return p;
    return Rat(1 / p.lead()) * p;
}

RatPoly monic_gcd(const RatPoly& a0, const RatPoly& b0)
{
    RatPoly a = a0, b = b0;
    while (!b.is_zero()) {
        RatPoly r = rem(a, b);
        a = std::move(b);
        b = to_rat(primitive_part(r));
    }
    return make_monic(a);
}

RatPoly squarefree_part(const RatPoly& p)
{
    if (p.degree() <= 0) return p;
    RatPoly g = monic_gcd(p, p.derivative());
    return make_monic(divmod(p, g).first);
}

bool is_squarefree(const IntPoly& p)
{
    RatPoly f = to_rat(p);
    return monic_gcd(f, f.derivative()).degree() == 0;
}

RatPoly compose(const RatPoly& outer, const RatPoly& inner)
{
    RatPoly acc;
    const auto& c = outer.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + RatPoly::constant(*it);
    return acc;
}

Rat resultant(const RatPoly& a, const RatPoly& b)
{
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    std::size_t size = m + n;
    RatMatrix s(size, size);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s(i, i + k) = a.coeffs()[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s(n + i, i + k) = b.coeffs()[n - k];
    return s.determinant();
}

Rat discriminant(const IntPoly& f)
{
    int n = f.degree();
    if (n < 1) throw InvalidInput("discriminant of a constant");
    RatPoly g = to_rat(f);
    Rat r = resultant(g, g.derivative()) / g.lead();
    return ((n * (n - 1) / 2) % 2) ? Rat(-r) : r;
}

namespace {

template <class T>
std::string poly_string(const std::vector<T>& c, const std::string& var)
{
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        if (c[k] == 0) continue;
        T a = c[k];
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = (a == 1);
        if (!unit || k == 0) os << a.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

class PolyParser {
public:
    PolyParser(const std::string& text, const std::string& var) : var_(var)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    RatPoly parse()
    {
        if (s_.empty()) throw InvalidInput("empty polynomial");
        std::vector<Rat> acc;
        bool first = true;
        while (pos_ < s_.size()) {
            int sgn = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sgn = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coef, k] = term();
            if (acc.size() <= k) acc.resize(k + 1, Rat(0));
            acc[k] += sgn * coef;
        }
        return RatPoly(std::move(acc));
    }

private:
    [[noreturn]] void fail(const std::string& what)
    {
        throw InvalidInput("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
    }

    bool at_var() const { return s_.compare(pos_, var_.size(), var_) == 0; }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::pair<Rat, std::size_t> term()
    {
        Rat coef = 1;
        bool have_coef = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::string num = digits();
            coef = Rat(Int(num));
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::string den = digits();
                if (den.empty()) fail("missing denominator");
                Int d(den);
                if (d == 0) fail("zero denominator");
                coef = Rat(Int(num), d);
                coef.canonicalize();
            }
            have_coef = true;
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                if (!at_var()) fail("expected variable after '*'");
            }
        }
        if (!at_var()) {
            if (!have_coef) fail("expected coefficient or variable");
            return {coef, 0};
        }
        pos_ += var_.size();
        std::size_t k = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            std::string e = digits();
            if (e.empty()) fail("missing exponent");
            if (e.size() > 4) fail("exponent too large");
            k = std::stoul(e);
        }
        return {coef, k};
    }

    std::string s_, var_;
    std::size_t pos_ = 0;
};

int sign_at(const RatPoly& p, const std::optional<Rat>& x, bool at_minus_inf)
{
    if (p.is_zero()) return 0;
    if (x) return sign(p.eval(*x));
    int s = sign(p.lead());
    if (at_minus_inf && (p.degree() % 2)) s = -s;
    return s;
}

std::size_t variations(const std::vector<RatPoly>& chain, const std::optional<Rat>& x, bool minus_inf)
{
    std::size_t v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x, minus_inf);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

std::string to_string(const IntPoly& p, const std::string& var)
{
    return poly_string(p.coeffs(), var);
}

std::string to_string(const RatPoly& p, const std::string& var)
{
    return poly_string(p.coeffs(), var);
}

RatPoly parse_polynomial(const std::string& text, const std::string& var)
{
    bool has_var = text.find(var) != std::string::npos;
    if (!has_var && text.find(',') != std::string::npos) {
        std::vector<Rat> c;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
        if (c.empty()) throw InvalidInput("empty coefficient list");
        return RatPoly(std::move(c));
    }
    return PolyParser(text, var).parse();
}

std::vector<RatPoly> sturm_chain(const RatPoly& f)
{
    std::vector<RatPoly> chain;
    if (f.is_zero()) return chain;
    chain.push_back(to_rat(primitive_part(f)));
    if (f.degree() == 0) return chain;
    chain.push_back(to_rat(primitive_part(f.derivative())));
    while (true) {
        RatPoly r = rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(-to_rat(primitive_part(r)));
    }
    return chain;
}

std::size_t count_real_roots_in(const std::vector<RatPoly>& chain, const std::optional<Rat>& lo,
                                const std::optional<Rat>& hi)
{
    if (chain.empty()) throw InvalidInput("root count of the zero polynomial");
    if (lo && hi && *lo >= *hi) return 0;
    if (lo && chain[0].eval(*lo) == 0) throw EndpointRoot("lower endpoint " + lo->get_str() + " is a root");
    if (hi && chain[0].eval(*hi) == 0) throw EndpointRoot("upper endpoint " + hi->get_str() + " is a root");
    std::size_t va = variations(chain, lo, true);
    std::size_t vb = variations(chain, hi, false);
    return va - vb;
}

std::size_t count_real_roots_in(const RatPoly& f, const std::optional<Rat>& lo, const std::optional<Rat>& hi)
{
    if (f.is_zero()) throw InvalidInput("root count of the zero polynomial");
    return count_real_roots_in(sturm_chain(f), lo, hi);
}

Rat cauchy_bound(const RatPoly& f)
{
    Rat m = 0;
    for (int k = 0; k < f.degree(); ++k) {
        Rat a = abs(f.coeffs()[k] / f.lead());
        if (a > m) m = a;
    }
    return m + 1;
}

namespace {

// A point in (lo, hi) that is not a root of f, close to the midpoint.
Rat split_point(const RatPoly& f, const Rat& lo, const Rat& hi)
{
    for (long den = 2;; ++den)
        for (long num = den / 2; num >= 1; --num)
            for (long k : {num, den - num}) {
                Rat t(k, den);
                t.canonicalize();
                Rat m = lo + (hi - lo) * t;
                if (f.eval(m) != 0) return m;
            }
}

void isolate_rec(const RatPoly& f, const std::vector<RatPoly>& chain, const Rat& lo, const Rat& hi,
                 std::size_t count, std::vector<RootInterval>& out)
{
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rat mid = split_point(f, lo, hi);
    std::size_t left = count_real_roots_in(chain, lo, mid);
    isolate_rec(f, chain, lo, mid, left, out);
    isolate_rec(f, chain, mid, hi, count - left, out);
}

} // namespace

std::vector<RootInterval> isolate_real_roots(const RatPoly& f0)
{
    std::vector<RootInterval> out;
    if (f0.degree() < 1) return out;
    RatPoly f = squarefree_part(f0);
    auto chain = sturm_chain(f);
    Rat b = cauchy_bound(f);
    isolate_rec(f, chain, Rat(-b), b, count_real_roots_in(chain, Rat(-b), b), out);
    return out;
}

RootInterval refine_root(const RatPoly& f, RootInterval iv, const Rat& max_width)
{
    int slo = sign(f.eval(iv.lo));
    while (iv.width() >= max_width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        int s = sign(f.eval(mid));
        if (s == 0) {
            // Rational root: shrink symmetrically around it.
            iv.lo = (iv.lo + mid) / 2;
            iv.hi = (mid + iv.hi) / 2;
            slo = sign(f.eval(iv.lo));
            continue;
        }
        if (s == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

namespace {

// Simplest rational in (lo, hi), hi possibly +inf; lo >= 0.
Rat simplest_nonneg(const Rat& lo, const std::optional<Rat>& hi)
{
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    Rat cand(fl + 1);
    if (!hi || cand < *hi) return cand;
    // lo and hi share the integer part fl; recurse on reciprocals.
    Rat a = *hi - fl;
    Rat b = lo - fl;
    std::optional<Rat> upper;
    if (b != 0) upper = 1 / b;
    Rat inner = simplest_nonneg(1 / a, upper);
    return Rat(fl) + 1 / inner;
}

} // namespace

Rat simplest_rational_between(const Rat& lo, const Rat& hi)
{
    if (lo >= hi) throw InvalidInput("empty interval");
    if (lo < 0 && hi > 0) return 0;
    if (lo >= 0) return simplest_nonneg(lo, hi);
    return -simplest_nonneg(-hi, Rat(-lo));
}

} // namespace salemhk
