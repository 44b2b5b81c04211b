#include "salemhk/arith.hpp"

#include "salemhk/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <iterator>
#include <memory>
#include <mutex>

namespace salemhk {

namespace {

std::atomic<unsigned long> g_trial_bound{1UL << 16};
std::atomic<bool> g_deterministic{false};

std::vector<unsigned long> sieve(unsigned long bound)
{
    std::vector<bool> composite(bound + 1, false);
    std::vector<unsigned long> primes;
    for (unsigned long i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

std::shared_ptr<const std::vector<unsigned long>> small_primes(unsigned long bound)
{
    static std::mutex mu;
    static std::shared_ptr<const std::vector<unsigned long>> cache;
    static unsigned long cached_bound = 0;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache || cached_bound != bound) {
        cache = std::make_shared<const std::vector<unsigned long>>(sieve(bound));
        cached_bound = bound;
    }
    return cache;
}

bool miller_rabin_round(const Int& n, const Int& nm1, const Int& d, unsigned long s, const Int& a)
{
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

bool miller_rabin(const Int& n, const std::vector<Int>& bases)
{
    Int nm1 = n - 1;
    Int d = nm1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (const auto& a : bases) {
        if (a % n == 0) continue;
        if (!miller_rabin_round(n, nm1, d, s, a)) return false;
    }
    return true;
}

Int brent_rho(const Int& n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(Int(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                Int diff = abs(Int(x - ys));
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(const Int& n, unsigned e, std::map<Int, unsigned>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += e;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        for (unsigned long k = bits; k >= 2; --k) {
            Int r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                split_into(r, e * static_cast<unsigned>(k), out);
                return;
            }
        }
    }
    Int d = brent_rho(n);
    split_into(d, e, out);
    split_into(Int(n / d), e, out);
}

} // namespace

std::string to_string(const Int& n)
{
    return n.get_str();
}

std::string to_string(const Rat& q)
{
    return q.get_str();
}

Rat parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InvalidInput("empty rational");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw InvalidInput("malformed rational '" + text + "'");
        return Rat(Int(strip_plus(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw InvalidInput("malformed rational '" + text + "'");
    Int d(strip_plus(den));
    if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
    Rat q(Int(strip_plus(num)), d);
    q.canonicalize();
    return q;
}

int sign(const Int& n)
{
    return sgn(n);
}

int sign(const Rat& q)
{
    return sgn(q);
}

std::string SquareClass::to_string() const
{
    return (sign < 0 ? "-" : "") + radical.get_str();
}

SquareClass operator*(const SquareClass& a, const SquareClass& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.radical.get_mpz_t(), b.radical.get_mpz_t());
    return SquareClass{a.sign * b.sign, Int(a.radical / g * (b.radical / g))};
}

std::string Place::to_string() const
{
    return is_real() ? "inf" : p.get_str();
}

PlaceSet symmetric_difference(const PlaceSet& a, const PlaceSet& b)
{
    PlaceSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.end()));
    return out;
}

ArithConfig arith_config()
{
    return ArithConfig{g_trial_bound.load(), g_deterministic.load()};
}

void set_arith_config(const ArithConfig& cfg)
{
    g_trial_bound.store(std::max(cfg.trial_division_bound, 100UL));
    g_deterministic.store(cfg.deterministic_primality);
}

bool is_prime(const Int& n)
{
    if (n < 2) return false;
    static const unsigned long tiny[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long p : tiny) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // Bases 2..41 are a proven Miller-Rabin certificate below 3.3e24.
    static const Int det_limit("3317044064679887385961981");
    if (n < det_limit) {
        std::vector<Int> bases;
        for (unsigned long p : tiny) bases.emplace_back(p);
        return miller_rabin(n, bases);
    }
    if (g_deterministic.load()) {
        // Exhaustive bases up to 2 ln(n)^2; deterministic under GRH.
        double ln = static_cast<double>(mpz_sizeinbase(n.get_mpz_t(), 2)) * 0.6931471805599453;
        unsigned long limit = static_cast<unsigned long>(2.0 * ln * ln) + 1;
        std::vector<Int> bases;
        for (unsigned long a = 2; a <= limit; ++a) bases.emplace_back(a);
        return miller_rabin(n, bases);
    }
    // BPSW plus extra Miller-Rabin rounds; error probability below 4^-25.
    return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

std::map<Int, unsigned> factor(const Int& n0)
{
    std::map<Int, unsigned> out;
    Int n = abs(n0);
    if (n <= 1) return out;
    auto primes = small_primes(g_trial_bound.load());
    for (unsigned long p : *primes) {
        if (Int(p) * p > n) break;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        out[Int(p)] = e;
    }
    if (n == 1) return out;
    unsigned long last = primes->empty() ? 1 : primes->back();
    if (n < Int(last) * last) {
        out[n] += 1;
        return out;
    }
    split_into(n, 1, out);
    return out;
}

std::vector<Int> prime_divisors(const Int& n)
{
    std::vector<Int> out;
    for (const auto& [p, e] : factor(n)) out.push_back(p);
    return out;
}

std::vector<Int> prime_divisors(const Rat& q)
{
    std::set<Int> s;
    for (const auto& p : prime_divisors(q.get_num())) s.insert(p);
    for (const auto& p : prime_divisors(q.get_den())) s.insert(p);
    return {s.begin(), s.end()};
}

Int squarefree_part(const Int& n0)
{
    Int n = abs(n0);
    if (n == 0) throw InvalidInput("squarefree part of zero");
    Int out = 1;
    auto primes = small_primes(g_trial_bound.load());
    for (unsigned long p : *primes) {
        if (Int(p) * p > n) break;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e % 2) out *= p;
    }
    if (n == 1 || mpz_perfect_square_p(n.get_mpz_t())) return out;
    if (is_prime(n)) return out * n;
    std::map<Int, unsigned> rest;
    split_into(n, 1, rest);
    for (const auto& [p, e] : rest)
        if (e % 2) out *= p;
    return out;
}

SquareClass square_class(const Rat& q)
{
    if (q == 0) throw InvalidInput("square class of zero");
    Int nd = abs(Int(q.get_num() * q.get_den()));
    return SquareClass{sign(q), squarefree_part(nd)};
}

bool is_square(const Rat& q)
{
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

std::optional<Rat> rational_sqrt(const Rat& q)
{
    if (!is_square(q)) return std::nullopt;
    Int a, b;
    mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
    return Rat(a, b);
}

std::optional<std::pair<Int, Int>> sum_of_two_squares(const Int& d)
{
    if (d < 1) throw InvalidInput("sum of two squares needs d >= 1");
    for (const auto& [p, e] : factor(d))
        if (p % 4 == 3 && e % 2 == 1) return std::nullopt;
    for (Int u = 0; 2 * u * u <= d; ++u) {
        Int rest = d - u * u;
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            Int v;
            mpz_sqrt(v.get_mpz_t(), rest.get_mpz_t());
            return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

bool is_sum_of_two_squares(const Int& d)
{
    return sum_of_two_squares(d).has_value();
}

long padic_valuation(const Rat& q, const Int& p)
{
    if (q == 0) throw InvalidInput("valuation of zero");
    if (p < 2) throw InvalidInput("valuation at a non-prime");
    auto val = [&](Int n) {
        long v = 0;
        n = abs(n);
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++v;
        }
        return v;
    };
    return val(q.get_num()) - val(q.get_den());
}

namespace {

// q = p^v * u with u a p-adic unit; returns v and num(u)*den(u) as an integer.
std::pair<long, Int> split_unit(const Rat& q, const Int& p)
{
    Int num = q.get_num(), den = q.get_den();
    long v = 0;
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        --v;
    }
    return {v, Int(num * den)};
}

int legendre(const Int& a, const Int& p)
{
    Int r = a % p;
    if (r < 0) r += p;
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

int mod8(const Int& u)
{
    Int r = u % 8;
    if (r < 0) r += 8;
    return static_cast<int>(r.get_si());
}

} // namespace

bool is_padic_square(const Rat& q, const Int& p)
{
    if (q == 0) throw InvalidInput("p-adic square test of zero");
    auto [v, u] = split_unit(q, p);
    if (v % 2 != 0) return false;
    if (p == 2) return mod8(u) == 1;
    return legendre(u, p) == 1;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& place)
{
    if (a == 0 || b == 0) throw InvalidInput("Hilbert symbol of zero");
    if (place.is_real()) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = place.p;
    auto [alpha, u] = split_unit(a, p);
    auto [beta, v] = split_unit(b, p);
    if (p == 2) {
        int uu = mod8(u), vv = mod8(v);
        int eps_u = ((uu - 1) / 2) & 1, eps_v = ((vv - 1) / 2) & 1;
        int om_u = ((uu * uu - 1) / 8) & 1, om_v = ((vv * vv - 1) / 8) & 1;
        long e = eps_u * eps_v + (alpha & 1) * om_v + (beta & 1) * om_u;
        return (e & 1) ? -1 : 1;
    }
    int s = 1;
    if ((alpha & 1) && (beta & 1) && mpz_tstbit(p.get_mpz_t(), 1)) s = -s; // (p-1)/2 odd
    if (beta & 1) s *= legendre(u, p);
    if (alpha & 1) s *= legendre(v, p);
    return s;
}

PlaceSet quaternion_class(const Rat& a, const Rat& b)
{
    if (a == 0 || b == 0) throw InvalidInput("quaternion class of zero");
    PlaceSet out;
    if (hilbert_symbol(a, b, Place::infinity()) < 0) out.insert(Place::infinity());
    std::set<Int> primes{Int(2)};
    for (const auto& p : prime_divisors(a)) primes.insert(p);
    for (const auto& p : prime_divisors(b)) primes.insert(p);
    for (const auto& p : primes)
        if (hilbert_symbol(a, b, Place::prime(p)) < 0) out.insert(Place::prime(p));
    return out;
}

} // namespace salemhk
