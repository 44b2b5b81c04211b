#pragma once

// Slow reference implementations used only to cross-check the library.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

inline long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long ipow(long b, int e)
{
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline int valuation(long a, long p)
{
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

// Hilbert symbol (a,b)_p for nonzero integers by searching for a
// primitive zero of z^2 - a x^2 - b y^2 modulo p^k that satisfies Hensel's
// condition. a and b are first reduced to p-valuation 0 or 1.
inline int hilbert_symbol(long a, long b, long p)
{
    while (a % (p * p) == 0) a /= p * p;
    while (b % (p * p) == 0) b /= p * p;
    const int k = p == 2 ? 5 : 3;
    const long m = ipow(p, k);
    std::map<long, std::vector<long>> roots;
    for (long z = 0; z < m; ++z) roots[z * z % m].push_back(z);
    const long coef[3] = {1, mod(-a, m), mod(-b, m)};
    const long craw[3] = {1, -a, -b};
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            long t = mod(a * x % m * x + b * y % m * y, m);
            auto it = roots.find(t);
            if (it == roots.end()) continue;
            for (long z : it->second) {
                long w[3] = {z, x, y};
                for (int i = 0; i < 3; ++i) {
                    if (w[i] % p == 0 && coef[i] % p == 0) continue;
                    // derivative of the form in the i-th variable is 2 c_i w_i
                    long d = 2 * craw[i] * w[i];
                    if (d == 0) continue;
                    int e = valuation(d < 0 ? -d : d, p);
                    if (w[i] % p != 0 && k >= 2 * e + 1) return 1;
                }
            }
        }
    return -1;
}

inline bool sum_of_two_squares(long d)
{
    for (long u = 0; u * u <= d; ++u)
        for (long v = u; u * u + v * v <= d; ++v)
            if (u * u + v * v == d) return true;
    return false;
}

inline long random_nonzero(std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    long v = 0;
    while (v == 0) v = dist(rng);
    return v;
}

} // namespace oracle
