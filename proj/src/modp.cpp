#include "salemhk/modp.hpp"

#include <algorithm>
#include <bitset>

namespace salemhk {

namespace {

Int mod(const Int& a, const Int& p)
{
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

Int inverse(const Int& a, const Int& p)
{
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InvalidInput("non-invertible element mod " + p.get_str());
    return r;
}

} // namespace

ModPoly::ModPoly(Int p, const IntPoly& f) : p_(std::move(p)), c_(f.coeffs())
{
    normalize();
}

ModPoly::ModPoly(Int p, std::vector<Int> c) : p_(std::move(p)), c_(std::move(c))
{
    normalize();
}

void ModPoly::normalize()
{
    for (auto& v : c_) v = mod(v, p_);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::monic() const
{
    if (is_zero()) return *this;
    Int inv = inverse(lead(), p_);
    std::vector<Int> c = c_;
    for (auto& v : c) v *= inv;
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::derivative() const
{
    std::vector<Int> c;
    for (std::size_t k = 1; k < c_.size(); ++k) c.push_back(c_[k] * static_cast<unsigned long>(k));
    return ModPoly(p_, std::move(c));
}

IntPoly ModPoly::lift() const
{
    return IntPoly(c_);
}

ModPoly operator+(const ModPoly& a, const ModPoly& b)
{
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return ModPoly(a.p_, std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b)
{
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return ModPoly(a.p_, std::move(c));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b)
{
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ModPoly(a.p_, std::move(c));
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& b) const
{
    if (b.is_zero()) throw InvalidInput("division by zero polynomial mod p");
    std::vector<Int> r = c_;
    int db = b.degree();
    if (degree() < db) return {ModPoly(p_), *this};
    std::vector<Int> q(degree() - db + 1, Int(0));
    Int inv = inverse(b.lead(), p_);
    for (int k = degree(); k >= db; --k) {
        Int f = mod(Int(r[k] * inv), p_);
        if (f == 0) continue;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] = mod(Int(r[k - db + j] - f * b.c_[j]), p_);
    }
    r.resize(db);
    return {ModPoly(p_, std::move(q)), ModPoly(p_, std::move(r))};
}

ModPoly gcd(ModPoly a, ModPoly b)
{
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

void ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s, ModPoly& t)
{
    const Int& p = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0(p, std::vector<Int>{1}), s1(p), t0(p), t1(p, std::vector<Int>{1});
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Int inv = inverse(r0.lead(), p);
    ModPoly c(p, std::vector<Int>{inv});
    g = r0 * c;
    s = s0 * c;
    t = t0 * c;
}

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m)
{
    ModPoly result(base.modulus(), std::vector<Int>{1});
    result = result % m;
    ModPoly b = base % m;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

namespace {

struct DegreeBlock {
    int degree;
    ModPoly product;
};

std::vector<DegreeBlock> distinct_degree(const ModPoly& f0)
{
    const Int& p = f0.modulus();
    std::vector<DegreeBlock> out;
    ModPoly f = f0.monic();
    ModPoly x(p, std::vector<Int>{0, 1});
    ModPoly h = x % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, p, f);
        ModPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.push_back({d, g});
            f = f.divmod(g).first.monic();
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back({f.degree(), f});
    return out;
}

void equal_degree(const ModPoly& g, int d, gmp_randclass& rng, std::vector<ModPoly>& out)
{
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const Int& p = g.modulus();
    Int pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    Int half = (pd - 1) / 2;
    while (true) {
        std::vector<Int> c;
        for (int i = 0; i < g.degree(); ++i) c.push_back(rng.get_z_range(p));
        ModPoly a(p, std::move(c));
        if (a.degree() < 1) continue;
        ModPoly b(p);
        if (p == 2) {
            // Absolute trace map a + a^2 + ... + a^(2^(d-1)).
            ModPoly term = a;
            b = a;
            for (int i = 1; i < d; ++i) {
                term = (term * term) % g;
                b = b + term;
            }
        } else {
            b = powmod(a, half, g) - ModPoly(p, std::vector<Int>{1});
        }
        ModPoly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g.divmod(h).first.monic(), d, rng, out);
            return;
        }
    }
}

bool poly_less(const ModPoly& a, const ModPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
        if (a.coeffs()[k] != b.coeffs()[k]) return a.coeffs()[k] < b.coeffs()[k];
    return false;
}

} // namespace

std::vector<ModPoly> factor_squarefree_mod_p(const ModPoly& f)
{
    std::vector<ModPoly> out;
    if (f.degree() < 1) return out;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5a1e5eedUL);
    for (const auto& blk : distinct_degree(f)) equal_degree(blk.product, blk.degree, rng, out);
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<int> factor_degrees_mod_p(const ModPoly& f)
{
    std::vector<int> out;
    for (const auto& blk : distinct_degree(f))
        for (int i = 0; i < blk.product.degree() / blk.degree; ++i) out.push_back(blk.degree);
    return out;
}

namespace {

IntPoly reduce_mod(const IntPoly& f, const Int& m)
{
    std::vector<Int> c;
    for (const auto& v : f.coeffs()) c.push_back(mod(v, m));
    return IntPoly(std::move(c));
}

IntPoly symmetric_mod(const IntPoly& f, const Int& m)
{
    Int half = m / 2;
    std::vector<Int> c;
    for (const auto& v : f.coeffs()) {
        Int r = mod(v, m);
        if (r > half) r -= m;
        c.push_back(r);
    }
    return IntPoly(std::move(c));
}

// Lifts f = g*h (mod p), g monic, to mod p^k.
std::pair<IntPoly, IntPoly> lift_pair(const IntPoly& f, const ModPoly& g0, const ModPoly& h0, const Int& p,
                                      unsigned k)
{
    ModPoly gg(p), s(p), t(p);
    ext_gcd(g0, h0, gg, s, t);
    IntPoly g = g0.lift(), h = h0.lift();
    Int pj = p;
    for (unsigned j = 1; j < k; ++j) {
        IntPoly diff = f - g * h;
        std::vector<Int> e;
        for (const auto& v : diff.coeffs()) e.push_back(Int(v / pj));
        ModPoly E(p, std::move(e));
        ModPoly b = (t * E) % g0;
        ModPoly a = (E - b * h0).divmod(g0).first;
        g = g + pj * b.lift();
        h = h + pj * a.lift();
        pj *= p;
    }
    return {reduce_mod(g, pj), reduce_mod(h, pj)};
}

void lift_all(const IntPoly& f, const std::vector<ModPoly>& factors, const Int& p, unsigned k, const Int& pk,
              std::vector<IntPoly>& out)
{
    if (factors.size() == 1) {
        Int inv = inverse(mod(f.lead(), pk), pk);
        out.push_back(reduce_mod(inv * f, pk));
        return;
    }
    std::size_t half = factors.size() / 2;
    ModPoly G(p, std::vector<Int>{1});
    for (std::size_t i = 0; i < half; ++i) G = G * factors[i];
    ModPoly H = ModPoly(p, f).divmod(G).first;
    auto [Gk, Hk] = lift_pair(f, G, H, p, k);
    lift_all(Gk, {factors.begin(), factors.begin() + half}, p, k, pk, out);
    lift_all(Hk, {factors.begin() + half, factors.end()}, p, k, pk, out);
}

std::vector<Int> small_divisors(const Int& n)
{
    std::vector<Int> divs{1};
    for (const auto& [q, e] : factor(n)) {
        std::size_t base = divs.size();
        Int pw = 1;
        for (unsigned i = 0; i < e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
        if (divs.size() > 20000) return {};
    }
    return divs;
}

bool has_rational_root(const IntPoly& f)
{
    if (f.coeffs()[0] == 0) return true;
    auto num = small_divisors(f.coeffs()[0]);
    auto den = small_divisors(f.lead());
    if (num.empty() || den.empty() || num.size() * den.size() > 200000) return false;
    RatPoly g = to_rat(f);
    for (const auto& a : num)
        for (const auto& b : den)
            for (int s : {1, -1}) {
                Rat r(s * a, b);
                r.canonicalize();
                if (g.eval(r) == 0) return true;
            }
    return false;
}

bool divides_over_Q(const IntPoly& g, const IntPoly& f)
{
    return rem(to_rat(f), to_rat(g)).is_zero();
}

} // namespace

std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors, const Int& p, unsigned k)
{
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    std::vector<IntPoly> out;
    if (factors.empty()) return out;
    lift_all(f, factors, p, k, pk, out);
    return out;
}

bool irreducible_over_Q(const IntPoly& f0)
{
    if (f0.is_zero()) throw InvalidInput("irreducibility of the zero polynomial");
    IntPoly f = primitive_part(to_rat(f0));
    int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    if (!is_squarefree(f)) return false;
    if (has_rational_root(f)) return false;
    if (n <= 3) return true;
    if (n >= 256) throw InvalidInput("degree too large for the irreducibility test");

    Rat disc = discriminant(f);
    std::bitset<256> possible;
    possible.set();
    Int best_p = 0;
    std::size_t best_count = 0;
    int used = 0;
    for (unsigned long q = 2; used < 12; ++q) {
        Int p(q);
        if (!is_prime(p)) continue;
        if (mpz_divisible_p(f.lead().get_mpz_t(), p.get_mpz_t())) continue;
        if (mpz_divisible_p(disc.get_num_mpz_t(), p.get_mpz_t())) continue;
        ++used;
        auto degs = factor_degrees_mod_p(ModPoly(p, f));
        if (degs.size() == 1) return true;
        std::bitset<256> sums;
        sums.set(0);
        for (int d : degs) sums |= sums << d;
        possible &= sums;
        if (best_p == 0 || degs.size() < best_count) {
            best_p = p;
            best_count = degs.size();
        }
    }
    bool any = false;
    for (int d = 1; d < n; ++d) any = any || possible.test(d);
    if (!any) return true;

    // Zassenhaus: lift the factorization mod best_p and search subsets.
    auto mod_factors = factor_squarefree_mod_p(ModPoly(best_p, f));
    Int maxc = 0;
    for (const auto& v : f.coeffs())
        if (abs(v) > maxc) maxc = abs(v);
    Int root;
    mpz_sqrt(root.get_mpz_t(), Int(n + 1).get_mpz_t());
    Int bound;
    mpz_mul_2exp(bound.get_mpz_t(), Int(abs(f.lead()) * (root + 1) * maxc).get_mpz_t(), n + 1);
    unsigned k = 1;
    Int pk = best_p;
    while (pk <= bound) {
        pk *= best_p;
        ++k;
    }
    auto lifted = hensel_lift(f, mod_factors, best_p, k);
    std::size_t r = lifted.size();
    const Int lc = f.lead();
    for (std::size_t size = 1; 2 * size <= r; ++size) {
        std::vector<bool> pick(r, false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            IntPoly g = IntPoly::constant(lc);
            for (std::size_t i = 0; i < r; ++i)
                if (pick[i]) g = reduce_mod(g * lifted[i], pk);
            g = symmetric_mod(g, pk);
            if (g.degree() < 1) continue;
            IntPoly cand = primitive_part(to_rat(g));
            if (divides_over_Q(cand, f)) return false;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return true;
}

} // namespace salemhk
