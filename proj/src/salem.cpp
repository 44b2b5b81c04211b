#include "salemhk/salem.hpp"

#include "salemhk/errors.hpp"
#include "salemhk/modp.hpp"

#include <set>

namespace salemhk {

IntPoly reciprocal(const IntPoly& f)
{
    if (f.is_zero() || f.coeffs()[0] == 0) throw InvalidInput("reciprocal needs f(0) != 0");
    return f.reversed();
}

bool is_self_reciprocal(const IntPoly& f)
{
    const auto& c = f.coeffs();
    return !c.empty() && std::equal(c.begin(), c.end(), c.rbegin());
}

IntPoly trace_polynomial(const IntPoly& S)
{
    int n = S.degree();
    if (n < 2 || n % 2) throw InvalidInput("trace polynomial needs even degree >= 2");
    if (!S.monic()) throw InvalidInput("trace polynomial needs a monic polynomial");
    if (!is_self_reciprocal(S)) throw InvalidInput("trace polynomial needs a self-reciprocal polynomial");
    int d = n / 2;
    const auto& a = S.coeffs();
    // T_k = x^k + x^-k as a polynomial in y: T_0 = 2, T_1 = y, T_{k+1} = y T_k - T_{k-1}.
    IntPoly y = IntPoly::x();
    IntPoly t_prev = IntPoly::constant(2), t_cur = y;
    IntPoly f0 = IntPoly::constant(a[d]);
    for (int k = 1; k <= d; ++k) {
        f0 += a[d + k] * t_cur;
        IntPoly next = y * t_cur - t_prev;
        t_prev = std::move(t_cur);
        t_cur = std::move(next);
    }
    return f0;
}

namespace {

RootInterval bisect_lambda(const IntPoly& S, RootInterval iv, unsigned bits)
{
    Rat width(1);
    mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), bits);
    return refine_root(to_rat(S), iv, width);
}

RootInterval initial_lambda_bracket(const IntPoly& S)
{
    Int m = 0;
    for (const auto& c : S.coeffs())
        if (abs(c) > m) m = abs(c);
    return RootInterval{Rat(1), Rat(m + 2)};
}

} // namespace

SalemValidation validate_salem(const IntPoly& f)
{
    SalemValidation out;
    auto fail = [&](const std::string& r) {
        out.reasons.push_back(r);
        return out;
    };
    if (f.degree() < 1) return fail("constant polynomial");
    if (!f.monic()) return fail("not monic");
    int n = f.degree();
    if (n < 4 || n % 2) return fail("degree must be even and at least 4");
    if (f.coeffs()[0] != 1) return fail("constant term is not 1");
    if (!is_self_reciprocal(f)) return fail("not self-reciprocal");
    if (!irreducible_over_Q(f)) return fail("reducible over Q");

    IntPoly f0 = trace_polynomial(f);
    RatPoly g = to_rat(f0);
    if (g.eval(Rat(2)) == 0 || g.eval(Rat(-2)) == 0) return fail("trace polynomial vanishes at 2 or -2");
    auto chain = sturm_chain(g);
    int d = n / 2;
    std::size_t above = count_real_roots_in(chain, Rat(2), std::nullopt);
    std::size_t inside = count_real_roots_in(chain, Rat(-2), Rat(2));
    std::size_t below = count_real_roots_in(chain, std::nullopt, Rat(-2));
    if (below > 0) out.reasons.push_back("trace polynomial has a root below -2");
    if (above == 0 && below == 0) out.reasons.push_back("unit-circle roots only");
    if (above > 1) out.reasons.push_back("trace polynomial has more than one root above 2");
    if (above + inside + below < static_cast<std::size_t>(d))
        out.reasons.push_back("trace polynomial has non-real roots");
    if (!out.reasons.empty()) return out;

    SalemPolynomial S;
    S.poly = f;
    S.trace_poly = f0;
    S.lambda = bisect_lambda(f, initial_lambda_bracket(f), 32);
    RatPoly fr = to_rat(f);
    S.s_at_1 = fr.eval(Rat(1)).get_num();
    S.s_at_minus1 = fr.eval(Rat(-1)).get_num();
    Rat delta = S.s_at_1 * S.s_at_minus1;
    if (d % 2) delta = -delta;
    S.disc_class = square_class(delta);
    S.disc = discriminant(f).get_num();
    S.field = NumberField::create(f);
    out.salem = std::move(S);
    return out;
}

SalemValidation validate_salem(const RatPoly& f)
{
    for (const auto& c : f.coeffs())
        if (c.get_den() != 1) {
            SalemValidation out;
            out.reasons.push_back("non-integer coefficients");
            return out;
        }
    return validate_salem(to_int(f));
}

SalemPolynomial certify_salem(const IntPoly& f)
{
    auto v = validate_salem(f);
    if (v.valid()) return *v.salem;
    std::string msg = "not a Salem polynomial: ";
    for (std::size_t i = 0; i < v.reasons.size(); ++i) msg += (i ? "; " : "") + v.reasons[i];
    throw InvalidInput(msg);
}

RootInterval salem_lambda(const SalemPolynomial& S, unsigned precision_bits)
{
    return bisect_lambda(S.poly, S.lambda, precision_bits);
}

SquareClass salem_disc_class(const SalemPolynomial& S)
{
    bool negative = S.degree() % 4 == 0;
    if ((S.disc_class.sign < 0) != negative)
        throw Error("sign law for the Salem discriminant violated; certificate is inconsistent");
    return S.disc_class;
}

std::vector<RootInterval> interior_trace_roots(const SalemPolynomial& S)
{
    auto roots = isolate_real_roots(to_rat(S.trace_poly));
    // Exactly one root exceeds 2 and it is the largest.
    roots.pop_back();
    return roots;
}

const char* to_string(SplitStatus s)
{
    switch (s) {
    case SplitStatus::Split: return "split";
    case SplitStatus::NonSplit: return "nonsplit";
    case SplitStatus::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

SplitStatus split_status(const SalemPolynomial& S, const Int& p)
{
    if (!is_prime(p)) throw InvalidInput(p.get_str() + " is not prime");
    if (mpz_divisible_p(S.disc.get_mpz_t(), p.get_mpz_t())) {
        if (!is_padic_square(S.disc_class.value(), p)) return SplitStatus::NonSplit;
        return SplitStatus::Indeterminate;
    }
    for (const auto& g : factor_squarefree_mod_p(ModPoly(p, S.poly))) {
        // Monic reciprocal of g: reverse and scale by g(0)^-1.
        std::vector<Int> rev(g.coeffs().rbegin(), g.coeffs().rend());
        ModPoly ghat = ModPoly(p, rev).monic();
        if (ghat == g) return SplitStatus::NonSplit;
    }
    return SplitStatus::Split;
}

std::vector<Int> disc_primes(const SalemPolynomial& S)
{
    // disc(S) = +-S(1)S(-1)disc(f0)^2 keeps the factored numbers small.
    std::set<Int> primes;
    for (const auto& p : prime_divisors(Int(S.s_at_1 * S.s_at_minus1))) primes.insert(p);
    for (const auto& p : prime_divisors(discriminant(S.trace_poly).get_num())) primes.insert(p);
    std::vector<Int> out;
    for (const auto& p : primes)
        if (mpz_divisible_p(S.disc.get_mpz_t(), p.get_mpz_t())) out.push_back(p);
    return out;
}

const char* to_string(RealizationResult::Outcome o)
{
    switch (o) {
    case RealizationResult::Outcome::Yes: return "yes";
    case RealizationResult::Outcome::No: return "no";
    case RealizationResult::Outcome::Conditional: return "conditional";
    }
    return "no";
}

RealizationResult realization_check(const SalemPolynomial& S, const QuadraticFormQ& U)
{
    RealizationResult out;
    int n = S.degree(), d = S.half_degree();
    auto add = [&](std::string cond, std::string value, bool pass) {
        out.evidence.push_back({std::move(cond), std::move(value), pass});
        return pass;
    };
    auto no = [&](std::string why) {
        out.outcome = RealizationResult::Outcome::No;
        out.reason = std::move(why);
        return out;
    };

    if (!add("dimension", std::to_string(U.dim()) + " vs " + std::to_string(n), U.dim() == static_cast<std::size_t>(n)))
        return no("dimension mismatch");
    // (-1)^d * Delta_E = S(1)S(-1) as square classes.
    SquareClass want = square_class(Rat(S.s_at_1 * S.s_at_minus1));
    SquareClass have = U.det_class();
    if (!add("determinant", have.to_string() + " vs " + want.to_string(), have == want))
        return no("determinant class mismatch");
    Signature sig = U.signature();
    bool odd = (sig.pos % 2 == 1) && (sig.neg % 2 == 1);
    if (!add("signature", "(" + std::to_string(sig.pos) + "," + std::to_string(sig.neg) + ")", odd))
        return no("signature is not of the form (1+2a, 1+2b)");

    std::set<Int> bad{Int(2)};
    for (const auto& p : disc_primes(S)) bad.insert(p);
    for (const auto& p : U.bad_primes()) bad.insert(p);
    QuadraticFormQ hd = power(hyperbolic_plane(), d);
    for (const auto& p : bad) {
        SplitStatus st = split_status(S, p);
        bool local = equivalent_over_Qp(U, hd, Place::prime(p));
        std::string label = "local condition at " + p.get_str();
        std::string value = std::string(to_string(st)) + (local ? ", locally hyperbolic" : ", not locally hyperbolic");
        if (st == SplitStatus::Split) {
            if (!add(label, value, local)) return no("local condition fails at split prime " + p.get_str());
        } else if (st == SplitStatus::NonSplit) {
            add(label, value, true);
        } else {
            add(label, value, local);
            if (!local) out.unresolved.push_back(p);
        }
    }
    if (!out.unresolved.empty()) {
        out.outcome = RealizationResult::Outcome::Conditional;
        out.reason = "local splitting undetermined at ramified primes";
        return out;
    }
    out.outcome = RealizationResult::Outcome::Yes;
    return out;
}

FieldElement salem_trace_element(const SalemPolynomial& S)
{
    FieldElement x = S.field->gen();
    return x + x.inverse();
}

FieldElement salem_fixed_element(const SalemPolynomial& S, const RatPoly& h)
{
    FieldElement y = salem_trace_element(S);
    FieldElement acc = S.field->from_rational(0);
    const auto& c = h.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + S.field->from_rational(*it);
    return acc;
}

AlphaSearch find_alpha_with_signature(const SalemPolynomial& S, int a_plus, std::size_t budget)
{
    int d = S.half_degree();
    if (a_plus < 0 || a_plus > d - 1) throw InvalidInput("a+ must lie in [0, d-1]");
    AlphaSearch out;
    out.budget = budget;
    auto interior = interior_trace_roots(S);
    RatPoly f0 = to_rat(S.trace_poly);

    std::vector<RatPoly> candidates{RatPoly{1}, RatPoly{-1}};
    for (long c = -1; c <= 1; ++c) candidates.push_back(RatPoly(std::vector<Rat>{Rat(-c), Rat(1)}));
    if (a_plus > 0 && a_plus < d - 1) {
        // y - c is positive exactly at the interior roots above c.
        const auto& below = interior[d - 2 - a_plus];
        const auto& above = interior[d - 1 - a_plus];
        Rat c = below.hi < above.lo ? simplest_rational_between(below.hi, above.lo) : below.hi;
        candidates.push_back(RatPoly(std::vector<Rat>{Rat(-c.get_num()), Rat(c.get_den())}));
    }
    for (const auto& h : candidates) {
        if (out.tried >= budget) break;
        ++out.tried;
        auto signs = signs_at_roots(h, f0, interior);
        int pos = 0;
        for (int s : signs) pos += (s > 0);
        if (pos == a_plus) {
            out.h = h;
            out.alpha = salem_fixed_element(S, h);
            return out;
        }
    }
    return out;
}

RelativeSalemPresentation make_relative_presentation(const FieldPtr& base, const FieldElement& alpha)
{
    if (alpha.field() != base) throw InvalidInput("alpha must lie in the base field");
    if (!is_totally_real(*base)) throw InvalidInput("base field must be totally real");
    auto signs = sign_at_real_embeddings(alpha);
    int pos = 0;
    for (int s : signs) pos += (s > 0);
    if (pos != 1) throw InvalidInput("alpha must be positive at exactly one real embedding");
    return RelativeSalemPresentation{base, alpha};
}

} // namespace salemhk
