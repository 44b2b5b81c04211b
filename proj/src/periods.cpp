#include "salemhk/periods.hpp"

#include "salemhk/errors.hpp"

#include <cmath>
#include <random>

namespace salemhk {

namespace {

using RealMatrix = std::vector<std::vector<BigFloat>>;

RealMatrix to_big(const RatMatrix& g, mpfr_prec_t prec)
{
    RealMatrix out(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) out[i].emplace_back(g(i, j), prec);
    return out;
}

BigComplex pair(const RealMatrix& g, const ComplexVector& u, const ComplexVector& v)
{
    mpfr_prec_t prec = u.front().re.precision();
    BigComplex acc(prec);
    for (std::size_t i = 0; i < u.size(); ++i) {
        BigComplex row(prec);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (g[i][j].sign() != 0) row += g[i][j] * v[j];
        acc += u[i] * row;
    }
    return acc;
}

// sum |u_i| |g_ij| |v_j|, the natural size of pair(g, u, v).
BigFloat pair_scale(const RealMatrix& g, const ComplexVector& u, const ComplexVector& v)
{
    BigFloat acc(u.front().re.precision());
    std::vector<BigFloat> mv;
    for (const auto& x : v) mv.push_back(x.modulus());
    for (std::size_t i = 0; i < u.size(); ++i) {
        BigFloat mu = u[i].modulus();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (g[i][j].sign() != 0) acc += mu * abs(g[i][j]) * mv[j];
    }
    return acc;
}

double relative(const BigComplex& value, const BigFloat& scale)
{
    if (scale.sign() == 0) return value.modulus().sign() == 0 ? 0.0 : HUGE_VAL;
    return (value.modulus() / scale).to_double();
}

ComplexVector conj(const ComplexVector& v)
{
    ComplexVector out;
    for (const auto& x : v) out.push_back(x.conj());
    return out;
}

BigFloat euclid(const ComplexVector& v)
{
    BigFloat acc(v.front().re.precision());
    for (const auto& x : v) acc += x.norm2();
    return sqrt(acc);
}

// Coefficients of f(x) / (x - z), lowest degree first.
ComplexVector synthetic_quotient(const IntPoly& f, const BigComplex& z)
{
    mpfr_prec_t prec = z.re.precision();
    int n = f.degree();
    ComplexVector q(n, BigComplex(prec));
    BigComplex carry{BigFloat(f.coeffs()[n], prec), BigFloat(prec)};
    for (int k = n - 1; k >= 0; --k) {
        q[k] = carry;
        carry = z * carry + BigComplex{BigFloat(f.coeffs()[k], prec), BigFloat(prec)};
    }
    return q;
}

// |M v - s v| / |s v| for the companion matrix M of the monic f, applied
// blockwise when v is a concatenation of several power-basis vectors.
double eigen_residual(const IntPoly& f, const ComplexVector& v, const BigComplex& s)
{
    std::size_t n = f.degree();
    mpfr_prec_t prec = s.re.precision();
    ComplexVector diff;
    ComplexVector sv;
    for (std::size_t base = 0; base < v.size(); base += n) {
        const BigComplex& top = v[base + n - 1];
        for (std::size_t i = 0; i < n; ++i) {
            BigComplex mv = BigFloat(Rat(-f.coeffs()[i]), prec) * top;
            if (i > 0) mv += v[base + i - 1];
            BigComplex sx = s * v[base + i];
            diff.push_back(mv - sx);
            sv.push_back(sx);
        }
    }
    BigFloat den = euclid(sv);
    if (den.sign() == 0) return HUGE_VAL;
    return (euclid(diff) / den).to_double();
}

PeriodResiduals residuals_against(const PeriodData& P, const RatMatrix& gram)
{
    if (P.omega.size() != gram.rows()) throw InvalidInput("period and Gram matrix sizes differ");
    RealMatrix g = to_big(gram, P.precision);
    PeriodResiduals r = P.residuals;
    BigFloat scale = pair_scale(g, P.omega, P.omega);
    r.isotropy = relative(pair(g, P.omega, P.omega), scale);
    BigComplex pb = pair(g, P.omega, conj(P.omega));
    r.pairing = scale.sign() == 0 ? 0.0 : (pb.re / scale).to_double();
    r.t11 = 0;
    for (const auto& t : t11_basis(P, gram)) {
        double e = relative(pair(g, P.omega, t), pair_scale(g, P.omega, t));
        if (e > r.t11) r.t11 = e;
    }
    return r;
}

} // namespace

std::vector<ComplexVector> t11_basis(const PeriodData& P, const RatMatrix& gram)
{
    std::size_t n = P.omega.size();
    mpfr_prec_t prec = P.precision;
    RealMatrix g = to_big(gram, prec);
    ComplexVector a, b;
    for (const auto& w : P.omega) {
        a.push_back({w.re, BigFloat(prec)});
        b.push_back({w.im, BigFloat(prec)});
    }
    BigFloat aa = pair(g, a, a).re, ab = pair(g, a, b).re, bb = pair(g, b, b).re;
    BigFloat det = aa * bb - ab * ab;
    if (det.sign() == 0) throw Error("real and imaginary parts of the period are dependent");

    // Drop two coordinates on which (a, b) has a large 2x2 minor; the
    // projections of the remaining unit vectors then form a basis.
    std::size_t i0 = 0;
    for (std::size_t k = 1; k < n; ++k)
        if (abs(a[k].re) > abs(a[i0].re)) i0 = k;
    std::size_t j0 = i0 == 0 ? 1 : 0;
    BigFloat best(prec);
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i0) continue;
        BigFloat minor = abs(a[i0].re * b[k].re - a[k].re * b[i0].re);
        if (minor > best) {
            best = minor;
            j0 = k;
        }
    }

    std::vector<ComplexVector> out;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i0 || k == j0) continue;
        // t = e_k - p a - q b with (t, a) = (t, b) = 0.
        BigFloat ea(prec), eb(prec);
        for (std::size_t j = 0; j < n; ++j) {
            ea += g[k][j] * a[j].re;
            eb += g[k][j] * b[j].re;
        }
        BigFloat p = (ea * bb - eb * ab) / det;
        BigFloat q = (eb * aa - ea * ab) / det;
        ComplexVector t;
        for (std::size_t j = 0; j < n; ++j) {
            BigFloat v = -(p * a[j].re) - q * b[j].re;
            if (j == k) v += BigFloat(1L, prec);
            t.push_back({v, BigFloat(prec)});
        }
        out.push_back(std::move(t));
    }
    return out;
}

PeriodData period_from_salem(const SalemPolynomial& S, const FieldElement& alpha, mpfr_prec_t bits)
{
    int d = S.half_degree();
    TransferResult tr = transfer_hermitian_rank1(S, alpha);
    Signature want{3, 2 * d - 3};
    if (!(*tr.closed_form == want))
        throw SignatureMismatch("transfer of alpha has signature (" + std::to_string(tr.closed_form->pos) + "," +
                                std::to_string(tr.closed_form->neg) + "), need (3," + std::to_string(2 * d - 3) + ")");

    RatPoly f0 = to_rat(S.trace_poly);
    FixedSubfield e0{salem_trace_element(S), f0, RatPoly(), {}};
    auto interior = interior_trace_roots(S);
    auto signs = signs_at_roots(e0.express(alpha), f0, interior);
    int idx = -1;
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] > 0) idx = static_cast<int>(i);
    if (idx < 0) throw Error("no complex place where alpha is positive");

    Rat width(1);
    mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), bits + 16);
    RootInterval iv = refine_root(f0, interior[idx], width);
    Rat mid = (iv.lo + iv.hi) / 2;

    // z = e^{i t} with 2 cos t = theta.
    BigFloat half_theta(mid / 2, bits);
    BigFloat one(1L, bits);
    BigComplex z{half_theta, sqrt(one - half_theta * half_theta)};

    PeriodData P;
    P.precision = bits;
    P.embedding_index = idx;
    P.eigenvalue = z;
    P.family_dimension = 0;
    P.omega = synthetic_quotient(S.poly, z);
    P.residuals.eigen = eigen_residual(S.poly, P.omega, z);
    P.residuals = residuals_against(P, tr.gram);
    if (!(P.residuals.pairing > 0)) throw Error("period pairing is not positive at the chosen place");
    return P;
}

PeriodData period_from_rm(const DiagonalFormOverField& W, int sigma_index, std::uint64_t seed, mpfr_prec_t bits)
{
    if (!W.field || !is_totally_real(*W.field)) throw InvalidInput("RM periods need a totally real field");
    const auto& F = *W.field;
    if (sigma_index < 0 || sigma_index >= F.degree()) throw InvalidInput("embedding index out of range");
    std::size_t m = W.entries.size();
    int positive = 0;
    for (const auto& a : W.entries) positive += sign_at_real_embeddings(a)[sigma_index] > 0;
    if (positive != 2 && positive != 3)
        throw SignatureMismatch("W has " + std::to_string(positive) + " positive entries at embedding " +
                                std::to_string(sigma_index) + ", need 2 or 3");

    TransferResult tr = transfer_quadratic(W);
    Rat width(1);
    mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), bits + 16);
    RootInterval iv = refine_root(to_rat(F.min_poly()), F.real_roots()[sigma_index], width);
    BigFloat r((iv.lo + iv.hi) / 2, bits);
    BigComplex rc{r, BigFloat(bits)};
    ComplexVector e = synthetic_quotient(F.min_poly(), rc);
    std::size_t n = e.size();

    // Values of the form on the sigma-eigenvector of each block.
    RealMatrix g = to_big(tr.gram, bits);
    std::vector<BigFloat> q;
    for (std::size_t i = 0; i < m; ++i) {
        BigFloat acc(bits);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) acc += e[a].re * g[i * n + a][i * n + b] * e[b].re;
        q.push_back(acc);
    }
    auto Q = [&](const std::vector<BigFloat>& u, const std::vector<BigFloat>& v) {
        BigFloat acc(bits);
        for (std::size_t i = 0; i < m; ++i) acc += q[i] * u[i] * v[i];
        return acc;
    };

    // Random real a, b with Q(a) = Q(b) > 0 and Q(a, b) = 0; then c = a + ib
    // is isotropic with Q(c, conj c) > 0. The choices form an open set of
    // dimension m - 2 in the projectivized quadric.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    auto draw = [&]() {
        std::vector<BigFloat> v;
        for (std::size_t i = 0; i < m; ++i) v.emplace_back(Rat(unif(rng)), bits);
        return v;
    };
    const int budget = 1000;
    std::vector<BigFloat> a, b;
    bool found = false;
    for (int attempt = 0; attempt < budget && !found; ++attempt) {
        a = draw();
        BigFloat qa = Q(a, a);
        if (qa.sign() <= 0) continue;
        b = draw();
        BigFloat t = Q(a, b) / qa;
        for (std::size_t i = 0; i < m; ++i) b[i] -= t * a[i];
        BigFloat qb = Q(b, b);
        if (qb.sign() <= 0) continue;
        BigFloat s = sqrt(qa / qb);
        for (auto& x : b) x *= s;
        found = true;
    }
    if (!found) throw SamplingFailed("no admissible period after " + std::to_string(budget) + " samples");

    PeriodData P;
    P.precision = bits;
    P.embedding_index = sigma_index;
    P.eigenvalue = rc;
    P.family_dimension = static_cast<int>(m) - 2;
    for (std::size_t i = 0; i < m; ++i) {
        BigComplex c{a[i], b[i]};
        for (std::size_t k = 0; k < n; ++k) P.omega.push_back(c * e[k]);
    }
    P.residuals.eigen = eigen_residual(F.min_poly(), P.omega, rc);
    P.residuals = residuals_against(P, tr.gram);
    return P;
}

PeriodReport verify_period(const PeriodData& P, const RatMatrix& gram, double tol)
{
    PeriodReport rep;
    rep.residuals = residuals_against(P, gram);
    rep.isotropic = rep.residuals.isotropy <= tol;
    rep.positive = rep.residuals.pairing > 0;
    rep.orthogonal = rep.residuals.t11 <= tol;
    return rep;
}

RatMatrix companion_matrix(const IntPoly& f)
{
    if (!f.monic()) throw InvalidInput("companion matrix needs a monic polynomial");
    std::size_t n = f.degree();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n) m(i + 1, i) = 1;
        m(i, n - 1) = Rat(-f.coeffs()[i]);
    }
    return m;
}

bool is_isometry(const RatMatrix& m, const RatMatrix& gram)
{
    return m.transpose() * gram * m == gram;
}

bool companion_isometry_check(const SalemPolynomial& S, const FieldElement& alpha)
{
    RatMatrix g = trace_form_gram(alpha, Involution::reciprocal(S.field));
    return is_isometry(companion_matrix(S.poly), g);
}

} // namespace salemhk
