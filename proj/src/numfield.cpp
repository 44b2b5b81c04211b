#include "salemhk/numfield.hpp"

#include "salemhk/errors.hpp"

namespace salemhk {

NumberField::NumberField(Key, IntPoly f) : f_(std::move(f)), f_rat_(to_rat(f_))
{
    real_ = isolate_real_roots(f_rat_);
    int n = degree();
    const auto& a = f_.coeffs();
    traces_.assign(std::max(2 * n - 1, 1), Rat(0));
    traces_[0] = n;
    for (int k = 1; k < 2 * n - 1; ++k) {
        Rat s = 0;
        for (int i = 1; i <= std::min(k - 1, n); ++i) s += Rat(a[n - i]) * traces_[k - i];
        if (k <= n) s += Rat(k) * Rat(a[n - k]);
        traces_[k] = -s;
    }
}

FieldPtr NumberField::create(const IntPoly& min_poly)
{
    if (min_poly.degree() < 1) throw InvalidInput("field polynomial must have degree >= 1");
    if (!min_poly.monic()) throw InvalidInput("field polynomial must be monic");
    if (!irreducible_over_Q(min_poly)) throw InvalidInput("field polynomial " + to_string(min_poly) + " is reducible");
    return std::make_shared<const NumberField>(Key{}, min_poly);
}

RatPoly NumberField::reduce(const RatPoly& p) const
{
    if (p.degree() < degree()) return p;
    return rem(p, f_rat_);
}

FieldElement NumberField::element(std::vector<Rat> coeffs) const
{
    if (static_cast<int>(coeffs.size()) > degree()) return from_poly(RatPoly(std::move(coeffs)));
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement NumberField::from_poly(const RatPoly& p) const
{
    return FieldElement(shared_from_this(), reduce(p).coeffs());
}

FieldElement NumberField::from_rational(const Rat& q) const
{
    return FieldElement(shared_from_this(), {q});
}

FieldElement NumberField::one() const
{
    return from_rational(1);
}

FieldElement NumberField::gen() const
{
    return from_poly(RatPoly::x());
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coeffs) : f_(std::move(field)), c_(std::move(coeffs))
{
    std::size_t n = f_->degree();
    if (c_.size() > n) throw InvalidInput("element has more coefficients than the field degree");
    c_.resize(n, Rat(0));
}

bool FieldElement::is_zero() const
{
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool FieldElement::is_rational() const
{
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

namespace {

void same_field(const FieldElement& a, const FieldElement& b)
{
    if (a.field() != b.field() && !(a.field()->min_poly() == b.field()->min_poly()))
        throw InvalidInput("elements of different fields");
}

} // namespace

FieldElement FieldElement::operator-() const
{
    std::vector<Rat> c = c_;
    for (auto& v : c) v = -v;
    return FieldElement(f_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    same_field(a, b);
    std::vector<Rat> c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return FieldElement(a.f_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    return a + (-b);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    same_field(a, b);
    return a.f_->from_poly(a.as_poly() * b.as_poly());
}

FieldElement operator*(const Rat& s, const FieldElement& a)
{
    std::vector<Rat> c = a.c_;
    for (auto& v : c) v *= s;
    return FieldElement(a.f_, std::move(c));
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    return a.f_->min_poly() == b.f_->min_poly() && a.c_ == b.c_;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero()) throw InvalidInput("inverse of zero");
    // Extended Euclid on (a, f): u*a + v*f = 1.
    RatPoly r0 = to_rat(f_->min_poly()), r1 = as_poly();
    RatPoly u0, u1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.degree() != 0) throw InvalidInput("element is a zero divisor");
    return f_->from_poly(Rat(1 / r0.lead()) * u0);
}

FieldElement FieldElement::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    FieldElement result = f_->one(), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

RatMatrix FieldElement::multiplication_matrix() const
{
    std::size_t n = f_->degree();
    RatMatrix m(n, n);
    FieldElement col = *this;
    FieldElement x = f_->gen();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col.c_[i];
        if (j + 1 < n) col = col * x;
    }
    return m;
}

RatPoly FieldElement::charpoly() const
{
    // Faddeev-LeVerrier on the multiplication matrix.
    RatMatrix a = multiplication_matrix();
    std::size_t n = a.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix am = a * m;
        for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
        m = std::move(am);
        c[n - k] = -(a * m).trace() / Rat(static_cast<long>(k));
    }
    return RatPoly(std::move(c));
}

std::string FieldElement::to_string(const std::string& var) const
{
    return salemhk::to_string(as_poly(), var);
}

Rat trace(const FieldElement& e)
{
    const auto& s = e.field()->power_traces();
    Rat t = 0;
    for (std::size_t k = 0; k < e.coeffs().size(); ++k) t += e.coeffs()[k] * s[k];
    return t;
}

Rat norm(const FieldElement& e)
{
    return e.multiplication_matrix().determinant();
}

FieldSignature field_signature(const NumberField& F)
{
    int r = static_cast<int>(F.real_roots().size());
    return FieldSignature{r, (F.degree() - r) / 2};
}

bool is_totally_real(const NumberField& F)
{
    return static_cast<int>(F.real_roots().size()) == F.degree();
}

SquareClass field_disc_class(const NumberField& F)
{
    return square_class(discriminant(F.min_poly()));
}

std::vector<int> signs_at_roots(const RatPoly& g, const RatPoly& f, std::vector<RootInterval> roots)
{
    if (g.is_zero()) throw InvalidInput("sign of the zero element");
    std::vector<int> out;
    if (g.degree() == 0) {
        out.assign(roots.size(), sign(g.lead()));
        return out;
    }
    auto chain = sturm_chain(squarefree_part(g));
    for (auto iv : roots) {
        while (true) {
            Rat gl = g.eval(iv.lo), gh = g.eval(iv.hi);
            if (gl != 0 && gh != 0 && count_real_roots_in(chain, iv.lo, iv.hi) == 0) {
                out.push_back(sign(gl));
                break;
            }
            iv = refine_root(f, iv, iv.width() / 2);
        }
    }
    return out;
}

std::vector<int> sign_at_real_embeddings(const FieldElement& e)
{
    if (e.is_zero()) throw InvalidInput("sign of the zero element");
    const auto& F = *e.field();
    return signs_at_roots(e.as_poly(), to_rat(F.min_poly()), F.real_roots());
}

Involution::Involution(FieldPtr f, std::vector<FieldElement> powers, bool identity)
    : f_(std::move(f)), powers_(std::move(powers)), identity_(identity)
{
}

namespace {

std::vector<FieldElement> powers_of(const FieldElement& img)
{
    std::vector<FieldElement> p;
    int n = img.field()->degree();
    p.push_back(img.field()->one());
    for (int k = 1; k < n; ++k) p.push_back(p.back() * img);
    return p;
}

} // namespace

Involution Involution::identity(const FieldPtr& F)
{
    return Involution(F, powers_of(F->gen()), true);
}

Involution Involution::reciprocal(const FieldPtr& F)
{
    const auto& c = F->min_poly().coeffs();
    if (!std::equal(c.begin(), c.end(), c.rbegin()))
        throw InvalidInvolution("x -> 1/x needs a self-reciprocal minimal polynomial");
    return Involution(F, powers_of(F->gen().inverse()), false);
}

Involution Involution::from_image(const FieldElement& image)
{
    const FieldPtr& F = image.field();
    auto powers = powers_of(image);
    // f(image) = 0 checks that x -> image is a field homomorphism.
    FieldElement acc = F->from_rational(0);
    const auto& f = F->min_poly().coeffs();
    FieldElement pk = F->one();
    for (std::size_t k = 0; k < f.size(); ++k) {
        acc = acc + Rat(f[k]) * pk;
        pk = pk * image;
    }
    if (!acc.is_zero()) throw InvalidInvolution("image is not a root of the minimal polynomial");
    Involution inv(F, powers, image == F->gen());
    if (!(inv.apply(image) == F->gen())) throw InvalidInvolution("map does not square to the identity");
    return inv;
}

FieldElement Involution::apply(const FieldElement& e) const
{
    if (identity_) return e;
    FieldElement acc = f_->from_rational(0);
    for (std::size_t k = 0; k < e.coeffs().size(); ++k)
        if (e.coeffs()[k] != 0) acc = acc + e.coeffs()[k] * powers_[k];
    return acc;
}

RatMatrix trace_form_gram(const FieldElement& alpha, const Involution& inv)
{
    if (alpha.is_zero()) throw InvalidInput("trace form of the zero element");
    if (!inv.fixes(alpha)) throw InvalidInput("alpha is not fixed by the involution");
    const auto& F = *alpha.field();
    int n = F.degree();
    const auto& s = F.power_traces();
    RatMatrix g(n, n);
    FieldElement xj_bar = F.one();
    FieldElement xbar = inv.apply(F.gen());
    for (int j = 0; j < n; ++j) {
        FieldElement beta = alpha * xj_bar;
        for (int i = 0; i < n; ++i) {
            Rat t = 0;
            for (int k = 0; k < n; ++k)
                if (beta.coeffs()[k] != 0) t += beta.coeffs()[k] * s[i + k];
            g(i, j) = t;
        }
        xj_bar = xj_bar * xbar;
    }
    return g;
}

RatPoly FixedSubfield::express(const FieldElement& e) const
{
    const auto& F = *y.field();
    int n = F.degree(), d = min_poly.degree();
    RatMatrix a(n, d);
    FieldElement yk = F.one();
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i < n; ++i) a(i, k) = yk.coeffs()[i];
        yk = yk * y;
    }
    auto sol = solve_linear(a, e.coeffs());
    if (!sol) throw InvalidInput("element is not fixed by the involution");
    return RatPoly(*sol);
}

FixedSubfield fixed_subfield(const Involution& inv)
{
    if (inv.is_identity()) throw InvalidInvolution("the identity has no proper fixed field");
    const FieldPtr& F = inv.field();
    int n = F->degree();
    if (n % 2) throw InvalidInvolution("nontrivial involution on an odd-degree field");
    FieldElement x = F->gen(), xb = inv.apply(x);
    FieldElement s = x + xb, p = x * xb;
    std::vector<FieldElement> candidates{s, p};
    for (long a = 1; a <= 3; ++a)
        for (long b = -2; b <= 2; ++b)
            if (b != 0) candidates.push_back(Rat(a) * s + Rat(b) * p);
    candidates.push_back(s * s + p);
    for (const auto& y : candidates) {
        RatPoly g = squarefree_part(y.charpoly());
        if (2 * g.degree() != n) continue;
        FixedSubfield out{y, g, RatPoly(), isolate_real_roots(g)};
        FieldElement diff = x - xb;
        out.delta = out.express(diff * diff);
        return out;
    }
    throw InvalidInvolution("no generator of the fixed field among the standard candidates");
}

} // namespace salemhk
