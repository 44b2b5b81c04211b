#include "salemhk/qforms.hpp"

#include "salemhk/errors.hpp"

#include <mutex>
#include <set>

namespace salemhk {

std::vector<Rat> diagonalize(const RatMatrix& gram)
{
    if (!gram.symmetric()) throw InvalidInput("Gram matrix is not symmetric");
    RatMatrix m = gram;
    std::size_t n = m.rows();
    std::vector<Rat> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) == 0) {
            std::size_t j = i + 1;
            while (j < n && m(j, j) == 0) ++j;
            if (j < n) {
                for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
                for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
            } else {
                j = i + 1;
                while (j < n && m(i, j) == 0) ++j;
                if (j == n) throw DegenerateForm("form is degenerate");
                // e_i <- e_i + e_j makes the pivot 2*m(i,j) != 0.
                for (std::size_t c = 0; c < n; ++c) m(i, c) += m(j, c);
                for (std::size_t r = 0; r < n; ++r) m(r, i) += m(r, j);
            }
        }
        const Rat pivot = m(i, i);
        out.push_back(pivot);
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m(r, i) == 0) continue;
            Rat f = m(r, i) / pivot;
            for (std::size_t c = i + 1; c < n; ++c) m(r, c) -= f * m(i, c);
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            m(r, i) = 0;
            m(i, r) = 0;
        }
    }
    return out;
}

struct QuadraticFormQ::State {
    RatMatrix gram;
    std::vector<Rat> diag;
    bool is_diag = false;
    Rat det;
    Signature sig;

    mutable std::once_flag det_once;
    mutable SquareClass det_class;
    mutable std::once_flag hasse_once;
    mutable PlaceSet hasse;
    mutable std::once_flag bad_once;
    mutable std::vector<Int> bad;
};

namespace {

int local_hasse(const std::vector<Rat>& diag, const Place& v)
{
    if (v.is_real()) {
        long k = 0;
        for (const auto& a : diag) k += (a < 0);
        return ((k * (k - 1) / 2) % 2) ? -1 : 1;
    }
    // prod_{i<j} (a_i, a_j)_p = prod_j (a_1...a_{j-1}, a_j)_p
    int h = 1;
    Rat prefix = 1;
    for (const auto& a : diag) {
        h *= hilbert_symbol(prefix, a, v);
        prefix *= a;
    }
    return h;
}

} // namespace

QuadraticFormQ QuadraticFormQ::from_diag(std::vector<Rat> entries)
{
    auto s = std::make_shared<State>();
    std::size_t n = entries.size();
    s->gram = RatMatrix(n, n);
    s->det = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (entries[i] == 0) throw DegenerateForm("zero diagonal entry");
        s->gram(i, i) = entries[i];
        s->det *= entries[i];
        (entries[i] > 0 ? s->sig.pos : s->sig.neg) += 1;
    }
    s->diag = std::move(entries);
    s->is_diag = true;
    return QuadraticFormQ(std::move(s));
}

QuadraticFormQ QuadraticFormQ::from_gram(RatMatrix gram)
{
    auto s = std::make_shared<State>();
    s->diag = diagonalize(gram);
    s->gram = std::move(gram);
    s->det = 1;
    for (const auto& a : s->diag) {
        s->det *= a;
        (a > 0 ? s->sig.pos : s->sig.neg) += 1;
    }
    bool diag = true;
    for (std::size_t i = 0; i < s->gram.rows() && diag; ++i)
        for (std::size_t j = 0; j < s->gram.cols(); ++j)
            if (i != j && s->gram(i, j) != 0) {
                diag = false;
                break;
            }
    s->is_diag = diag;
    return QuadraticFormQ(std::move(s));
}

std::size_t QuadraticFormQ::dim() const
{
    return s_->diag.size();
}

bool QuadraticFormQ::diagonal_representation() const
{
    return s_->is_diag;
}

const RatMatrix& QuadraticFormQ::gram() const
{
    return s_->gram;
}

const std::vector<Rat>& QuadraticFormQ::diagonal() const
{
    return s_->diag;
}

Rat QuadraticFormQ::det() const
{
    return s_->det;
}

SquareClass QuadraticFormQ::det_class() const
{
    std::call_once(s_->det_once, [&] { s_->det_class = square_class(s_->det); });
    return s_->det_class;
}

Signature QuadraticFormQ::signature() const
{
    return s_->sig;
}

int QuadraticFormQ::hasse_at(const Place& v) const
{
    return local_hasse(s_->diag, v);
}

std::vector<Int> QuadraticFormQ::bad_primes() const
{
    std::call_once(s_->bad_once, [&] {
        // Off this set the form is Z_p-unimodular, so its Hasse sign is +1.
        std::set<Int> primes{Int(2)};
        Int den_lcm = 1;
        const auto& g = s_->gram;
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), g(i, j).get_den_mpz_t());
        for (const auto& p : prime_divisors(den_lcm)) primes.insert(p);
        for (const auto& p : prime_divisors(s_->det.get_num())) primes.insert(p);
        s_->bad.assign(primes.begin(), primes.end());
    });
    return s_->bad;
}

const PlaceSet& QuadraticFormQ::hasse() const
{
    std::call_once(s_->hasse_once, [&] {
        PlaceSet out;
        for (const auto& p : bad_primes())
            if (local_hasse(s_->diag, Place::prime(p)) < 0) out.insert(Place::prime(p));
        if (local_hasse(s_->diag, Place::infinity()) < 0) out.insert(Place::infinity());
        s_->hasse = std::move(out);
    });
    return s_->hasse;
}

FormInvariants QuadraticFormQ::invariants() const
{
    return FormInvariants{dim(), det_class(), signature(), hasse()};
}

QuadraticFormQ QuadraticFormQ::scaled(const Rat& c) const
{
    if (c == 0) throw DegenerateForm("scaling by zero");
    if (s_->is_diag) {
        std::vector<Rat> d = s_->diag;
        for (auto& a : d) a *= c;
        return from_diag(std::move(d));
    }
    return from_gram(c * s_->gram);
}

QuadraticFormQ direct_sum(const std::vector<QuadraticFormQ>& parts)
{
    bool all_diag = true;
    for (const auto& p : parts) all_diag = all_diag && p.diagonal_representation();
    if (all_diag) {
        std::vector<Rat> d;
        for (const auto& p : parts) d.insert(d.end(), p.diagonal().begin(), p.diagonal().end());
        return QuadraticFormQ::from_diag(std::move(d));
    }
    std::vector<RatMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.gram());
    return QuadraticFormQ::from_gram(block_diagonal(blocks));
}

QuadraticFormQ direct_sum(const QuadraticFormQ& a, const QuadraticFormQ& b)
{
    return direct_sum(std::vector<QuadraticFormQ>{a, b});
}

QuadraticFormQ power(const QuadraticFormQ& f, unsigned n)
{
    if (n == 0) throw InvalidInput("zero-dimensional forms are not supported");
    return direct_sum(std::vector<QuadraticFormQ>(n, f));
}

bool equivalent_over_Qp(const QuadraticFormQ& f, const QuadraticFormQ& g, const Place& v)
{
    if (f.dim() != g.dim()) return false;
    if (v.is_real()) return f.signature() == g.signature();
    if (!is_padic_square(f.det() * g.det(), v.p)) return false;
    return f.hasse_at(v) == g.hasse_at(v);
}

bool equivalent_over_Q(const QuadraticFormQ& f, const QuadraticFormQ& g)
{
    return f.dim() == g.dim() && f.signature() == g.signature() && f.det_class() == g.det_class() &&
           f.hasse() == g.hasse();
}

bool witt_is_torsion(const QuadraticFormQ& f, const QuadraticFormQ& g)
{
    return f.signature().index() == g.signature().index();
}

QuadraticFormQ hyperbolic_plane()
{
    return QuadraticFormQ::from_gram(RatMatrix::from_rows({{0, 1}, {1, 0}}));
}

QuadraticFormQ identity_form(unsigned n)
{
    if (n == 0) throw InvalidInput("I(n) needs n >= 1");
    return QuadraticFormQ::from_diag(std::vector<Rat>(n, Rat(1)));
}

QuadraticFormQ negative_identity_form(unsigned n)
{
    if (n == 0) throw InvalidInput("negI(n) needs n >= 1");
    return QuadraticFormQ::from_diag(std::vector<Rat>(n, Rat(-1)));
}

QuadraticFormQ vk3_form()
{
    return direct_sum(negative_identity_form(16), power(hyperbolic_plane(), 3));
}

QuadraticFormQ bbf_form(BBFType type, long n)
{
    auto h3 = power(hyperbolic_plane(), 3);
    switch (type) {
    case BBFType::Kummer:
        if (n < 2) throw InvalidInput("Kummer type needs n >= 2");
        return direct_sum(h3, QuadraticFormQ::from_diag({Rat(-2 * (n + 1))}));
    case BBFType::OG6:
        return direct_sum(h3, QuadraticFormQ::from_diag({Rat(-1), Rat(-1)}));
    case BBFType::K3n:
        if (n < 2) throw InvalidInput("K3^[n] type needs n >= 2");
        return direct_sum(vk3_form(), QuadraticFormQ::from_diag({Rat(-2 * (n - 1))}));
    case BBFType::OG10:
        return direct_sum(vk3_form(), QuadraticFormQ::from_diag({Rat(-2), Rat(-6)}));
    }
    throw InvalidInput("unknown BBF type");
}

std::optional<BBFType> parse_bbf_type(const std::string& name)
{
    if (name == "kummer") return BBFType::Kummer;
    if (name == "og6") return BBFType::OG6;
    if (name == "k3n") return BBFType::K3n;
    if (name == "og10") return BBFType::OG10;
    return std::nullopt;
}

QuadraticFormQ named_form(const std::string& name, const NamedFormParams& params)
{
    auto count = [&](long dflt) {
        long n = params.n.value_or(dflt);
        if (n < 1) throw InvalidInput("named form '" + name + "' needs n >= 1");
        return static_cast<unsigned>(n);
    };
    if (name == "H") return power(hyperbolic_plane(), count(1));
    if (name == "I") {
        if (!params.n) throw InvalidInput("named form 'I' needs n");
        return identity_form(count(1));
    }
    if (name == "negI") {
        if (!params.n) throw InvalidInput("named form 'negI' needs n");
        return negative_identity_form(count(1));
    }
    if (name == "VK3") return vk3_form();
    if (name == "BBF") {
        auto t = parse_bbf_type(params.type);
        if (!t) throw InvalidInput("unknown BBF type '" + params.type + "'");
        bool needs_n = (*t == BBFType::Kummer || *t == BBFType::K3n);
        if (needs_n && !params.n) throw InvalidInput("BBF type '" + params.type + "' needs n");
        return bbf_form(*t, params.n.value_or(0));
    }
    throw InvalidInput("unknown named form '" + name + "'");
}

} // namespace salemhk
