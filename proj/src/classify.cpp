#include "salemhk/classify.hpp"

#include "salemhk/bigfloat.hpp"
#include "salemhk/errors.hpp"

#include <set>

namespace salemhk {

HKType HKType::parse(const std::string& name, std::optional<long> n)
{
    HKType t;
    if (name == "k3") {
        t.kind = Kind::K3;
    } else if (name == "kummer" || name == "k3n") {
        t.kind = name == "kummer" ? Kind::Kummer : Kind::K3Hilb;
        if (!n || *n < 2) throw InvalidInput(name + " needs n >= 2");
        t.n = *n;
    } else if (name == "og6") {
        t.kind = Kind::OG6;
    } else if (name == "og10") {
        t.kind = Kind::OG10;
    } else {
        throw InvalidInput("unknown hyperkaehler type '" + name + "'");
    }
    return t;
}

std::string HKType::to_string() const
{
    switch (kind) {
    case Kind::K3: return "k3";
    case Kind::Kummer: return "kummer(" + std::to_string(n) + ")";
    case Kind::K3Hilb: return "k3n(" + std::to_string(n) + ")";
    case Kind::OG6: return "og6";
    case Kind::OG10: return "og10";
    }
    return "k3";
}

namespace {

std::string str(long v)
{
    return std::to_string(v);
}

Evidence bound(const std::string& what, long value, long limit)
{
    return {what + " <= " + str(limit), str(value), value <= limit};
}

Verdict answer(bool yes, std::vector<Evidence> evidence)
{
    Verdict v;
    v.answer = yes ? Answer::Yes : Answer::No;
    v.evidence = std::move(evidence);
    return v;
}

Evidence square_test(const std::string& name, const Int& n)
{
    return {name, to_string(n), is_square(Rat(n))};
}

Evidence class_square_test(const std::string& name, const SquareClass& c)
{
    return {name, c.to_string(), c.trivial()};
}

std::vector<Evidence> salem_values(const SalemPolynomial& S)
{
    return {{"S(1)", to_string(S.s_at_1), true}, {"S(-1)", to_string(S.s_at_minus1), true}};
}

} // namespace

Verdict classify_k3_sm(const SalemPolynomial& S)
{
    int D = S.degree();
    auto ev = salem_values(S);
    if (D <= 20) {
        ev.push_back(bound("degree", D, 20));
        return answer(true, ev);
    }
    if (D == 22) {
        ev.push_back({"degree = 22", "22", true});
        ev.push_back(square_test("|S(1)S(-1)| square", abs(S.s_at_1 * S.s_at_minus1)));
        return answer(ev.back().pass, ev);
    }
    ev.push_back(bound("degree", D, 22));
    return answer(false, ev);
}

Verdict classify_k3_salem_automorphism(const SalemPolynomial& S)
{
    int D = S.degree();
    auto ev = salem_values(S);
    if (D == 10 || D == 18) {
        Verdict v;
        v.answer = Answer::Unknown;
        ev.push_back({"degree not in {10, 18}", str(D), false});
        v.evidence = ev;
        v.note = D == 10 ? "degree 10 is an open case for Salem automorphisms of K3 surfaces"
                         : "degree 18 depends on criteria that are not decided by lattice invariants here";
        return v;
    }
    if (D <= 20) {
        ev.push_back(bound("degree", D, 20));
        return answer(true, ev);
    }
    if (D == 22) {
        ev.push_back({"degree = 22", "22", true});
        ev.push_back(square_test("|S(1)| square", abs(S.s_at_1)));
        ev.push_back(square_test("|S(-1)| square", abs(S.s_at_minus1)));
        ev.push_back(square_test("|S(1)S(-1)| square", abs(S.s_at_1 * S.s_at_minus1)));
        bool all = ev[3].pass && ev[4].pass && ev[5].pass;
        return answer(all, ev);
    }
    ev.push_back(bound("degree", D, 22));
    return answer(false, ev);
}

Verdict classify_hk_sm(int d, const SquareClass& disc, const HKType& t)
{
    using K = HKType::Kind;
    std::vector<Evidence> ev;
    switch (t.kind) {
    case K::K3:
        if (d <= 10) return answer(true, {bound("half degree", d, 10)});
        if (d == 11) {
            // Degree 22 is 2 mod 4, so the discriminant is positive.
            ev.push_back({"half degree = 11", "11", true});
            ev.push_back(class_square_test("discriminant square", disc));
            return answer(ev.back().pass, ev);
        }
        return answer(false, {bound("half degree", d, 11)});
    case K::Kummer: return answer(d <= 3, {bound("half degree", d, 3)});
    case K::K3Hilb: return answer(d <= 11, {bound("half degree", d, 11)});
    case K::OG6:
        if (d <= 3) return answer(true, {bound("half degree", d, 3)});
        if (d == 4) {
            ev.push_back({"half degree = 4", "4", true});
            ev.push_back(class_square_test("-discriminant square", SquareClass{-1, 1} * disc));
            return answer(ev.back().pass, ev);
        }
        return answer(false, {bound("half degree", d, 4)});
    case K::OG10:
        if (d <= 11) return answer(true, {bound("half degree", d, 11)});
        if (d == 12) {
            ev.push_back({"half degree = 12", "12", true});
            ev.push_back(class_square_test("-3*discriminant square", SquareClass{-1, 3} * disc));
            return answer(ev.back().pass, ev);
        }
        return answer(false, {bound("half degree", d, 12)});
    }
    return answer(false, ev);
}

Verdict classify_hk_sm(const SalemPolynomial& S, const HKType& t)
{
    if (t.kind == HKType::Kind::K3) return classify_k3_sm(S);
    return classify_hk_sm(S.half_degree(), salem_disc_class(S), t);
}

Verdict rm_k3_exists(int degree, int m)
{
    if (degree < 1 || m < 1) throw InvalidInput("degree and m must be positive");
    std::vector<Evidence> ev{{"m >= 3", str(m), m >= 3}, bound("d*m", long(degree) * m, 22)};
    Verdict v = answer(ev[0].pass && ev[1].pass, ev);
    if (v.answer == Answer::Yes) {
        v.witness["family_dim"] = str(m - 2);
        if (degree == 1) v.note = "E = Q: multiplication by Q is always present";
    }
    return v;
}

Verdict quad_norm_solvable(const Int& d, const Rat& n, bool require_totally_positive)
{
    if (d < 2 || squarefree_part(d) != d) throw InvalidInput("d must be a squarefree integer >= 2");
    if (n == 0) throw InvalidInput("norm value must be nonzero");
    std::set<Place> places{Place::infinity(), Place::prime(2)};
    for (const auto& p : prime_divisors(d)) places.insert(Place::prime(p));
    for (const auto& p : prime_divisors(n)) places.insert(Place::prime(p));
    std::vector<Evidence> ev;
    bool ok = true;
    for (const auto& v : places) {
        int h = hilbert_symbol(Rat(d), n, v);
        ev.push_back({"(d,n)_" + v.to_string(), str(h), h == 1});
        ok = ok && h == 1;
    }
    if (require_totally_positive) {
        ev.push_back({"n > 0", to_string(n), n > 0});
        ok = ok && n > 0;
    }
    Verdict out = answer(ok, ev);
    if (!ok) return out;
    // Small explicit element (a + b sqrt d)/c with a^2 - d b^2 = n c^2.
    Int num = n.get_num(), den = n.get_den();
    for (long c = 1; c <= 60; ++c)
        for (long b = 0; b <= 200; ++b) {
            // With C = c den: a^2 - d b^2 = n C^2 = num den c^2.
            Int target = num * den * c * c + d * b * b;
            if (target < 0) continue;
            Int a;
            mpz_sqrt(a.get_mpz_t(), target.get_mpz_t());
            if (a * a != target) continue;
            Rat ra = Rat(a) / Rat(Int(c) * den), rb = Rat(b) / Rat(Int(c) * den);
            std::string root = "sqrt(" + to_string(d) + ")";
            std::string elt = to_string(ra);
            if (rb != 0) elt += " + " + (rb == 1 ? root : to_string(rb) + "*" + root);
            out.witness["element"] = elt;
            return out;
        }
    out.note = "no small explicit element found; solvability follows from the local symbols";
    return out;
}

Verdict verify_rm_witness(const FieldElement& alpha, int m, const SquareClass& target_det)
{
    const auto& F = *alpha.field();
    if (F.degree() % 2) throw InvalidInput("witness verification needs an even-degree field");
    if (!is_totally_real(F)) throw InvalidInput("witness verification needs a totally real field");
    if (alpha.is_zero()) throw InvalidInput("witness must be nonzero");
    auto signs = sign_at_real_embeddings(alpha);
    int pos = 0;
    for (int s : signs) pos += s > 0;
    int neg = static_cast<int>(signs.size()) - pos;
    Evidence sig{"signature (1, d-1)", "(" + str(pos) + "," + str(neg) + ")", pos == 1};
    SquareClass disc = field_disc_class(F);
    SquareClass det = square_class(norm(alpha)) * (m % 2 ? disc : SquareClass{});
    Evidence dc{"determinant condition", det.to_string() + " vs " + target_det.to_string(), det == target_det};
    return answer(sig.pass && dc.pass, {sig, dc});
}

Verdict rm_hk_exists(const HKType& t, const RMFieldSpec& field, int m, const std::optional<FieldElement>& witness)
{
    using K = HKType::Kind;
    int d = field.degree;
    if (d < 1 || m < 1) throw InvalidInput("degree and m must be positive");
    if (field.disc && d != 2) throw InvalidInput("a discriminant only describes quadratic fields");
    auto need_disc = [&]() -> const Int& {
        if (!field.disc) throw InvalidInput("this case needs the quadratic field discriminant (--disc)");
        return *field.disc;
    };
    long md = long(m) * d;
    switch (t.kind) {
    case K::K3:
    case K::K3Hilb: return rm_k3_exists(d, m);
    case K::Kummer:
        return answer(d == 2 && m == 3, {{"degree = 2", str(d), d == 2}, {"m = 3", str(m), m == 3}});
    case K::OG6: {
        std::vector<Evidence> ev{{"degree = 2", str(d), d == 2}};
        if (d != 2 || (m != 3 && m != 4)) {
            ev.push_back({"m in {3, 4}", str(m), m == 3 || m == 4});
            return answer(false, ev);
        }
        if (m == 3) {
            ev.push_back({"m = 3", "3", true});
            Verdict v = answer(true, ev);
            v.witness["family_dim"] = "1";
            return v;
        }
        Verdict v = quad_norm_solvable(need_disc(), Rat(-1), false);
        v.evidence.insert(v.evidence.begin(), {"m = 4", "4", true});
        v.evidence.insert(v.evidence.begin(), ev.front());
        if (v.answer == Answer::Yes) v.witness["family_dim"] = "2";
        return v;
    }
    case K::OG10: {
        if (md <= 22) return rm_k3_exists(d, m);
        std::vector<Evidence> ev{{"d*m", str(md), md == 24}};
        if (md != 24 || m < 3) {
            if (m < 3) ev.push_back({"m >= 3", str(m), false});
            return answer(false, ev);
        }
        if (d == 1) {
            Verdict v = answer(true, ev);
            v.note = "E = Q: multiplication by Q is always present";
            return v;
        }
        if (d == 3) {
            Verdict v = answer(true, ev);
            v.witness["family_dim"] = str(m - 2);
            return v;
        }
        if (d == 2) {
            Verdict v = quad_norm_solvable(need_disc(), Rat(-3), false);
            v.evidence.insert(v.evidence.begin(), ev.front());
            if (v.answer == Answer::Yes) v.witness["family_dim"] = str(m - 2);
            return v;
        }
        // d in {4, 6, 8}
        Verdict v;
        v.answer = Answer::Unknown;
        v.evidence = ev;
        v.note = "needs an element of E with signature (1," + str(d - 1) +
                 ") and N(a) Delta_E^m = -3 modulo squares; supply one as a witness";
        if (witness) {
            if (witness->field()->degree() != d) throw InvalidInput("witness field degree does not match");
            Verdict w = verify_rm_witness(*witness, m, SquareClass{-1, 3});
            v.evidence.insert(v.evidence.end(), w.evidence.begin(), w.evidence.end());
            if (w.answer == Answer::Yes) {
                v.answer = Answer::Yes;
                v.note.clear();
                v.witness["alpha"] = witness->to_string();
                v.witness["family_dim"] = str(m - 2);
            }
        }
        return v;
    }
    }
    return Verdict{};
}

BirFiniteness bir_finiteness(MultiplicationKind kind, bool hyperkaehler)
{
    if (kind == MultiplicationKind::RM) return {true, ""};
    if (hyperkaehler)
        return {false, "infinite for K3 surfaces; for higher-dimensional hyperkaehler manifolds only the totally "
                       "real direction is established"};
    return {false, ""};
}

RealInterval entropy(const SalemPolynomial& S, unsigned precision_bits)
{
    RootInterval lam = salem_lambda(S, precision_bits + 4);
    mpfr_prec_t prec = precision_bits + 32;
    BigFloat lo(lam.lo, prec, MPFR_RNDD), hi(lam.hi, prec, MPFR_RNDU);
    return {log(lo, MPFR_RNDD).to_rat(), log(hi, MPFR_RNDU).to_rat()};
}

} // namespace salemhk
