#include "salemhk/transfer.hpp"

#include "salemhk/errors.hpp"

namespace salemhk {

namespace {

void check_entries(const DiagonalFormOverField& W)
{
    if (!W.field) throw InvalidInput("diagonal form without a field");
    if (W.entries.empty()) throw InvalidInput("diagonal form with no entries");
    for (const auto& a : W.entries) {
        if (a.field() != W.field) throw InvalidInput("entry lies in a different field");
        if (a.is_zero()) throw InvalidInput("zero entry in a diagonal form");
    }
}

Signature add(Signature a, Signature b)
{
    return {a.pos + b.pos, a.neg + b.neg};
}

TransferResult assemble(const DiagonalFormOverField& W, const Involution& inv,
                        Signature (*closed)(const FieldElement&, const Involution&))
{
    check_entries(W);
    std::vector<RatMatrix> blocks;
    Signature sig;
    for (const auto& a : W.entries) {
        blocks.push_back(trace_form_gram(a, inv));
        sig = add(sig, closed(a, inv));
    }
    RatMatrix g = block_diagonal(blocks);
    return TransferResult{g, QuadraticFormQ::from_gram(g), sig};
}

Signature quadratic_closed(const FieldElement& a, const Involution&)
{
    return quadratic_closed_form(a);
}

SquareClass power_class(const SquareClass& c, std::size_t m)
{
    return m % 2 ? c : SquareClass{};
}

} // namespace

TransferResult transfer_quadratic(const DiagonalFormOverField& W)
{
    if (!W.field) throw InvalidInput("diagonal form without a field");
    return assemble(W, Involution::identity(W.field), quadratic_closed);
}

TransferResult transfer_hermitian(const DiagonalFormOverField& W, const Involution& inv)
{
    if (inv.field() != W.field) throw InvalidInput("involution acts on a different field");
    if (inv.is_identity()) return transfer_quadratic(W);
    for (const auto& a : W.entries)
        if (!inv.fixes(a)) throw InvalidInput("entry " + a.to_string() + " is not fixed by the involution");
    return assemble(W, inv, hermitian_closed_form);
}

TransferResult transfer_hermitian_rank1(const SalemPolynomial& S, const FieldElement& alpha)
{
    if (alpha.field() != S.field) throw InvalidInput("alpha must lie in the Salem field");
    if (alpha.is_zero()) throw InvalidInput("alpha must be nonzero");
    Involution inv = Involution::reciprocal(S.field);
    if (!inv.fixes(alpha)) throw InvalidInput("alpha is not fixed by x -> 1/x");
    RatMatrix g = trace_form_gram(alpha, inv);
    // alpha = h(x + 1/x); only the interior roots of f0 carry complex places.
    FixedSubfield e0{salem_trace_element(S), to_rat(S.trace_poly), RatPoly(), {}};
    RatPoly h = e0.express(alpha);
    auto signs = signs_at_roots(h, to_rat(S.trace_poly), interior_trace_roots(S));
    return TransferResult{g, QuadraticFormQ::from_gram(g), closed_form_signature(FieldKind::SM, signs)};
}

Signature closed_form_signature(FieldKind kind, const std::vector<int>& signs)
{
    int plus = 0, minus = 0;
    for (int s : signs) {
        if (s > 0) ++plus;
        else if (s < 0) ++minus;
        else throw InvalidInput("sign vector entries must be +1 or -1");
    }
    switch (kind) {
    case FieldKind::RM: return {plus, minus};
    case FieldKind::CM: return {2 * plus, 2 * minus};
    case FieldKind::SM: return {1 + 2 * plus, 1 + 2 * minus};
    }
    return {};
}

Signature hermitian_closed_form(const FieldElement& alpha, const Involution& inv)
{
    if (inv.is_identity()) return quadratic_closed_form(alpha);
    FixedSubfield e0 = fixed_subfield(inv);
    RatPoly h = e0.express(alpha);
    auto alpha_signs = signs_at_roots(h, e0.min_poly, e0.roots);
    auto delta_signs = signs_at_roots(e0.delta, e0.min_poly, e0.roots);
    int complex_pairs = (e0.min_poly.degree() - static_cast<int>(e0.roots.size())) / 2;
    Signature sig{2 * complex_pairs, 2 * complex_pairs};
    for (std::size_t i = 0; i < e0.roots.size(); ++i) {
        if (delta_signs[i] > 0) {
            sig = add(sig, {1, 1});
        } else if (alpha_signs[i] > 0) {
            sig = add(sig, {2, 0});
        } else {
            sig = add(sig, {0, 2});
        }
    }
    return sig;
}

Signature quadratic_closed_form(const FieldElement& alpha)
{
    int pairs = alpha.field()->complex_pairs();
    Signature sig = closed_form_signature(FieldKind::RM, sign_at_real_embeddings(alpha));
    return add(sig, {pairs, pairs});
}

bool check_transfer_det(const DiagonalFormOverField& W, const TransferResult& result)
{
    FieldElement prod = W.field->one();
    for (const auto& a : W.entries) prod = prod * a;
    SquareClass want = power_class(field_disc_class(*W.field), W.entries.size()) * square_class(norm(prod));
    return result.form.det_class() == want;
}

bool check_transfer_det(const DiagonalFormOverField& W, const Involution& inv, const TransferResult& result)
{
    if (inv.is_identity()) return check_transfer_det(W, result);
    SquareClass disc = field_disc_class(*W.field);
    if ((W.field->degree() / 2) % 2) disc = SquareClass{-1, 1} * disc;
    return result.form.det_class() == power_class(disc, W.entries.size());
}

FieldPtr quadratic_field(const Int& d)
{
    if (is_square(Rat(d))) throw InvalidInput("Q(sqrt " + d.get_str() + ") is not a quadratic field");
    return NumberField::create(IntPoly(std::vector<Int>{-d, 0, 1}));
}

std::optional<H11Witness> construct_H11_witness(const Int& d)
{
    if (d < 2 || squarefree_part(d) != d) throw InvalidInput("d must be a squarefree integer >= 2");
    auto uv = sum_of_two_squares(d);
    if (!uv) return std::nullopt;
    FieldPtr F = quadratic_field(d);
    Rat two_d(2 * d);
    FieldElement alpha = F->element({Rat(d) / two_d, Rat(uv->first) / two_d});
    TransferResult t = transfer_quadratic({F, {alpha}});
    if (!equivalent_over_Q(t.form, identity_form(2)))
        throw Error("transfer of (d + u sqrt d)/(2d) is not <1,1> for d = " + d.get_str());
    return H11Witness{uv->first, uv->second, alpha, t};
}

BinarySalemConstruction construct_salem_from_binary(const Int& d, const Int& u, const Int& v)
{
    if (u * u + v * v != d) throw InvalidInput("u^2 + v^2 must equal d");
    if (d < 2 || squarefree_part(d) != d) throw InvalidInput("d must be a squarefree integer >= 2");
    // (z^2 + u)^2 = d
    FieldPtr F = NumberField::create(IntPoly(std::vector<Int>{u * u - d, 0, 2 * u, 0, 1}));
    FieldElement z = F->gen();
    Involution inv = Involution::from_image(-z);
    // sqrt d = -(z^2 + u), so alpha = 1 - (u/d)(z^2 + u).
    FieldElement alpha = F->one() - Rat(u) / Rat(d) * (z * z + F->from_rational(Rat(u)));
    TransferResult t = transfer_hermitian({F, {alpha}}, inv);
    bool ok = equivalent_over_Q(t.form, direct_sum(hyperbolic_plane(), identity_form(2)));
    return BinarySalemConstruction{F, inv, alpha, t, ok};
}

} // namespace salemhk
