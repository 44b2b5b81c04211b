#include <doctest.h>

#include "oracles.hpp"
#include "salemhk/corpus.hpp"
#include "salemhk/transfer.hpp"

using namespace salemhk;

namespace {

QuadraticFormQ diag(std::initializer_list<long> d)
{
    std::vector<Rat> v;
    for (long x : d) v.emplace_back(x);
    return QuadraticFormQ::from_diag(std::move(v));
}

// Gram entries as traces of multiplication matrices, independent of the
// cached power traces used by the library.
RatMatrix gram_by_multiplication(const FieldElement& alpha, const Involution& inv)
{
    const FieldPtr& F = alpha.field();
    int n = F->degree();
    RatMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FieldElement e = alpha * F->gen().pow(i) * inv.apply(F->gen().pow(j));
            g(i, j) = e.multiplication_matrix().trace();
        }
    return g;
}

FieldElement random_element(const FieldPtr& F, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> c(-4, 4);
    for (;;) {
        std::vector<Rat> v;
        for (int i = 0; i < F->degree(); ++i) v.emplace_back(c(rng));
        FieldElement e = F->element(v);
        if (!e.is_zero()) return e;
    }
}

SalemPolynomial corpus_salem(const char* name)
{
    return certify_salem(find_corpus_entry(name)->poly);
}

} // namespace

TEST_CASE("closed-form signature table")
{
    CHECK(closed_form_signature(FieldKind::RM, {1, -1, -1}) == Signature{1, 2});
    CHECK(closed_form_signature(FieldKind::SM, {1}) == Signature{3, 1});
    CHECK(closed_form_signature(FieldKind::CM, {1, 1}) == Signature{4, 0});
}

TEST_CASE("quadratic transfers over real quadratic fields")
{
    for (long d : {2, 3, 5, 6, 7, 10, 11, 13}) {
        FieldPtr F = quadratic_field(Int(d));
        TransferResult t = transfer_quadratic({F, {F->gen()}});
        CHECK(equivalent_over_Q(t.form, hyperbolic_plane()));
        TransferResult i4 = transfer_quadratic({F, std::vector<FieldElement>(4, F->one())});
        CHECK(equivalent_over_Q(i4.form, identity_form(8)));
    }
    FieldPtr F5 = quadratic_field(Int(5));
    DiagonalFormOverField one{F5, {F5->one()}};
    TransferResult t = transfer_quadratic(one);
    CHECK(t.gram == RatMatrix::from_rows({{2, 0}, {0, 10}}));
    CHECK(t.form.det_class() == SquareClass{1, 5});
    CHECK(check_transfer_det(one, t));
    FieldPtr F2 = quadratic_field(Int(2));
    DiagonalFormOverField r2{F2, {F2->gen()}};
    TransferResult t2 = transfer_quadratic(r2);
    CHECK(t2.form.det_class() == SquareClass{-1, 1});
    CHECK(check_transfer_det(r2, t2));
    CHECK_THROWS_AS(transfer_quadratic({F5, {F5->from_rational(0)}}), InvalidInput);
}

TEST_CASE("V_K3 from a real quadratic field")
{
    for (long d : {2, 5, 13}) {
        FieldPtr F = quadratic_field(Int(d));
        for (int s : {1, -1}) {
            DiagonalFormOverField W{F, {F->gen(), F->gen(), Rat(s) * F->gen()}};
            for (int i = 0; i < 8; ++i) W.entries.push_back(-F->one());
            TransferResult t = transfer_quadratic(W);
            CHECK(t.form.dim() == 22);
            CHECK(equivalent_over_Q(t.form, vk3_form()));
        }
    }
}

TEST_CASE("witness for <1,1>")
{
    auto w2 = construct_H11_witness(Int(2));
    REQUIRE(w2);
    FieldPtr F2 = w2->alpha.field();
    CHECK(w2->alpha == Rat(1, 4) * (F2->from_rational(2) + F2->gen()));
    CHECK(equivalent_over_Q(w2->transfer.form, diag({1, 1})));
    CHECK_FALSE(construct_H11_witness(Int(3)));
    auto w5 = construct_H11_witness(Int(5));
    REQUIRE(w5);
    CHECK(equivalent_over_Q(w5->transfer.form, diag({1, 1})));
    for (long d = 2; d < 200; ++d) {
        if (squarefree_part(Int(d)) != d) continue;
        REQUIRE(construct_H11_witness(Int(d)).has_value() == oracle::sum_of_two_squares(d));
    }
}

TEST_CASE("quartic construction from a sum of two squares")
{
    auto c = construct_salem_from_binary(Int(2), Int(1), Int(1));
    CHECK(c.field->min_poly() == IntPoly{-1, 0, 2, 0, 1});
    CHECK(c.matches_target);
    CHECK(equivalent_over_Q(c.transfer.form, direct_sum(hyperbolic_plane(), diag({1, 1}))));
    CHECK(construct_salem_from_binary(Int(5), Int(1), Int(2)).matches_target);
    CHECK(construct_salem_from_binary(Int(13), Int(2), Int(3)).matches_target);
    CHECK_THROWS_AS(construct_salem_from_binary(Int(5), Int(1), Int(1)), InvalidInput);
}

TEST_CASE("Salem rank-one transfers")
{
    SalemPolynomial S = corpus_salem("salem4b");
    TransferResult t = transfer_hermitian_rank1(S, S.field->one());
    CHECK(t.form.det_class() == salem_disc_class(S));
    CHECK(t.form.signature() == Signature{3, 1});
    CHECK(*t.closed_form == Signature{3, 1});
    CHECK_THROWS_AS(transfer_hermitian_rank1(S, S.field->gen()), InvalidInput);

    for (const auto& e : salem_corpus()) {
        if (e.poly.degree() > 14) continue;
        SalemPolynomial T = certify_salem(e.poly);
        int d = T.half_degree();
        TransferResult one = transfer_hermitian_rank1(T, T.field->one());
        REQUIRE(one.form.signature() == Signature{2 * d - 1, 1});
        REQUIRE(witt_is_torsion(one.form, direct_sum(hyperbolic_plane(), identity_form(2 * d - 2))));
        Involution inv = Involution::reciprocal(T.field);
        REQUIRE(one.gram == gram_by_multiplication(T.field->one(), inv));
        FieldElement a = salem_fixed_element(T, RatPoly{-1, 0, 1});
        TransferResult ta = transfer_hermitian_rank1(T, a);
        REQUIRE(ta.form.det_class() == one.form.det_class());
        REQUIRE(check_transfer_det({T.field, {a}}, inv, ta));
    }
}

TEST_CASE("random diagonal transfers satisfy the determinant formula")
{
    std::mt19937_64 rng(47);
    std::vector<FieldPtr> fields{quadratic_field(Int(2)), quadratic_field(Int(7)),
                                 NumberField::create(IntPoly{1, 0, -4, 0, 1}),
                                 NumberField::create(IntPoly{5, 0, -5, 0, 1})};
    for (int trial = 0; trial < 100; ++trial) {
        const FieldPtr& F = fields[trial % fields.size()];
        DiagonalFormOverField W{F, {}};
        int m = 1 + trial % 3;
        for (int i = 0; i < m; ++i) W.entries.push_back(random_element(F, rng));
        TransferResult t = transfer_quadratic(W);
        REQUIRE(t.form.dim() == static_cast<std::size_t>(F->degree() * m));
        REQUIRE(check_transfer_det(W, t));
        REQUIRE(*t.closed_form == t.form.signature());

        // block structure: the transfer of a sum is the sum of the transfers
        DiagonalFormOverField head{F, {W.entries.front()}};
        DiagonalFormOverField tail{F, {W.entries.begin() + 1, W.entries.end()}};
        if (!tail.entries.empty()) {
            RatMatrix blocks = block_diagonal({transfer_quadratic(head).gram, transfer_quadratic(tail).gram});
            REQUIRE(blocks == t.gram);
        }
        REQUIRE(transfer_quadratic(head).gram == gram_by_multiplication(head.entries[0], Involution::identity(F)));
    }
}

TEST_CASE("hermitian transfers over a CM-type quartic")
{
    // Q(i, sqrt 2) as Q[x]/(x^4 + 1) with x -> x^{-1} = -x^3
    FieldPtr F = NumberField::create(IntPoly{1, 0, 0, 0, 1});
    Involution inv = Involution::reciprocal(F);
    FieldElement y = F->gen() + inv.apply(F->gen());
    for (long c : {1, -1, 3}) {
        FieldElement a = F->from_rational(Rat(c)) + y;
        TransferResult t = transfer_hermitian({F, {a}}, inv);
        REQUIRE(*t.closed_form == t.form.signature());
        REQUIRE(check_transfer_det({F, {a}}, inv, t));
    }
}
