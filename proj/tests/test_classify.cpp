#include <doctest.h>

#include "oracles.hpp"
#include "salemhk/classify.hpp"
#include "salemhk/corpus.hpp"
#include "salemhk/transfer.hpp"

#include <cmath>

using namespace salemhk;

namespace {

SalemPolynomial corpus_salem(const char* name)
{
    return certify_salem(find_corpus_entry(name)->poly);
}

const Evidence* find_evidence(const Verdict& v, const std::string& condition)
{
    for (const auto& e : v.evidence)
        if (e.condition == condition) return &e;
    return nullptr;
}

// Is n = a^2 - d b^2 (times a square) for small integers? One-sided: a hit
// proves n is a norm from Q(sqrt d).
bool small_norm_solution(long d, long n)
{
    for (long c = 1; c <= 30; ++c)
        for (long b = 0; b <= 60; ++b) {
            long target = n * c * c + d * b * b;
            if (target < 0) continue;
            long a = std::lround(std::sqrt(static_cast<double>(target)));
            for (long t = std::max(0L, a - 1); t <= a + 1; ++t)
                if (t * t == target) return true;
        }
    return false;
}

} // namespace

TEST_CASE("K3 Salem multiplication")
{
    Verdict smyth = classify_k3_sm(corpus_salem("smyth22"));
    CHECK(smyth.answer == Answer::Yes);
    CHECK(*find_evidence(smyth, "S(1)") == Evidence{"S(1)", "-3", true});
    CHECK(*find_evidence(smyth, "S(-1)") == Evidence{"S(-1)", "27", true});
    CHECK(*find_evidence(smyth, "|S(1)S(-1)| square") == Evidence{"|S(1)S(-1)| square", "81", true});
    CHECK(classify_k3_sm(corpus_salem("lehmer10")).answer == Answer::Yes);
    CHECK(classify_k3_sm(corpus_salem("salem24_og10")).answer == Answer::No);
    CHECK(classify_k3_sm(corpus_salem("salem22_nonsquare")).answer == Answer::No);
}

TEST_CASE("K3 Salem automorphisms")
{
    Verdict smyth = classify_k3_salem_automorphism(corpus_salem("smyth22"));
    CHECK(smyth.answer == Answer::No);
    CHECK(*find_evidence(smyth, "|S(1)| square") == Evidence{"|S(1)| square", "3", false});
    CHECK(classify_k3_salem_automorphism(corpus_salem("salem12")).answer == Answer::Yes);
    Verdict lehmer = classify_k3_salem_automorphism(corpus_salem("lehmer10"));
    CHECK(lehmer.answer == Answer::Unknown);
    CHECK_FALSE(lehmer.note.empty());
    CHECK(classify_k3_salem_automorphism(corpus_salem("salem18")).answer == Answer::Unknown);
    CHECK(classify_k3_salem_automorphism(corpus_salem("salem22_squares")).answer == Answer::Yes);
    CHECK(classify_k3_salem_automorphism(corpus_salem("salem24b")).answer == Answer::No);
}

TEST_CASE("automorphism implies Salem multiplication")
{
    for (const auto& e : salem_corpus()) {
        SalemPolynomial S = certify_salem(e.poly);
        Verdict aut = classify_k3_salem_automorphism(S), sm = classify_k3_sm(S);
        if (aut.answer == Answer::Yes) REQUIRE(sm.answer == Answer::Yes);
        if (S.degree() == 22 && aut.answer == Answer::Yes) REQUIRE(is_square(abs(Rat(S.s_at_1 * S.s_at_minus1))));
        REQUIRE(classify_k3_sm(S) == sm);
    }
}

TEST_CASE("hyperkaehler Salem multiplication from the corpus")
{
    CHECK(classify_hk_sm(corpus_salem("salem4b"), HKType::parse("og6")).answer == Answer::Yes);
    CHECK(classify_hk_sm(corpus_salem("salem8_negdisc"), HKType::parse("og6")).answer == Answer::Yes);
    CHECK(classify_hk_sm(corpus_salem("salem8"), HKType::parse("og6")).answer == Answer::No);
    CHECK(classify_hk_sm(corpus_salem("lehmer10"), HKType::parse("kummer", 2)).answer == Answer::No);
    CHECK(classify_hk_sm(corpus_salem("salem22_squares"), HKType::parse("k3n", 2)).answer == Answer::Yes);
    CHECK(classify_hk_sm(corpus_salem("salem24_og10"), HKType::parse("og10")).answer == Answer::Yes);
    CHECK(classify_hk_sm(corpus_salem("salem24b"), HKType::parse("og10")).answer == Answer::No);
    CHECK(classify_hk_sm(corpus_salem("smyth22"), HKType::parse("k3")) == classify_k3_sm(corpus_salem("smyth22")));
}

TEST_CASE("hyperkaehler Salem multiplication rules")
{
    const SquareClass one{1, 1}, minus_one{-1, 1}, minus_three{-1, 3}, five{1, 5};
    auto answer = [](int d, const SquareClass& disc, const char* type, std::optional<long> n = std::nullopt) {
        return classify_hk_sm(d, disc, HKType::parse(type, n)).answer;
    };
    for (int d = 2; d <= 13; ++d) {
        CHECK(answer(d, five, "kummer", 3) == (d <= 3 ? Answer::Yes : Answer::No));
        CHECK(answer(d, five, "k3n", 4) == (d <= 11 ? Answer::Yes : Answer::No));
    }
    CHECK(answer(4, minus_one, "og6") == Answer::Yes);
    CHECK(answer(4, one, "og6") == Answer::No);
    CHECK(answer(5, minus_one, "og6") == Answer::No);
    CHECK(answer(12, minus_three, "og10") == Answer::Yes);
    CHECK(answer(12, one, "og10") == Answer::No);
    CHECK(answer(13, minus_three, "og10") == Answer::No);
    CHECK(answer(11, five, "og10") == Answer::Yes);
    CHECK_THROWS_AS(HKType::parse("kummer", 1), InvalidInput);
    CHECK_THROWS_AS(HKType::parse("k3n"), InvalidInput);
    CHECK_THROWS_AS(HKType::parse("og8"), InvalidInput);
    CHECK(HKType::parse("k3n", 4).to_string() == "k3n(4)");
}

TEST_CASE("RM for K3 surfaces")
{
    Verdict v = rm_k3_exists(2, 11);
    CHECK(v.answer == Answer::Yes);
    CHECK(v.witness.at("family_dim") == "9");
    CHECK(rm_k3_exists(2, 2).answer == Answer::No);
    CHECK(rm_k3_exists(5, 5).answer == Answer::No);
    CHECK_FALSE(rm_k3_exists(1, 5).note.empty());
    for (int d = 1; d <= 8; ++d)
        for (int m = 1; m <= 12; ++m) {
            Verdict g = rm_k3_exists(d, m);
            bool expected = m >= 3 && d * m <= 22;
            REQUIRE((g.answer == Answer::Yes) == expected);
            if (expected) REQUIRE(g.witness.at("family_dim") == std::to_string(m - 2));
        }
}

TEST_CASE("norms from real quadratic fields")
{
    CHECK(quad_norm_solvable(Int(5), Rat(-1), false).answer == Answer::Yes);
    CHECK(quad_norm_solvable(Int(3), Rat(-1), false).answer == Answer::No);
    CHECK(quad_norm_solvable(Int(7), Rat(49, 4), false).answer == Answer::Yes);
    CHECK(quad_norm_solvable(Int(5), Rat(-1), true).answer == Answer::No);
    CHECK(quad_norm_solvable(Int(5), Rat(4), true).answer == Answer::Yes);
    Verdict three = quad_norm_solvable(Int(3), Rat(-1), false);
    const Evidence* at3 = find_evidence(three, "(d,n)_3");
    REQUIRE(at3);
    CHECK_FALSE(at3->pass);

    for (long d = 2; d <= 500; ++d) {
        if (squarefree_part(Int(d)) != d) continue;
        REQUIRE((quad_norm_solvable(Int(d), Rat(-1), false).answer == Answer::Yes) == oracle::sum_of_two_squares(d));
    }
    int hits = 0;
    for (long d : {2, 3, 5, 6, 7, 10, 11, 13})
        for (long n = -30; n <= 30; ++n) {
            if (n == 0) continue;
            bool yes = quad_norm_solvable(Int(d), Rat(n), false).answer == Answer::Yes;
            bool found = small_norm_solution(d, n);
            if (found) REQUIRE(yes);
            hits += found;
            if (yes) {
                Verdict v = quad_norm_solvable(Int(d), Rat(n), false);
                REQUIRE(v.witness.count("element"));
            }
        }
    CHECK(hits > 100);
}

TEST_CASE("RM for higher hyperkaehler types")
{
    auto quad = [](long d) { return RMFieldSpec{2, Int(d)}; };
    HKType og6 = HKType::parse("og6"), og10 = HKType::parse("og10"), kum = HKType::parse("kummer", 2);
    CHECK(rm_hk_exists(og6, quad(5), 4).answer == Answer::Yes);
    CHECK(rm_hk_exists(og6, quad(3), 4).answer == Answer::No);
    CHECK(rm_hk_exists(og6, quad(3), 3).answer == Answer::Yes);
    CHECK(rm_hk_exists(og6, quad(3), 5).answer == Answer::No);
    CHECK(rm_hk_exists(og10, quad(3), 12).answer == Answer::Yes);
    CHECK(rm_hk_exists(og10, quad(5), 12).answer == Answer::No);
    CHECK(rm_hk_exists(og10, RMFieldSpec{3, std::nullopt}, 8).answer == Answer::Yes);
    CHECK(rm_hk_exists(og10, RMFieldSpec{4, std::nullopt}, 6).answer == Answer::Unknown);
    CHECK(rm_hk_exists(og10, RMFieldSpec{2, Int(7)}, 11).answer == Answer::Yes);
    CHECK(rm_hk_exists(og10, RMFieldSpec{23, std::nullopt}, 1).answer == Answer::No);
    CHECK(rm_hk_exists(kum, quad(5), 3).answer == Answer::Yes);
    CHECK(rm_hk_exists(kum, quad(5), 4).answer == Answer::No);
    CHECK(rm_hk_exists(kum, RMFieldSpec{3, std::nullopt}, 3).answer == Answer::No);
    CHECK(rm_hk_exists(HKType::parse("k3n", 2), quad(2), 11) == rm_k3_exists(2, 11));
    CHECK_THROWS_AS(rm_hk_exists(og6, RMFieldSpec{2, std::nullopt}, 4), InvalidInput);

    // quartic witness: alpha positive at one embedding with N(alpha) Delta^6 ~ -3
    FieldPtr F = NumberField::create(IntPoly{1, 0, -4, 0, 1});
    FieldElement x = F->gen();
    bool decided = false;
    for (long a = -6; a <= 6 && !decided; ++a)
        for (long b = -6; b <= 6 && !decided; ++b) {
            FieldElement w = F->from_rational(Rat(a)) + Rat(b) * x;
            if (w.is_zero()) continue;
            Verdict v = rm_hk_exists(og10, RMFieldSpec{4, std::nullopt}, 6, w);
            if (verify_rm_witness(w, 6, SquareClass{-1, 3}).answer == Answer::Yes) {
                CHECK(v.answer == Answer::Yes);
                decided = true;
            } else {
                REQUIRE(v.answer == Answer::Unknown);
            }
        }
}

TEST_CASE("RM witness verification")
{
    FieldPtr F = quadratic_field(Int(3));
    Verdict yes = verify_rm_witness(F->gen(), 12, SquareClass{-1, 3});
    CHECK(yes.answer == Answer::Yes);
    Verdict positive = verify_rm_witness(F->from_rational(2) + F->gen(), 12, SquareClass{1, 1});
    CHECK(positive.answer == Answer::No);
    CHECK_FALSE(find_evidence(positive, "signature (1, d-1)")->pass);
    Verdict wrong = verify_rm_witness(F->gen(), 12, SquareClass{1, 1});
    CHECK(wrong.answer == Answer::No);
    CHECK_FALSE(find_evidence(wrong, "determinant condition")->pass);
    CHECK_THROWS_AS(verify_rm_witness(NumberField::create(IntPoly{1, -3, 0, 1})->gen(), 3, SquareClass{}),
                    InvalidInput);
}

TEST_CASE("Bir finiteness")
{
    CHECK(bir_finiteness(MultiplicationKind::RM).finite);
    CHECK_FALSE(bir_finiteness(MultiplicationKind::SM).finite);
    BirFiniteness hk = bir_finiteness(MultiplicationKind::SM, true);
    CHECK_FALSE(hk.finite);
    CHECK_FALSE(hk.note.empty());
}

TEST_CASE("entropy")
{
    RealInterval lehmer = entropy(corpus_salem("lehmer10"), 60);
    CHECK(lehmer.lo < lehmer.hi);
    CHECK(lehmer.hi - lehmer.lo < Rat(1, Int(1) << 58));
    CHECK(std::abs(lehmer.lo.get_d() - 0.162357) < 1e-6);
    RealInterval quartic = entropy(corpus_salem("salem4b"), 60);
    CHECK(std::abs(quartic.lo.get_d() - std::log(2.08101899662454)) < 1e-12);
    for (const auto& e : salem_corpus()) {
        RealInterval h = entropy(certify_salem(e.poly), 40);
        double lambda = std::stod(e.lambda);
        REQUIRE(std::exp(h.lo.get_d()) < lambda + 1e-12);
        REQUIRE(std::exp(h.hi.get_d()) > lambda - 1e-12);
    }
}
