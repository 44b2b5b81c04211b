#include <doctest.h>

#include "oracles.hpp"
#include "salemhk/qforms.hpp"

using namespace salemhk;

namespace {

QuadraticFormQ diag(std::initializer_list<long> d)
{
    std::vector<Rat> v;
    for (long x : d) v.emplace_back(x);
    return QuadraticFormQ::from_diag(std::move(v));
}

const PlaceSet two_inf{Place::prime(2), Place::infinity()};

RatMatrix random_symmetric(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<long> c(-4, 4);
    for (;;) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rat(c(rng));
        if (m.determinant() != 0) return m;
    }
}

QuadraticFormQ random_diag(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Rat> d;
    for (std::size_t i = 0; i < n; ++i) d.emplace_back(oracle::random_nonzero(rng, 30));
    return QuadraticFormQ::from_diag(std::move(d));
}

} // namespace

TEST_CASE("diagonalization")
{
    CHECK(diagonalize(RatMatrix::identity(2)) == std::vector<Rat>{1, 1});
    auto h = diagonalize(RatMatrix::from_rows({{0, 1}, {1, 0}}));
    REQUIRE(h.size() == 2);
    CHECK(square_class(h[0] * h[1]) == SquareClass{-1, 1});
    CHECK(diagonalize(RatMatrix::from_rows({{2, 1}, {1, 2}})) == std::vector<Rat>{Rat(2), Rat(3, 2)});
    CHECK_THROWS_AS(diagonalize(RatMatrix::from_rows({{1, 1}, {1, 1}})), DegenerateForm);
    CHECK_THROWS_AS(QuadraticFormQ::from_diag({Rat(1), Rat(0)}), DegenerateForm);
}

TEST_CASE("invariants of the standard forms")
{
    QuadraticFormQ v = vk3_form();
    CHECK(v.dim() == 22);
    CHECK(v.det_class() == SquareClass{-1, 1});
    CHECK(v.signature() == Signature{3, 19});
    CHECK(v.hasse() == two_inf);

    QuadraticFormQ h = hyperbolic_plane();
    CHECK(h.det_class() == SquareClass{-1, 1});
    CHECK(h.signature() == Signature{1, 1});
    CHECK(h.hasse().empty());
    CHECK(power(h, 3).hasse() == two_inf);

    for (unsigned n = 1; n <= 12; ++n) {
        bool ramified = n % 4 == 2 || n % 4 == 3;
        CHECK(power(h, n).hasse() == (ramified ? two_inf : PlaceSet{}));
    }
}

TEST_CASE("local and global equivalence")
{
    CHECK(equivalent_over_Qp(vk3_form(), power(hyperbolic_plane(), 11), Place::prime(5)));
    CHECK_FALSE(equivalent_over_Qp(diag({1, 1}), diag({-1, -1}), Place::infinity()));
    // 2 = 1^2 + 1^2, so <2,2> represents 1 and is isometric to <1,1>.
    CHECK(equivalent_over_Qp(diag({1, 1}), diag({2, 2}), Place::prime(2)));
    CHECK(equivalent_over_Q(diag({1, 1}), diag({2, 2})));
    CHECK_FALSE(equivalent_over_Qp(diag({1, 1}), diag({3, 3}), Place::prime(3)));

    CHECK_FALSE(equivalent_over_Q(diag({1}), diag({2})));
    CHECK(equivalent_over_Q(diag({1, -2}), diag({2, -1})));
    CHECK(equivalent_over_Q(QuadraticFormQ::from_gram(RatMatrix::from_rows({{0, 1}, {1, 0}})), diag({1, -1})));
}

TEST_CASE("Witt torsion")
{
    CHECK(witt_is_torsion(hyperbolic_plane(), diag({1, -1})));
    CHECK_FALSE(witt_is_torsion(direct_sum(diag({1, 1}), power(hyperbolic_plane(), 2)),
                                direct_sum(diag({-1, -1}), power(hyperbolic_plane(), 2))));
    CHECK(witt_is_torsion(diag({1, 1, -7, -7}), diag({2, 2, -3, -3})));
}

TEST_CASE("named forms")
{
    auto h3 = power(hyperbolic_plane(), 3);
    CHECK(equivalent_over_Q(bbf_form(BBFType::Kummer, 2), direct_sum(h3, diag({-6}))));
    CHECK(equivalent_over_Q(bbf_form(BBFType::K3n, 3), direct_sum(vk3_form(), diag({-4}))));
    CHECK(equivalent_over_Q(bbf_form(BBFType::OG6), direct_sum(h3, diag({-1, -1}))));
    CHECK(bbf_form(BBFType::OG10).dim() == 24);
    CHECK(named_form("VK3").signature() == Signature{3, 19});
    CHECK(named_form("H", {3, ""}).dim() == 6);
    CHECK(named_form("BBF", {2, "kummer"}).dim() == 7);
    CHECK_THROWS_AS(named_form("BBF", {1, "kummer"}), InvalidInput);
    CHECK_THROWS_AS(named_form("E8"), InvalidInput);
}

TEST_CASE("invariants do not depend on the representation")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        RatMatrix g = random_symmetric(rng, 1 + trial % 5);
        QuadraticFormQ f = QuadraticFormQ::from_gram(g);
        QuadraticFormQ d = QuadraticFormQ::from_diag(diagonalize(g));
        REQUIRE(f.invariants() == d.invariants());
        REQUIRE(f.hasse().size() % 2 == 0);
        REQUIRE(f.det_class().sign == (f.signature().neg % 2 ? -1 : 1));
    }
}

TEST_CASE("four copies of a form have trivial Hasse invariant")
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        QuadraticFormQ u = random_diag(rng, 1 + trial % 4);
        REQUIRE(power(u, 4).hasse().empty());
    }
}

TEST_CASE("direct-sum rule for Hasse supports")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        QuadraticFormQ a = random_diag(rng, 1 + trial % 3), b = random_diag(rng, 1 + trial % 4);
        PlaceSet expected =
            symmetric_difference(symmetric_difference(a.hasse(), b.hasse()), quaternion_class(a.det(), b.det()));
        REQUIRE(direct_sum(a, b).hasse() == expected);
    }
}

TEST_CASE("congruent forms are equivalent globally and locally")
{
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 2 + trial % 4;
        QuadraticFormQ f = random_diag(rng, n);
        RatMatrix p(n, n);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) p(i, j) = Rat(c(rng));
        } while (p.determinant() == 0);
        QuadraticFormQ g = QuadraticFormQ::from_gram(p.transpose() * f.gram() * p);
        REQUIRE(equivalent_over_Q(f, g));
        std::set<Int> primes{2};
        for (const auto& q : f.bad_primes()) primes.insert(q);
        for (const auto& q : g.bad_primes()) primes.insert(q);
        REQUIRE(equivalent_over_Qp(f, g, Place::infinity()));
        for (const auto& q : primes) REQUIRE(equivalent_over_Qp(f, g, Place::prime(q)));
    }
}
