#include <doctest.h>

#include "oracles.hpp"
#include "salemhk/arith.hpp"
#include "salemhk/errors.hpp"

using namespace salemhk;

namespace {

Rat q(long a, long b = 1)
{
    Rat r(a, b);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("square classes")
{
    CHECK(square_class(q(18)) == SquareClass{1, 2});
    CHECK(square_class(q(-12)) == SquareClass{-1, 3});
    CHECK(square_class(q(4, 9)).trivial());
    CHECK(square_class(q(-3, 50)) == SquareClass{-1, 6});
    CHECK_THROWS_AS(square_class(q(0)), InvalidInput);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rat a = q(oracle::random_nonzero(rng, 5000), std::abs(oracle::random_nonzero(rng, 500)));
        Rat t = q(oracle::random_nonzero(rng, 60), std::abs(oracle::random_nonzero(rng, 60)));
        SquareClass c = square_class(a);
        CHECK((c * c).trivial());
        CHECK(square_class(a * t * t) == c);
    }
}

TEST_CASE("squares")
{
    CHECK(is_square(q(81)));
    CHECK(is_square(q(1)));
    CHECK(is_square(q(0)));
    CHECK_FALSE(is_square(q(-4)));
    CHECK(is_square(q(25, 49)));
    CHECK_FALSE(is_square(q(2, 9)));
    CHECK(*rational_sqrt(q(9, 4)) == q(3, 2));
}

TEST_CASE("sums of two squares")
{
    auto w5 = sum_of_two_squares(Int(5));
    REQUIRE(w5);
    CHECK(w5->first * w5->first + w5->second * w5->second == 5);
    CHECK_FALSE(is_sum_of_two_squares(Int(3)));
    auto w2 = sum_of_two_squares(Int(2));
    REQUIRE(w2);
    CHECK(w2->first == 1);
    CHECK(w2->second == 1);

    for (long d = 1; d <= 10000; ++d) {
        bool expected = oracle::sum_of_two_squares(d);
        auto w = sum_of_two_squares(Int(d));
        REQUIRE(w.has_value() == expected);
        if (w) REQUIRE(w->first * w->first + w->second * w->second == d);
    }
}

TEST_CASE("p-adic valuation and squares")
{
    CHECK(padic_valuation(q(8), Int(2)) == 3);
    CHECK(padic_valuation(q(9, 2), Int(3)) == 2);
    CHECK(padic_valuation(q(9, 2), Int(2)) == -1);
    CHECK(padic_valuation(q(5), Int(7)) == 0);
    CHECK_THROWS_AS(padic_valuation(q(0), Int(3)), InvalidInput);

    CHECK(is_padic_square(q(-1), Int(5)));
    CHECK_FALSE(is_padic_square(q(2), Int(5)));
    CHECK(is_padic_square(q(17), Int(2)));
    CHECK_FALSE(is_padic_square(q(5), Int(2)));
    CHECK(is_padic_square(q(68), Int(2)));
    CHECK_FALSE(is_padic_square(q(3, 7), Int(7)));
}

TEST_CASE("primality and factorization")
{
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(1000003)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(561)));
    CHECK(is_prime(Int("170141183460469231731687303715884105727")));
    Int n = Int(1000003) * Int(998244353) * 12;
    auto f = factor(n);
    CHECK(f.size() == 4);
    CHECK(f[Int(2)] == 2);
    CHECK(f[Int(998244353)] == 1);
    CHECK(squarefree_part(Int(72)) == 2);
    CHECK(squarefree_part(Int(1)) == 1);
}

TEST_CASE("Hilbert symbols")
{
    CHECK(hilbert_symbol(q(-1), q(-1), Place::infinity()) == -1);
    CHECK(hilbert_symbol(q(-1), q(-1), Place::prime(2)) == -1);
    CHECK(hilbert_symbol(q(2), q(3), Place::prime(7)) == 1);
    CHECK(quaternion_class(q(-1), q(-1)) == PlaceSet{Place::prime(2), Place::infinity()});
    CHECK(quaternion_class(q(1), q(-7, 3)).empty());
    CHECK(quaternion_class(q(-1), q(1)).empty());
}

TEST_CASE("Hilbert symbols agree with local solubility search")
{
    for (long p : {2, 3, 5, 7}) {
        for (long a = -12; a <= 12; ++a)
            for (long b = -12; b <= 12; ++b) {
                if (a == 0 || b == 0) continue;
                INFO("(" << a << ", " << b << ")_" << p);
                REQUIRE(hilbert_symbol(q(a), q(b), Place::prime(p)) == oracle::hilbert_symbol(a, b, p));
            }
    }
}

TEST_CASE("Hilbert symbols are symmetric and bimultiplicative")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Rat a = q(oracle::random_nonzero(rng, 400), std::abs(oracle::random_nonzero(rng, 40)));
        Rat a2 = q(oracle::random_nonzero(rng, 400), std::abs(oracle::random_nonzero(rng, 40)));
        Rat b = q(oracle::random_nonzero(rng, 400), std::abs(oracle::random_nonzero(rng, 40)));
        PlaceSet places{Place::infinity(), Place::prime(2)};
        for (const Rat& x : {a, a2, b})
            for (const auto& p : prime_divisors(x)) places.insert(Place::prime(p));
        int product = 1;
        for (const auto& v : places) {
            int s = hilbert_symbol(a, b, v);
            product *= s;
            REQUIRE(s == hilbert_symbol(b, a, v));
            REQUIRE(hilbert_symbol(a * a2, b, v) == s * hilbert_symbol(a2, b, v));
        }
        REQUIRE(product == 1);
        REQUIRE(quaternion_class(a, b).size() % 2 == 0);
    }
}

TEST_CASE("rational text round trip")
{
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK(to_string(q(-3, 2)) == "-3/2");
    CHECK(to_string(q(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
}
