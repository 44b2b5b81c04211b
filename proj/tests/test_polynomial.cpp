#include <doctest.h>

#include "oracles.hpp"
#include "salemhk/modp.hpp"
#include "salemhk/polynomial.hpp"

using namespace salemhk;

namespace {

IntPoly lehmer()
{
    return IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
}

RatPoly from_roots(const std::vector<Rat>& roots)
{
    RatPoly p{1};
    for (const auto& r : roots) p *= RatPoly(std::vector<Rat>{-r, Rat(1)});
    return p;
}

} // namespace

TEST_CASE("parsing accepts coefficient lists and expressions")
{
    RatPoly a = parse_polynomial("1,1,0,-1,-1,-1,-1,-1,0,1,1");
    RatPoly b = parse_polynomial("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
    CHECK(a == b);
    CHECK(to_int(a) == lehmer());
    CHECK(parse_polynomial("3/2*y^2 - y", "y") == RatPoly(std::vector<Rat>{Rat(0), Rat(-1), Rat(3, 2)}));
    CHECK(parse_polynomial("2x^3 - 4x") == RatPoly{0, -4, 0, 2});
    CHECK_THROWS_AS(parse_polynomial("x^"), InvalidInput);
    CHECK_THROWS_AS(parse_polynomial("x + z"), InvalidInput);
    CHECK(parse_polynomial(to_string(lehmer())) == to_rat(lehmer()));
}

TEST_CASE("division, gcd and resultants")
{
    RatPoly f{-1, 0, 0, 1}, g{-1, 1};
    auto [q, r] = divmod(f, g);
    CHECK(q == RatPoly{1, 1, 1});
    CHECK(r.is_zero());
    CHECK(monic_gcd(RatPoly{-1, 0, 1}, RatPoly{1, 2, 1}) == RatPoly{1, 1});
    CHECK(resultant(RatPoly{-2, 0, 1}, RatPoly{-3, 0, 1}) == 1);
    CHECK(discriminant(IntPoly{-5, 0, 1}) == 20);
    CHECK(discriminant(IntPoly{-1, 0, 2, 0, 1}) == -1024);
    CHECK(squarefree_part(RatPoly{1, 2, 1}) == RatPoly{1, 1});
    CHECK_FALSE(is_squarefree(IntPoly{1, 2, 1}));
}

TEST_CASE("Sturm counts")
{
    CHECK(count_real_roots_in(RatPoly{-2, 0, 1}, Rat(0), Rat(2)) == 1);
    CHECK(count_real_roots_in(RatPoly{1, 0, 1}, std::nullopt, std::nullopt) == 0);
    CHECK(count_real_roots_in(RatPoly{-4, -1, 1}, Rat(2), std::nullopt) == 1);
    CHECK_THROWS_AS(count_real_roots_in(RatPoly{-4, 0, 1}, Rat(2), Rat(5)), EndpointRoot);
    CHECK(count_real_roots_in(to_rat(lehmer()), std::nullopt, std::nullopt) == 2);
}

TEST_CASE("Sturm counts match known rational roots")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rat> roots;
        int n = 1 + trial % 6;
        while (static_cast<int>(roots.size()) < n) {
            Rat r(num(rng), den(rng));
            r.canonicalize();
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        // Multiply by an irreducible quadratic so complex roots are present.
        RatPoly f = from_roots(roots) * RatPoly{3, 1, 1};
        Rat lo(num(rng), 13), hi = lo + Rat(den(rng) * 3, 11);
        std::size_t expected = 0;
        for (const auto& r : roots) expected += lo < r && r < hi;
        bool endpoint = std::find(roots.begin(), roots.end(), lo) != roots.end() ||
                        std::find(roots.begin(), roots.end(), hi) != roots.end();
        if (endpoint) continue;
        REQUIRE(count_real_roots_in(f, lo, hi) == expected);
        auto iso = isolate_real_roots(f);
        REQUIRE(iso.size() == roots.size());
        std::sort(roots.begin(), roots.end());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            REQUIRE(iso[i].lo <= roots[i]);
            REQUIRE(roots[i] <= iso[i].hi);
        }
    }
}

TEST_CASE("root refinement")
{
    RatPoly f{-2, 0, 1};
    auto roots = isolate_real_roots(f);
    REQUIRE(roots.size() == 2);
    RootInterval r = refine_root(f, roots[1], Rat(1, 1000000));
    CHECK(r.width() <= Rat(1, 1000000));
    CHECK(r.lo * r.lo < 2);
    CHECK(r.hi * r.hi > 2);
    CHECK(simplest_rational_between(Rat(1, 3), Rat(1, 2)) == Rat(2, 5));
    CHECK(simplest_rational_between(Rat(-1, 2), Rat(3)) == 0);
}

TEST_CASE("factorization mod p")
{
    ModPoly f(Int(7), IntPoly{-1, 0, 0, 0, 0, 0, 0, 1});
    ModPoly g(Int(7), IntPoly{-1, 0, 0, 0, 0, 0, 1});
    auto fs = factor_squarefree_mod_p(g);
    CHECK(fs.size() == 6);
    ModPoly prod(Int(7), IntPoly{1});
    for (const auto& h : fs) prod = prod * h;
    CHECK(prod == g);
    CHECK(factor_degrees_mod_p(ModPoly(Int(2), IntPoly{1, 1, 1})) == std::vector<int>{2});
    CHECK(gcd(f, g).degree() == 1);
}

TEST_CASE("Hensel lifting reproduces the factorization mod p^k")
{
    IntPoly f = IntPoly{-2, 0, 1} * IntPoly{3, 1, 1}; // (x^2-2)(x^2+x+3)
    Int p = 7;
    auto factors = factor_squarefree_mod_p(ModPoly(p, f));
    auto lifted = hensel_lift(f, factors, p, 6);
    Int pk = 117649;
    IntPoly prod{1};
    for (const auto& h : lifted) prod *= h;
    for (int i = 0; i <= f.degree(); ++i) CHECK((prod.coeff(i) - f.coeff(i)) % pk == 0);
}

TEST_CASE("irreducibility over Q")
{
    CHECK(irreducible_over_Q(IntPoly{-1, 0, 2, 0, 1}));
    CHECK_FALSE(irreducible_over_Q(IntPoly{-1, 0, 0, 0, 1}));
    CHECK(irreducible_over_Q(lehmer()));
    // Swinnerton-Dyer polynomial for sqrt2, sqrt3: reducible modulo every prime.
    CHECK(irreducible_over_Q(IntPoly{1, 0, -10, 0, 1}));
    CHECK_FALSE(irreducible_over_Q(IntPoly{1, 0, -10, 0, 1} * IntPoly{1, 0, -10, 0, 1}));
    CHECK_THROWS_AS(irreducible_over_Q(IntPoly{}), InvalidInput);
}

TEST_CASE("products of random polynomials are reducible")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int trial = 0; trial < 80; ++trial) {
        auto random_poly = [&](int deg) {
            std::vector<Int> v;
            for (int i = 0; i < deg; ++i) v.emplace_back(c(rng));
            v.emplace_back(1);
            if (v[0] == 0) v[0] = 1;
            return IntPoly(v);
        };
        IntPoly g = random_poly(1 + trial % 5), h = random_poly(1 + trial % 7);
        REQUIRE_FALSE(irreducible_over_Q(g * h));
    }
}
