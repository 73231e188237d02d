#include <doctest.h>

#include "helpers.hpp"
#include "unirat/factor.hpp"

using namespace unirat;
using testutil::pp;

namespace {

Ring rtz() { return make_ring({"t", "z"}); }

}  // namespace

TEST_CASE("univariate factorization matches hand examples") {
    Ring r = testutil::ring1();
    SUBCASE("x^4 - 4") {
        auto f = factor_univariate_q(pp("x^4-4", r));
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].first == pp("x^2-2", r));
        CHECK(f.factors[1].first == pp("x^2+2", r));
        CHECK(f.constant == Rational(1));
    }
    SUBCASE("x^2 + 1 irreducible") {
        auto f = factor_univariate_q(pp("x^2+1", r));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0] == std::pair<MultiPoly, unsigned>{pp("x^2+1", r), 1u});
    }
    SUBCASE("constants split off") {
        auto f = factor_univariate_q(pp("6*x^2-6", r));
        CHECK(f.constant == Rational(6));
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].first == pp("x-1", r));
        CHECK(f.factors[1].first == pp("x+1", r));
    }
    SUBCASE("zero rejected") {
        CHECK_THROWS_AS(factor_univariate_q(MultiPoly::zero(r)), MathError);
    }
}

TEST_CASE("univariate factorization round-trips on random inputs") {
    std::mt19937 rng(41);
    Ring r = testutil::ring1();
    for (int iter = 0; iter < 40; ++iter) {
        QPoly q = testutil::random_qpoly(rng, 8, 12);
        MultiPoly f = upoly::to_mpoly(q, r, 0);
        if (f.is_zero() || f.is_constant()) continue;
        auto fac = factor_univariate_q(f);
        CHECK(fac.product(r) == f);
        for (const auto& [g, mult] : fac.factors) {
            (void)mult;
            CHECK(g.leading_coeff().is_one());
        }
    }
}

TEST_CASE("claimed irreducible factors survive the divisor oracle") {
    std::mt19937 rng(43);
    Ring r = testutil::ring1();
    int checked = 0;
    for (int iter = 0; iter < 25; ++iter) {
        QPoly q = testutil::random_qpoly(rng, 6, 10);
        MultiPoly f = upoly::to_mpoly(q, r, 0);
        if (f.is_zero() || f.is_constant()) continue;
        for (const auto& [g, mult] : factor_univariate_q(f).factors) {
            (void)mult;
            if (g.total_degree() > 6) continue;
            CHECK(!testutil::kronecker_has_proper_factor(upoly::from_mpoly(g, 0)));
            ++checked;
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("multivariate factorization matches hand examples") {
    Ring r = rtz();
    SUBCASE("t^2 z^2 - 1") {
        auto f = factor_multivariate_q(pp("t^2*z^2-1", r));
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].first == pp("t*z-1", r));
        CHECK(f.factors[1].first == pp("t*z+1", r));
    }
    SUBCASE("z^4 - t^2") {
        auto f = factor_multivariate_q(pp("z^4-t^2", r));
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].first == pp("z^2-t", r));
        CHECK(f.factors[1].first == pp("z^2+t", r));
    }
    SUBCASE("z^2 - t irreducible") {
        auto f = factor_multivariate_q(pp("z^2-t", r));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].second == 1);
        CHECK(is_irreducible_q(pp("z^2-t", r)));
    }
    SUBCASE("zero rejected") {
        CHECK_THROWS_AS(factor_multivariate_q(MultiPoly::zero(r)), MathError);
    }
}

TEST_CASE("multivariate factorization round-trips on random products") {
    std::mt19937 rng(47);
    Ring r = rtz();
    for (int iter = 0; iter < 12; ++iter) {
        MultiPoly a = testutil::random_nonzero_poly(rng, r, 3, 2, 4);
        MultiPoly b = testutil::random_nonzero_poly(rng, r, 3, 2, 4);
        MultiPoly f = a * b;
        if (f.is_constant()) continue;
        auto fac = factor_multivariate_q(f);
        CHECK(fac.product(r) == f);
        for (const auto& [g, mult] : fac.factors) {
            (void)mult;
            auto [c, prim] = g.primitive_integer();
            CHECK(c == Rational(1));
            CHECK(prim == g);
        }
    }
}

TEST_CASE("multivariate factorization handles repeated factors") {
    Ring r = rtz();
    MultiPoly f = pp("z^2-t", r).pow(2) * pp("z+t", r);
    auto fac = factor_multivariate_q(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.product(r) == f);
    bool saw_square = false;
    for (const auto& [g, mult] : fac.factors)
        if (g == pp("z^2-t", r)) {
            CHECK(mult == 2);
            saw_square = true;
        }
    CHECK(saw_square);
}

TEST_CASE("squarefree detection via gcd with the derivative") {
    Ring r = testutil::ring1();
    MultiPoly f = pp("x^2-1", r);
    CHECK(mpoly_gcd(f, f.derivative(0)).is_constant());
    MultiPoly g = pp("x^2-2*x+1", r);
    CHECK(!mpoly_gcd(g, g.derivative(0)).is_constant());
    CHECK(squarefree_part(g) == pp("x-1", r));
}

TEST_CASE("three-variable factorization") {
    Ring r = make_ring({"t1", "t2", "z"});
    MultiPoly f = pp("z^2-t1", r) * pp("z^2-t2", r);
    auto fac = factor_multivariate_q(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.product(r) == f);
    // The paper-relevant quartic: (z^2 - (x1+x2)^2)(z^2 - (x1-x2)^2) in t's.
    MultiPoly q = pp("z^4 - 2*(t1+t2)*z^2 + (t1-t2)^2", r);
    CHECK(is_irreducible_q(q));
}
