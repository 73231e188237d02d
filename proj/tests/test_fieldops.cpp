#include <doctest.h>

#include "helpers.hpp"
#include "unirat/factor.hpp"
#include "unirat/fieldops.hpp"

using namespace unirat;
using testutil::rf;

namespace {

FieldPresentation field(const Ring& r, std::initializer_list<const char*> gens) {
    std::vector<RatFn> g;
    for (const char* s : gens) g.push_back(rf(s, r));
    return FieldPresentation{r, g};
}

}  // namespace

TEST_CASE("membership with rewriting witnesses") {
    Ring r = testutil::ring1();
    SUBCASE("x in Q(x^2+x, x^2-x)") {
        FieldPresentation F = field(r, {"x^2+x", "x^2-x"});
        auto res = is_member(rf("x", r), F);
        REQUIRE(res.member);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->expr.substitute(F.gens) == rf("x", r));
    }
    SUBCASE("x not in Q(x^2)") {
        FieldPresentation F = field(r, {"x^2"});
        CHECK(!is_member(rf("x", r), F).member);
    }
    SUBCASE("generators are members with tag witnesses") {
        FieldPresentation F = field(r, {"x^3+x", "x^2"});
        TagSystem ts(F);
        for (std::size_t i = 0; i < F.gens.size(); ++i) {
            auto res = ts.is_member(F.gens[i]);
            REQUIRE(res.member);
            CHECK(res.witness->expr.substitute(F.gens) == F.gens[i]);
        }
    }
    SUBCASE("constants are always members") {
        FieldPresentation F = field(r, {"x^2"});
        auto res = is_member(rf("7/3", r), F);
        CHECK(res.member);
    }
}

TEST_CASE("membership handles dependent generators") {
    Ring r = testutil::ring1();
    // Q(x+1/x, x-1/x) = Q(x): generators dependent, membership must still
    // see the whole field.
    FieldPresentation F = field(r, {"x+1/x", "x-1/x"});
    auto res = is_member(rf("x", r), F);
    REQUIRE(res.member);
    CHECK(res.witness->expr.substitute(F.gens) == rf("x", r));
    CHECK(is_member(rf("x^2", r), F).member);
}

TEST_CASE("transcendence degree by Jacobian rank") {
    Ring r1 = testutil::ring1();
    CHECK(transcendence_degree(field(r1, {"x^2"})) == 1);
    Ring r2 = testutil::ring2();
    CHECK(transcendence_degree(field(r2, {"x1^2", "x1*x2"})) == 2);
    CHECK(transcendence_degree(field(r2, {"x1/x2", "x2/x1"})) == 1);
}

TEST_CASE("transcendence degree is invariant under presentation changes") {
    Ring r = testutil::ring2();
    FieldPresentation F = field(r, {"x1^2", "x1*x2", "x1^2+2*x1*x2"});
    unsigned d = transcendence_degree(F);
    FieldPresentation P = field(r, {"x1*x2", "x1^2+2*x1*x2", "x1^2"});
    CHECK(transcendence_degree(P) == d);
    // Invertible linear substitution of generators.
    std::vector<RatFn> mixed = {F.gens[0] + F.gens[1], F.gens[1], F.gens[2] - F.gens[0]};
    CHECK(transcendence_degree(FieldPresentation{r, mixed}) == d);
}

TEST_CASE("greedy transcendence basis") {
    Ring r1 = testutil::ring1();
    CHECK(select_transcendence_basis(field(r1, {"x^2", "x^3"})) == std::vector<std::size_t>{0});
    Ring r2 = testutil::ring2();
    CHECK(select_transcendence_basis(field(r2, {"x1^2", "x2^2"})) ==
          std::vector<std::size_t>{0, 1});
    CHECK(select_transcendence_basis(field(r1, {"x+1"})) == std::vector<std::size_t>{0});
}

TEST_CASE("minimal polynomials over tagged fields") {
    Ring r = testutil::ring1();
    SUBCASE("x over Q(x^2)") {
        MinPoly mp = minimal_polynomial(rf("x", r), field(r, {"x^2"}));
        REQUIRE(mp.degree() == 2);
        CHECK(mp.coeffs[2] == RatFn::constant(mp.coeff_ring, Rational(1)));
        CHECK(mp.coeffs[1].is_zero());
        CHECK(mp.coeffs[0] == -RatFn::variable(mp.coeff_ring, 0));
    }
    SUBCASE("x over Q(x^4)") {
        MinPoly mp = minimal_polynomial(rf("x", r), field(r, {"x^4"}));
        CHECK(mp.degree() == 4);
        CHECK(mp.coeffs[0] == -RatFn::variable(mp.coeff_ring, 0));
        for (unsigned i = 1; i < 4; ++i) CHECK(mp.coeffs[i].is_zero());
    }
    SUBCASE("a generator has the linear minimal polynomial") {
        FieldPresentation F = field(r, {"x^3+2*x"});
        MinPoly mp = minimal_polynomial(F.gens[0], F);
        REQUIRE(mp.degree() == 1);
        CHECK(mp.coeffs[0] == -RatFn::variable(mp.coeff_ring, 0));
    }
    SUBCASE("transcendental elements are rejected") {
        Ring r2 = testutil::ring2();
        CHECK_THROWS_WITH_AS(minimal_polynomial(rf("x2", r2), field(r2, {"x1^2"})),
                             "transcendental element", MathError);
    }
}

TEST_CASE("minimal polynomial output is irreducible") {
    Ring r = testutil::ring1();
    MinPoly mp = minimal_polynomial(rf("x", r), field(r, {"x^4"}));
    // Clear into Q[y1, z] and check irreducibility with the factor module.
    Ring yz = make_ring({"y1", "z"});
    MultiPoly cleared = MultiPoly::zero(yz);
    for (std::size_t i = 0; i < mp.coeffs.size(); ++i) {
        REQUIRE(mp.coeffs[i].is_polynomial());
        cleared = cleared + mp.coeffs[i].num().map_vars(yz, {0}) *
                                MultiPoly::variable(yz, 1, static_cast<unsigned>(i));
    }
    CHECK(is_irreducible_q(cleared));
}

TEST_CASE("tower degrees multiply") {
    Ring r = testutil::ring1();
    MinPoly a = minimal_polynomial(rf("x", r), field(r, {"x^6"}));
    MinPoly b = minimal_polynomial(rf("x", r), field(r, {"x^2"}));
    MinPoly c = minimal_polynomial(rf("x^2", r), field(r, {"x^6"}));
    CHECK(a.degree() == 6);
    CHECK(b.degree() == 2);
    CHECK(c.degree() == 3);
    CHECK(a.degree() == b.degree() * c.degree());
}

TEST_CASE("primitive elements with degree certificates") {
    Ring r = testutil::ring1();
    SUBCASE("Q(x^2, x^3) over Q(x^6)") {
        auto [beta, mp] = primitive_element({rf("x^6", r)}, {rf("x^2", r), rf("x^3", r)});
        CHECK(beta == rf("x^2+x^3", r));
        CHECK(mp.degree() == 6);
    }
    SUBCASE("single algebraic element is its own primitive element") {
        auto [beta, mp] = primitive_element({rf("x^2", r)}, {rf("x", r)});
        CHECK(beta == rf("x", r));
        REQUIRE(mp.degree() == 2);
        CHECK(mp.coeffs[0] == -RatFn::variable(mp.coeff_ring, 0));
    }
    SUBCASE("two variables") {
        Ring r2 = testutil::ring2();
        auto [beta, mp] =
            primitive_element({rf("x1^2", r2), rf("x2^2", r2)}, {rf("x1+x2", r2)});
        CHECK(beta == rf("x1+x2", r2));
        REQUIRE(mp.degree() == 4);
        // z^4 - 2(t1+t2) z^2 + (t1-t2)^2
        Ring t = mp.coeff_ring;
        CHECK(mp.coeffs[2] == rf("-2*t1-2*t2", t));
        CHECK(mp.coeffs[0] == rf("(t1-t2)^2", t));
        CHECK(mp.coeffs[1].is_zero());
        CHECK(mp.coeffs[3].is_zero());
    }
}

TEST_CASE("field containment behaves like set inclusion") {
    Ring r = testutil::ring1();
    CHECK(field_contains(field(r, {"x^4"}), field(r, {"x^2"})));
    CHECK(!field_contains(field(r, {"x^2"}), field(r, {"x^3"})));
    FieldPresentation F = field(r, {"x^2+1/x"});
    CHECK(field_contains(F, F));
    // Transitivity on a chain.
    CHECK(field_contains(field(r, {"x^8"}), field(r, {"x^4"})));
    CHECK(field_contains(field(r, {"x^8"}), field(r, {"x^2"})));
    // Antisymmetry up to equality.
    CHECK(field_equal(field(r, {"x+1/x", "x-1/x"}), field(r, {"x"})));
}

TEST_CASE("randomized true memberships with verified witnesses") {
    std::mt19937 rng(53);
    Ring r = testutil::ring2();
    std::uniform_int_distribution<int> small(-3, 3);
    int done = 0;
    while (done < 10) {
        std::vector<RatFn> gens;
        for (int i = 0; i < 2; ++i) {
            MultiPoly p = testutil::random_poly(rng, r, 3, 2, 3);
            if (p.is_constant()) continue;
            gens.push_back(RatFn(p));
        }
        if (gens.size() < 2) continue;
        FieldPresentation F{r, gens};
        // Build a rational expression of the generators.
        RatFn expr = RatFn::constant(r, Rational(small(rng))) +
                     gens[0] * RatFn::constant(r, Rational(small(rng))) +
                     gens[0] * gens[1] * RatFn::constant(r, Rational(small(rng)));
        RatFn den = gens[1] + RatFn::constant(r, Rational(1));
        if (!den.is_zero()) expr = expr / den;
        auto res = is_member(expr, F);
        REQUIRE(res.member);
        CHECK(res.witness->expr.substitute(F.gens) == expr);
        ++done;
    }
}
