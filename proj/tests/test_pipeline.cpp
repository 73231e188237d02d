#include <doctest.h>

#include "helpers.hpp"
#include "unirat/pipeline.hpp"

using namespace unirat;
using testutil::rf;

namespace {

FieldPresentation field(const Ring& r, std::initializer_list<const char*> gens) {
    std::vector<RatFn> g;
    for (const char* s : gens) g.push_back(rf(s, r));
    return FieldPresentation{r, g};
}

bool some_field_equals(const PipelineResult& res, const Ring& r,
                       std::initializer_list<const char*> gens) {
    FieldPresentation target = field(r, gens);
    for (const auto& f : res.fields) {
        FieldPresentation got{r, f.generators_x};
        if (field_equal(got, target)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("rewriting to a simple extension") {
    Ring r = testutil::ring1();
    SUBCASE("Q(x^4) in Q(x)") {
        RewriteResult rw = rewrite_to_simple(field(r, {"x^4"}));
        CHECK(rw.transc_basis.size() == 1);
        CHECK(!rw.bottom_primitive.has_value());
        CHECK(rw.ambient_primitive == rf("x", r));
        CHECK(rw.p_alpha.degree() == 4);
        CHECK(rw.p_alpha_base.degree() == 4);
        CHECK(rw.top_degree_over_base == 4);
        // p vanishes at alpha after back-substitution.
        CHECK(rw.p_alpha_base.eval(rw.transc_basis, rw.ambient_primitive).is_zero());
    }
    SUBCASE("Q(x1^2, x2^2) in Q(x1, x2)") {
        Ring r2 = testutil::ring2();
        RewriteResult rw = rewrite_to_simple(field(r2, {"x1^2", "x2^2"}));
        CHECK(rw.transc_basis.size() == 2);
        CHECK(rw.ambient_primitive == rf("x1+x2", r2));
        REQUIRE(rw.p_alpha_base.degree() == 4);
        Ring t = rw.p_alpha_base.coeff_ring;
        CHECK(rw.p_alpha_base.coeffs[2] == rf("-2*t1-2*t2", t));
        CHECK(rw.p_alpha_base.coeffs[0] == rf("(t1-t2)^2", t));
    }
    SUBCASE("trivial extension") {
        RewriteResult rw = rewrite_to_simple(field(r, {"x"}));
        CHECK(rw.p_alpha_base.degree() == 1);
        CHECK(rw.top_degree_over_base == 1);
    }
    SUBCASE("non-algebraic input is rejected") {
        Ring r2 = testutil::ring2();
        CHECK_THROWS_WITH_AS(rewrite_to_simple(field(r2, {"x1^2"})), "extension not algebraic",
                             MathError);
    }
}

TEST_CASE("golden lattice: Q(x^4) in Q(x)") {
    Ring r = testutil::ring1();
    PipelineResult res = algebraic_intermediate_fields(field(r, {"x^4"}));
    REQUIRE(res.fields.size() == 1);
    CHECK(some_field_equals(res, r, {"x^2"}));
    CHECK(res.fields[0].extension_degree_over_bottom == 2);
}

TEST_CASE("golden lattice: Q(x^2 + x^-2) in Q(x)") {
    Ring r = testutil::ring1();
    PipelineResult res = algebraic_intermediate_fields(field(r, {"x^2 + 1/x^2"}));
    REQUIRE(res.fields.size() == 3);
    CHECK(some_field_equals(res, r, {"x^2"}));
    CHECK(some_field_equals(res, r, {"x + 1/x"}));
    CHECK(some_field_equals(res, r, {"x - 1/x"}));
    // Pairwise incomparable.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            FieldPresentation a{r, res.fields[i].generators_x};
            FieldPresentation b{r, res.fields[j].generators_x};
            CHECK(!field_contains(a, b));
        }
}

TEST_CASE("golden lattice: Q(x1^2, x2^2) in Q(x1, x2)") {
    Ring r = testutil::ring2();
    PipelineResult res = algebraic_intermediate_fields(field(r, {"x1^2", "x2^2"}));
    REQUIRE(res.fields.size() == 3);
    CHECK(some_field_equals(res, r, {"x1", "x2^2"}));
    CHECK(some_field_equals(res, r, {"x1^2", "x2"}));
    CHECK(some_field_equals(res, r, {"x1^2", "x1*x2"}));
}

TEST_CASE("prime-degree extensions have no intermediate fields") {
    Ring r = testutil::ring1();
    CHECK(algebraic_intermediate_fields(field(r, {"x^3"})).fields.empty());
    CHECK(algebraic_intermediate_fields(field(r, {"x^5"})).fields.empty());
}

TEST_CASE("degree accounting and membership soundness on the goldens") {
    Ring r = testutil::ring1();
    FieldPresentation F = field(r, {"x^8"});
    PipelineResult res = algebraic_intermediate_fields(F);
    REQUIRE(res.fields.size() == 2);
    CHECK(some_field_equals(res, r, {"x^2"}));
    CHECK(some_field_equals(res, r, {"x^4"}));
    TagSystem bottom(F);
    for (const auto& f : res.fields) {
        FieldPresentation L{r, f.generators_x};
        TagSystem lts(L);
        // Bottom generators live in every answer.
        for (const auto& g : F.gens) CHECK(lts.is_member(g).member);
        // Strictness both ways.
        bool above = false;
        for (const auto& g : f.generators_x) above = above || !bottom.is_member(g).member;
        CHECK(above);
        CHECK(!lts.is_member(rf("x", r)).member);
        // Output shape: at most trdeg + 1 generators after pruning.
        CHECK(f.generators_x.size() <= 2);
    }
}

TEST_CASE("luroth closure") {
    Ring r2 = testutil::ring2();
    SUBCASE("composite generator") {
        RatFn h = luroth_closure(field(r2, {"(x1*x2)^2 + x1*x2"}));
        CHECK(field_equal(FieldPresentation{r2, {h}}, field(r2, {"x1*x2"})));
    }
    SUBCASE("already closed") {
        RatFn h = luroth_closure(field(r2, {"x1+x2"}));
        CHECK(field_equal(FieldPresentation{r2, {h}}, field(r2, {"x1+x2"})));
    }
    SUBCASE("square of a product") {
        RatFn h = luroth_closure(field(r2, {"x1^2*x2^2"}));
        CHECK(field_equal(FieldPresentation{r2, {h}}, field(r2, {"x1*x2"})));
    }
    SUBCASE("closure is idempotent") {
        RatFn h = luroth_closure(field(r2, {"(x1*x2)^2 + x1*x2"}));
        RatFn h2 = luroth_closure(FieldPresentation{r2, {h}});
        CHECK(field_equal(FieldPresentation{r2, {h}}, FieldPresentation{r2, {h2}}));
    }
    SUBCASE("wrong transcendence degree is rejected") {
        CHECK_THROWS_AS(luroth_closure(field(r2, {"x1", "x2"})), MathError);
    }
    SUBCASE("univariate ambient reports the whole field") {
        Ring r1 = testutil::ring1();
        RatFn h = luroth_closure(field(r1, {"x^4"}));
        CHECK(h == rf("x", r1));
    }
}

TEST_CASE("univariate decomposition") {
    Ring r = testutil::ring1();
    SUBCASE("x^4 + 2x^2") {
        auto ds = decompose_univariate(rf("x^4 + 2*x^2", r));
        REQUIRE(ds.size() == 1);
        CHECK(field_equal(FieldPresentation{r, {ds[0].inner}}, field(r, {"x^2"})));
        // Verify the composition outer(inner) = f.
        RatFn composed = ds[0].outer.substitute({ds[0].inner});
        CHECK(composed == rf("x^4 + 2*x^2", r));
    }
    SUBCASE("x^6 has exactly the two factorizations of its degree") {
        auto ds = decompose_univariate(rf("x^6", r));
        REQUIRE(ds.size() == 2);
        CHECK(field_equal(FieldPresentation{r, {ds[0].inner}}, field(r, {"x^2"})));
        CHECK(field_equal(FieldPresentation{r, {ds[1].inner}}, field(r, {"x^3"})));
        for (const auto& d : ds) CHECK(d.outer.substitute({d.inner}) == rf("x^6", r));
    }
    SUBCASE("prime degree decomposes trivially only") {
        CHECK(decompose_univariate(rf("x^2+1", r)).empty());
        CHECK(decompose_univariate(rf("x^3+x", r)).empty());
    }
    SUBCASE("constant input is rejected") {
        CHECK_THROWS_AS(decompose_univariate(rf("5", r)), MathError);
    }
}

TEST_CASE("randomized composition soundness") {
    std::mt19937 rng(61);
    Ring r = testutil::ring1();
    std::uniform_int_distribution<long> cf(-4, 4);
    int done = 0;
    while (done < 4) {
        // f = u(h) with deg u * deg h <= 8
        QPoly u{Rational(cf(rng)), Rational(cf(rng)), Rational(1)};
        QPoly h{Rational(cf(rng)), Rational(cf(rng)), Rational(0), Rational(1)};
        QPoly comp = upoly::compose(u, h);
        MultiPoly fm = upoly::to_mpoly(comp, r, 0);
        if (fm.is_constant()) continue;
        FieldPresentation F{r, {RatFn(fm)}};
        PipelineResult res = algebraic_intermediate_fields(F);
        TagSystem bottom(F);
        for (const auto& fld : res.fields) {
            FieldPresentation L{r, fld.generators_x};
            TagSystem lts(L);
            for (const auto& g : F.gens) CHECK(lts.is_member(g).member);
            bool above = false;
            for (const auto& g : fld.generators_x) above = above || !bottom.is_member(g).member;
            CHECK(above);
            CHECK(!lts.is_member(rf("x", r)).member);
        }
        ++done;
    }
}
