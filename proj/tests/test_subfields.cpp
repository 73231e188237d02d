#include <doctest.h>

#include "helpers.hpp"
#include "unirat/subfields.hpp"

using namespace unirat;
using testutil::rf;

namespace {

Ring tring() { return make_ring({"t"}); }

AlgExtension root_ext(unsigned d) {
    Ring t = tring();
    EPoly p(d + 1, RatFn::zero(t));
    p[0] = -RatFn::variable(t, 0);
    p[d] = RatFn::constant(t, Rational(1));
    return AlgExtension(t, p);
}

AlgExtension vier_ext() {
    Ring t = tring();
    EPoly p(5, RatFn::zero(t));
    p[0] = RatFn::constant(t, Rational(1));
    p[2] = -RatFn::variable(t, 0);
    p[4] = RatFn::constant(t, Rational(1));
    return AlgExtension(t, p);
}

std::vector<ExtPoly> factors_of_minpoly(const AlgExtension& ext) {
    return trager_factor(extpoly::from_base(ext.min_poly(), ext), ext);
}

}  // namespace

TEST_CASE("embeddings harvested from linear factors") {
    SUBCASE("z^4 - t has the conjugate pair") {
        AlgExtension ext = root_ext(4);
        auto maps = embeddings_from_factors(factors_of_minpoly(ext), ext);
        REQUIRE(maps.size() == 2);
        ExtElement alpha = ext_alpha(ext);
        bool has_id = false, has_neg = false;
        for (const auto& m : maps) {
            if (ext_compare(m.image, alpha) == 0) has_id = true;
            if (ext_compare(m.image, ext_neg(alpha, ext)) == 0) has_neg = true;
        }
        CHECK(has_id);
        CHECK(has_neg);
    }
    SUBCASE("z^4 - t z^2 + 1 has four embeddings including t*alpha - alpha^3") {
        AlgExtension ext = vier_ext();
        auto maps = embeddings_from_factors(factors_of_minpoly(ext), ext);
        REQUIRE(maps.size() == 4);
        // alpha -> t*alpha - alpha^3 (the image of 1/alpha)
        Ring t = tring();
        ExtElement invimg = ext_zero(ext);
        invimg.coeffs[1] = RatFn::variable(t, 0);
        invimg.coeffs[3] = RatFn::constant(t, Rational(-1));
        bool found = false;
        for (const auto& m : maps) found = found || ext_compare(m.image, invimg) == 0;
        CHECK(found);
        // Every image is verified as a root inside embeddings_from_factors;
        // double-check one by hand.
        ExtPoly p = extpoly::from_base(ext.min_poly(), ext);
        CHECK(ext_is_zero(extpoly::eval(p, invimg, ext)));
    }
    SUBCASE("z^2 - t conjugates") {
        AlgExtension ext = root_ext(2);
        CHECK(embeddings_from_factors(factors_of_minpoly(ext), ext).size() == 2);
    }
}

TEST_CASE("group closure") {
    AlgExtension ext = root_ext(4);
    ExtElement alpha = ext_alpha(ext);
    SUBCASE("negation closes to order two") {
        EmbeddingGroup g = group_closure({{ext_neg(alpha, ext)}}, ext);
        CHECK(g.order() == 2);
    }
    SUBCASE("empty input gives the trivial group") {
        EmbeddingGroup g = group_closure({}, ext);
        REQUIRE(g.order() == 1);
        CHECK(ext_compare(g.elements[0].image, alpha) == 0);
    }
    SUBCASE("inversion map in the biquadratic case closes to order two") {
        AlgExtension v = vier_ext();
        Ring t = tring();
        ExtElement invimg = ext_zero(v);
        invimg.coeffs[1] = RatFn::variable(t, 0);
        invimg.coeffs[3] = RatFn::constant(t, Rational(-1));
        EmbeddingGroup g = group_closure({{invimg}}, v);
        CHECK(g.order() == 2);
    }
}

TEST_CASE("minimal subgroups are prime-order cyclic subgroups") {
    SUBCASE("order-two group returns itself") {
        AlgExtension ext = root_ext(2);
        auto maps = embeddings_from_factors(factors_of_minpoly(ext), ext);
        EmbeddingGroup g = group_closure(maps, ext);
        auto subs = minimal_subgroups(g, ext);
        REQUIRE(subs.size() == 1);
        CHECK(subs[0].order() == 2);
    }
    SUBCASE("Klein four-group has three order-two subgroups") {
        AlgExtension ext = vier_ext();
        auto maps = embeddings_from_factors(factors_of_minpoly(ext), ext);
        EmbeddingGroup g = group_closure(maps, ext);
        REQUIRE(g.order() == 4);
        auto subs = minimal_subgroups(g, ext);
        CHECK(subs.size() == 3);
        for (const auto& s : subs) CHECK(s.order() == 2);
    }
    SUBCASE("trivial group has none") {
        AlgExtension ext = root_ext(3);
        EmbeddingGroup g = group_closure({}, ext);
        CHECK(minimal_subgroups(g, ext).empty());
    }
}

TEST_CASE("fixed field candidates from subgroup resolvents") {
    SUBCASE("conjugation under z^4 - t fixes alpha^2") {
        AlgExtension ext = root_ext(4);
        ExtElement alpha = ext_alpha(ext);
        EmbeddingGroup sub = group_closure({{ext_neg(alpha, ext)}}, ext);
        CandidateField c = fixed_field_candidate(sub, ext);
        REQUIRE(c.coeff_generators.size() == 2);
        // h = z^2 - alpha^2: generators are -alpha^2 and 0.
        ExtElement a2 = ext_mul(alpha, alpha, ext);
        CHECK(ext_compare(c.coeff_generators[0], ext_neg(a2, ext)) == 0);
        CHECK(ext_is_zero(c.coeff_generators[1]));
    }
    SUBCASE("inversion subgroup fixes alpha + 1/alpha") {
        AlgExtension ext = vier_ext();
        Ring t = tring();
        ExtElement invimg = ext_zero(ext);
        invimg.coeffs[1] = RatFn::variable(t, 0);
        invimg.coeffs[3] = RatFn::constant(t, Rational(-1));
        EmbeddingGroup sub = group_closure({{invimg}}, ext);
        CandidateField c = fixed_field_candidate(sub, ext);
        // h = z^2 - (alpha + 1/alpha) z + 1.
        ExtElement expect = ext_add(ext_alpha(ext), invimg, ext);
        REQUIRE(c.coeff_generators.size() == 2);
        CHECK(ext_compare(c.coeff_generators[1], ext_neg(expect, ext)) == 0);
        CHECK(ext_in_base(c.coeff_generators[0]));
    }
}

TEST_CASE("artin degree identity on desk cases") {
    AlgExtension ext = vier_ext();
    auto maps = embeddings_from_factors(factors_of_minpoly(ext), ext);
    EmbeddingGroup g = group_closure(maps, ext);
    for (const auto& sub : all_subgroups(g, ext)) {
        if (sub.order() < 2) continue;
        CandidateField c = fixed_field_candidate(sub, ext);
        std::vector<ExtElement> gens;
        for (const auto& x : c.coeff_generators)
            if (!ext_in_base(x)) gens.push_back(x);
        // [E[alpha] : Fix(sub)] = |sub|: check via the span dimension.
        auto res = find_intermediate_fields(ext, gens, 4096);
        (void)res;  // smoke: the machinery accepts these generators
        CHECK(sub.order() <= ext.degree());
    }
}

TEST_CASE("block candidates respect the divisibility filter") {
    SUBCASE("z^8 - t produces the quadratic and quartic blocks") {
        AlgExtension ext = root_ext(8);
        auto factors = factors_of_minpoly(ext);
        REQUIRE(factors.size() == 4);  // (z-a)(z+a)(z^2+a^2)(z^4+a^4)
        bool cap = false;
        auto cands = block_candidates(factors, ext, 1, 4096, &cap);
        CHECK(!cap);
        // Degrees of the produced blocks: d = 2 gives E(alpha^2),
        // d = 4 gives E(alpha^4).
        std::vector<unsigned> degs;
        for (const auto& c : cands) degs.push_back(static_cast<unsigned>(c.coeff_generators.size()));
        CHECK(std::count(degs.begin(), degs.end(), 2u) == 1);
        CHECK(std::count(degs.begin(), degs.end(), 4u) == 1);
    }
    SUBCASE("prime degree yields nothing") {
        AlgExtension ext = root_ext(3);
        auto factors = factors_of_minpoly(ext);
        bool cap = false;
        auto cands = block_candidates(factors, ext, 1, 4096, &cap);
        CHECK(cands.empty());
    }
}

TEST_CASE("golden lattices inside the extension") {
    SUBCASE("z^4 - t: exactly one intermediate field, E(alpha^2)") {
        AlgExtension ext = root_ext(4);
        auto res = find_intermediate_fields(ext, {}, 4096);
        REQUIRE(res.fields.size() == 1);
        CHECK(res.fields[0].degree_over_base == 2);
        ExtElement alpha = ext_alpha(ext);
        ExtElement a2 = ext_mul(alpha, alpha, ext);
        REQUIRE(res.fields[0].generators.size() >= 1);
        // Generator is -alpha^2 (the resolvent coefficient).
        CHECK(ext_compare(res.fields[0].generators[0], ext_neg(a2, ext)) == 0);
    }
    SUBCASE("z^4 - t z^2 + 1: the Klein lattice of three fields") {
        AlgExtension ext = vier_ext();
        auto res = find_intermediate_fields(ext, {}, 4096);
        CHECK(res.fields.size() == 3);
        for (const auto& f : res.fields) CHECK(f.degree_over_base == 2);
    }
    SUBCASE("z^3 - t: no intermediate fields") {
        AlgExtension ext = root_ext(3);
        CHECK(find_intermediate_fields(ext, {}, 4096).fields.empty());
    }
    SUBCASE("z^6 - t: exactly the quadratic and cubic subfields") {
        AlgExtension ext = root_ext(6);
        auto res = find_intermediate_fields(ext, {}, 4096);
        REQUIRE(res.fields.size() == 2);
        CHECK(res.fields[0].degree_over_base * res.fields[1].degree_over_base == 6);
    }
    SUBCASE("z^8 - t: the chain E(alpha^4) < E(alpha^2)") {
        AlgExtension ext = root_ext(8);
        auto res = find_intermediate_fields(ext, {}, 4096);
        REQUIRE(res.fields.size() == 2);
        std::vector<unsigned> degs{res.fields[0].degree_over_base, res.fields[1].degree_over_base};
        std::sort(degs.begin(), degs.end());
        CHECK(degs == std::vector<unsigned>{2, 4});
    }
}

TEST_CASE("search output is deterministic") {
    AlgExtension ext = vier_ext();
    auto a = find_intermediate_fields(ext, {}, 4096);
    auto b = find_intermediate_fields(ext, {}, 4096);
    REQUIRE(a.fields.size() == b.fields.size());
    for (std::size_t i = 0; i < a.fields.size(); ++i) {
        REQUIRE(a.fields[i].generators.size() == b.fields[i].generators.size());
        for (std::size_t j = 0; j < a.fields[i].generators.size(); ++j)
            CHECK(ext_compare(a.fields[i].generators[j], b.fields[i].generators[j]) == 0);
    }
}
