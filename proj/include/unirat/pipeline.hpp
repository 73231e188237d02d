#ifndef UNIRAT_PIPELINE_HPP
#define UNIRAT_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "unirat/fieldops.hpp"
#include "unirat/subfields.hpp"

namespace unirat {

/// The rewriting of an algebraic extension Q(f) in Q(x) as a simple
/// extension: a transcendence basis inside the generators, a primitive
/// element for the bottom field over it, a primitive element alpha for the
/// ambient field, and minimal polynomials for both.
struct RewriteResult {
    std::vector<std::size_t> basis_indices;
    std::vector<RatFn> transc_basis;                 // alpha^_1..alpha^_k (in x)
    std::optional<RatFn> bottom_primitive;           // beta; absent when no algebraic part
    std::optional<MinPoly> bottom_minpoly;           // p_beta over t tags
    RatFn ambient_primitive;                         // alpha = c_1 x_1 + ... + c_n x_n
    MinPoly p_alpha_base;                            // minpoly of alpha over E0 = Q(T), t tags
    MinPoly p_alpha;                                 // minpoly of alpha over the bottom field, y tags
    unsigned top_degree_over_base = 0;               // [Q(x) : E0]

    /// t_j -> transc_basis[j], alpha -> ambient_primitive.
    RatFn back_substitute(const ExtElement& e) const;
};

RewriteResult rewrite_to_simple(const FieldPresentation& F);

struct SubfieldAnswer {
    std::vector<RatFn> generators_x;
    unsigned extension_degree_over_bottom = 0;
};

struct PipelineResult {
    std::vector<SubfieldAnswer> fields;
    std::vector<std::string> warnings;
};

/// Algorithm 2 for the algebraic case trdeg(F) = n: rewrite, factor the
/// minimal polynomial over the extension, search decomposition blocks,
/// recover generators in the original variables, certify both containments.
PipelineResult algebraic_intermediate_fields(const FieldPresentation& F, std::size_t cap = 4096);

/// Relative algebraic closure of a transcendence-degree-1 field inside
/// Q(x_1..x_n): a single generator h with every f_i a member of Q(h), h
/// uncomposable and algebraic over F.
RatFn luroth_closure(const FieldPresentation& F);

struct Decomposition {
    RatFn outer;  // in a univariate ring ("z")
    RatFn inner;  // in the ambient ring
};

/// All inequivalent decompositions f = outer(inner) of a univariate rational
/// function, with 2 <= deg inner < deg f, up to Moebius equivalence of inner.
std::vector<Decomposition> decompose_univariate(const RatFn& f);

}  // namespace unirat

#endif
