#ifndef UNIRAT_SUBFIELDS_HPP
#define UNIRAT_SUBFIELDS_HPP

#include <string>
#include <vector>

#include "unirat/algext.hpp"

namespace unirat {

/// An E-embedding E[alpha] -> E[alpha] determined by alpha -> image, where
/// image is a root of p_alpha.
struct EmbeddingMap {
    ExtElement image;
};

/// A composition-closed set of embedding maps containing the identity.
struct EmbeddingGroup {
    std::vector<EmbeddingMap> elements;  // sorted canonically
    std::size_t order() const { return elements.size(); }
};

/// One embedding per linear factor z - p_i(alpha) of the factorization of
/// p_alpha over E[alpha]; each image is verified to be a root.
std::vector<EmbeddingMap> embeddings_from_factors(const std::vector<ExtPoly>& factors,
                                                  const AlgExtension& ext);

EmbeddingMap compose(const EmbeddingMap& a, const EmbeddingMap& b, const AlgExtension& ext);

/// Smallest composition-closed set containing the inputs and the identity.
EmbeddingGroup group_closure(const std::vector<EmbeddingMap>& maps, const AlgExtension& ext);

/// All distinct prime-order cyclic subgroups (empty for the trivial group).
std::vector<EmbeddingGroup> minimal_subgroups(const EmbeddingGroup& g, const AlgExtension& ext);

/// Every subgroup arising as the closure of a subset of g's elements.
std::vector<EmbeddingGroup> all_subgroups(const EmbeddingGroup& g, const AlgExtension& ext);

struct CandidateField {
    enum class Provenance { GroupResolvent, BlockProduct };
    std::vector<ExtElement> coeff_generators;
    Provenance provenance;
    std::string defining_data;
};

/// h(z) = prod_{sigma in sub} (z - sigma(alpha)); returns its non-leading
/// coefficients as candidate generators.
CandidateField fixed_field_candidate(const EmbeddingGroup& sub, const AlgExtension& ext);

/// B.2 generalized: subsets S of the non-identity factors, by increasing
/// total degree, with 1 + deg(S) a proper divisor of deg p_alpha compatible
/// with the bottom degree; coefficients of (z - alpha) * prod(S).
std::vector<CandidateField> block_candidates(const std::vector<ExtPoly>& factors,
                                             const AlgExtension& ext, unsigned bottom_degree,
                                             std::size_t cap, bool* cap_exceeded);

struct IntermediateField {
    std::vector<ExtElement> generators;   // base elements filtered out
    unsigned degree_over_base;            // [L : E]
    unsigned degree_over_bottom;          // [L : F]
};

struct SubfieldSearchResult {
    std::vector<IntermediateField> fields;
    std::vector<std::string> warnings;
};

/// Algorithm 1 search over E in E[alpha]: factors p_alpha over E[alpha],
/// merges B.1 and B.2 candidates, certifies each candidate strictly between
/// the field generated by `bottom` and E[alpha], deduplicates, and orders
/// deterministically.
SubfieldSearchResult find_intermediate_fields(const AlgExtension& ext,
                                              const std::vector<ExtElement>& bottom,
                                              std::size_t cap);

}  // namespace unirat

#endif
