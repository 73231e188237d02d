#ifndef UNIRAT_GROEBNER_HPP
#define UNIRAT_GROEBNER_HPP

#include <vector>

#include "unirat/mpoly.hpp"

namespace unirat {

struct Ideal {
    Ring ring;
    std::vector<MultiPoly> generators;

    Ideal(Ring r, std::vector<MultiPoly> gens);
};

struct GroebnerBasis {
    Ring ring;
    std::vector<MultiPoly> elements;  // monic, sorted descending by leading monomial
    bool reduced = false;

    const MonomialOrder& order() const { return ring->order; }
};

/// Reduced Groebner basis via Buchberger with the normal selection strategy
/// and the product/chain pair criteria. Deterministic for fixed input.
GroebnerBasis buchberger(const Ideal& ideal);

/// Unique remainder of f modulo the basis; zero iff f lies in the ideal.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& g);

/// Generators of the elimination ideal i n Q[keep], returned in the
/// original ring. Uses a block order with the dropped variables leading.
std::vector<MultiPoly> eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep);

/// Exhaustive check that every S-polynomial reduces to zero.
bool spolys_reduce_to_zero(const GroebnerBasis& g);

/// When enabled, every basis produced by buchberger() is self-checked
/// (S-polynomial reduction) before being returned.
void set_basis_validation(bool on);
bool basis_validation();

}  // namespace unirat

#endif
