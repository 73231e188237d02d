#ifndef UNIRAT_UPOLY_HPP
#define UNIRAT_UPOLY_HPP

#include <utility>
#include <vector>

#include "unirat/mpoly.hpp"

namespace unirat {

/// Dense univariate polynomial over Q, ascending coefficients, no trailing
/// zeros (zero polynomial is the empty vector).
using QPoly = std::vector<Rational>;

namespace upoly {

QPoly trim(QPoly f);
int deg(const QPoly& f);  // deg 0 for constants, -1 for zero
bool is_zero(const QPoly& f);
const Rational& lc(const QPoly& f);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly neg(QPoly a);
QPoly scale(QPoly a, const Rational& c);
QPoly monic(const QPoly& a);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic
QPoly derivative(const QPoly& a);
Rational eval(const QPoly& a, const Rational& x);
QPoly compose(const QPoly& outer, const QPoly& inner);
QPoly pow(const QPoly& a, unsigned e);

QPoly from_mpoly(const MultiPoly& f, std::size_t var);
MultiPoly to_mpoly(const QPoly& f, const Ring& ring, std::size_t var);

/// Yun squarefree decomposition: pairwise-coprime squarefree parts with
/// multiplicities; product of part^mult equals monic(f).
std::vector<std::pair<QPoly, unsigned>> squarefree_decompose(const QPoly& f);

struct Factorization {
    Rational constant;
    std::vector<std::pair<QPoly, unsigned>> factors;  // monic irreducible over Q
};

/// Zassenhaus: Berlekamp images modulo a good small prime, quadratic Hensel
/// lifting past the Mignotte bound, subset recombination smallest first.
Factorization factor(const QPoly& f);

bool is_irreducible(const QPoly& f);

}  // namespace upoly

}  // namespace unirat

#endif
