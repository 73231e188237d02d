#ifndef UNIRAT_FACTOR_HPP
#define UNIRAT_FACTOR_HPP

#include <vector>

#include "unirat/mpoly.hpp"

namespace unirat {

struct Factorization {
    Rational constant;
    std::vector<std::pair<MultiPoly, unsigned>> factors;

    MultiPoly product(const Ring& ring) const;
};

/// Factor a univariate polynomial over Q into monic irreducible factors
/// times a rational constant.
Factorization factor_univariate_q(const MultiPoly& f);

/// Factor a multivariate polynomial over Q. Factors are integer-primitive
/// irreducible with positive leading coefficient; constant makes the product
/// exact. Evaluation + Hensel lifting behind a monic transform.
Factorization factor_multivariate_q(const MultiPoly& f);

bool is_irreducible_q(const MultiPoly& f);

}  // namespace unirat

#endif
