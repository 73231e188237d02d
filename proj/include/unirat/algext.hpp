#ifndef UNIRAT_ALGEXT_HPP
#define UNIRAT_ALGEXT_HPP

#include <vector>

#include "unirat/ratfn.hpp"

namespace unirat {

/// Dense univariate polynomial over the rational function field Q(t_1..t_k):
/// ascending coefficients, no trailing zeros.
using EPoly = std::vector<RatFn>;

namespace epoly {

EPoly trim(EPoly f);
int deg(const EPoly& f);
bool is_zero(const EPoly& f);
EPoly add(const EPoly& a, const EPoly& b);
EPoly sub(const EPoly& a, const EPoly& b);
EPoly mul(const EPoly& a, const EPoly& b);
EPoly scale(EPoly a, const RatFn& c);
EPoly monic(const EPoly& a);
std::pair<EPoly, EPoly> divmod(const EPoly& a, const EPoly& b);
EPoly gcd(const EPoly& a, const EPoly& b);  // monic
EPoly derivative(const EPoly& a);

}  // namespace epoly

/// Simple algebraic extension E[alpha] of E = Q(t_1..t_k) by a monic
/// irreducible polynomial p_alpha. Irreducibility is certified at
/// construction by multivariate factorization of the denominator-cleared
/// form.
class AlgExtension {
public:
    AlgExtension(Ring base_ring, EPoly min_poly);

    const Ring& base_ring() const { return base_; }
    const EPoly& min_poly() const { return p_; }
    unsigned degree() const { return deg_; }

private:
    Ring base_;
    EPoly p_;  // monic, ascending, includes the leading 1
    unsigned deg_ = 0;
};

/// Element of E[alpha]: sum coeffs[j] * alpha^j with deg < [E[alpha]:E].
struct ExtElement {
    std::vector<RatFn> coeffs;
};

ExtElement ext_zero(const AlgExtension& ext);
ExtElement ext_one(const AlgExtension& ext);
ExtElement ext_alpha(const AlgExtension& ext);
ExtElement ext_from_base(const RatFn& c, const AlgExtension& ext);
ExtElement ext_from_epoly(EPoly f, const AlgExtension& ext);  // reduces mod p_alpha

bool ext_is_zero(const ExtElement& e);
bool ext_in_base(const ExtElement& e);
RatFn ext_to_base(const ExtElement& e, const AlgExtension& ext);
int ext_compare(const ExtElement& a, const ExtElement& b);

ExtElement ext_add(const ExtElement& a, const ExtElement& b, const AlgExtension& ext);
ExtElement ext_sub(const ExtElement& a, const ExtElement& b, const AlgExtension& ext);
ExtElement ext_neg(const ExtElement& a, const AlgExtension& ext);
ExtElement ext_mul(const ExtElement& a, const ExtElement& b, const AlgExtension& ext);
ExtElement ext_scale(const ExtElement& a, const RatFn& c, const AlgExtension& ext);
/// Multiplicative inverse via the extended Euclidean algorithm against
/// p_alpha; errors on zero.
ExtElement ext_invert(const ExtElement& e, const AlgExtension& ext);
ExtElement ext_pow(const ExtElement& a, unsigned e, const AlgExtension& ext);
/// Evaluate the polynomial with coefficients cs at the element x.
ExtElement ext_eval_poly(const std::vector<ExtElement>& cs, const ExtElement& x,
                         const AlgExtension& ext);

/// Dense polynomial in z over E[alpha], ascending; leading coefficient
/// nonzero.
struct ExtPoly {
    std::vector<ExtElement> coeffs;
};

namespace extpoly {

ExtPoly trim(ExtPoly f);
int deg(const ExtPoly& f);
bool is_zero(const ExtPoly& f);
bool is_monic(const ExtPoly& f, const AlgExtension& ext);
ExtPoly from_base(const EPoly& f, const AlgExtension& ext);
ExtPoly add(const ExtPoly& a, const ExtPoly& b, const AlgExtension& ext);
ExtPoly sub(const ExtPoly& a, const ExtPoly& b, const AlgExtension& ext);
ExtPoly mul(const ExtPoly& a, const ExtPoly& b, const AlgExtension& ext);
ExtPoly scale(const ExtPoly& a, const ExtElement& c, const AlgExtension& ext);
ExtPoly monic(const ExtPoly& a, const AlgExtension& ext);
std::pair<ExtPoly, ExtPoly> divmod(const ExtPoly& a, const ExtPoly& b, const AlgExtension& ext);
ExtPoly gcd(const ExtPoly& a, const ExtPoly& b, const AlgExtension& ext);  // monic
ExtPoly derivative(const ExtPoly& a, const AlgExtension& ext);
/// Substitute z -> z + c.
ExtPoly shift_z(const ExtPoly& f, const ExtElement& c, const AlgExtension& ext);
ExtElement eval(const ExtPoly& f, const ExtElement& x, const AlgExtension& ext);
bool equal(const ExtPoly& a, const ExtPoly& b);
int compare(const ExtPoly& a, const ExtPoly& b);

}  // namespace extpoly

/// Norm from E[alpha][z] down to E[z], computed as the resultant in the
/// alpha variable against the cleared minimal polynomial; returned in
/// Q[t_1..t_k, z] (denominators of f cleared first).
MultiPoly trager_norm(const ExtPoly& f, const AlgExtension& ext);

/// Trager's norm method: factor a monic squarefree f over E[alpha] by
/// factoring Norm(f(z - s*alpha)) over E and pulling factors back through
/// gcds. Deterministic shift search s = 0, 1, -1, 2, -2, ...
std::vector<ExtPoly> trager_factor(const ExtPoly& f, const AlgExtension& ext);

}  // namespace unirat

#endif
