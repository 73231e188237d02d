#ifndef UNIRAT_MPOLY_HPP
#define UNIRAT_MPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unirat/monomial.hpp"
#include "unirat/rational.hpp"

namespace unirat {

/// Sparse multivariate polynomial over Q. Terms are kept sorted in strictly
/// descending ring order with no zero coefficients, so structural equality
/// is mathematical equality.
class MultiPoly {
public:
    struct Term {
        Monomial m;
        Rational c;
    };

    MultiPoly() = default;
    explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

    static MultiPoly zero(Ring ring) { return MultiPoly(std::move(ring)); }
    static MultiPoly constant(Ring ring, Rational c);
    static MultiPoly variable(Ring ring, std::size_t idx, unsigned exp = 1);
    static MultiPoly monomial(Ring ring, Monomial m, Rational c = Rational(1));
    /// Sorts, combines equal monomials, drops zeros.
    static MultiPoly from_terms(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;
    Rational constant_term() const;

    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
    Rational coeff_of(const Monomial& m) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scale(const Rational& c) const;
    MultiPoly mul_term(const Monomial& m, const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (!same_ring(a.ring_, b.ring_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
        return true;
    }

    MultiPoly derivative(std::size_t var) const;

    /// Substitute a rational value for one variable.
    MultiPoly eval_var(std::size_t var, const Rational& value) const;
    /// Substitute a polynomial (same ring) for one variable.
    MultiPoly subst_var(std::size_t var, const MultiPoly& value) const;

    /// Monic under the ring order: divide by the leading coefficient.
    MultiPoly monic() const;

    /// f = c * F with F integer, coprime coefficients and positive leading
    /// coefficient. Zero maps to (1, 0).
    std::pair<Rational, MultiPoly> primitive_integer() const;

    /// Exact division; nullopt if the divisor does not divide exactly.
    std::optional<MultiPoly> divided_by(const MultiPoly& d) const;

    /// View as univariate in `var`: coefficients by ascending exponent.
    std::vector<MultiPoly> coeffs_in(std::size_t var) const;
    static MultiPoly from_coeffs_in(std::size_t var, const std::vector<MultiPoly>& cs, const Ring& ring);

    /// Copy into a ring with the same variables but another order.
    MultiPoly with_order(const Ring& target) const;
    /// Copy into another ring; var_map[i] = index in target of our variable i.
    MultiPoly map_vars(const Ring& target, const std::vector<std::size_t>& var_map) const;

    /// Deterministic total order (degree, then term sequence); for sorting.
    static int compare(const MultiPoly& a, const MultiPoly& b);

    std::string str() const;

private:
    Ring ring_;
    std::vector<Term> terms_;
    void normalize_sorted();  // assumes sorted desc, merges dups / zeros
};

/// GCD, monic-normalized; gcd(0, b) = monic b. Primitive-part recursion with
/// subresultant remainder sequences.
MultiPoly mpoly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Content of f as a univariate polynomial in `var` (gcd of coefficients).
MultiPoly content_wrt(const MultiPoly& f, std::size_t var);
MultiPoly primitive_wrt(const MultiPoly& f, std::size_t var);

/// Resultant of a and b with respect to `var` (exact, including sign).
MultiPoly resultant_wrt(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// Squarefree part of f (product of its distinct irreducible factors).
MultiPoly squarefree_part(const MultiPoly& f);

std::string format_poly(const MultiPoly& f);

}  // namespace unirat

#endif
