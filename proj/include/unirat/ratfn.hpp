#ifndef UNIRAT_RATFN_HPP
#define UNIRAT_RATFN_HPP

#include <string>
#include <vector>

#include "unirat/mpoly.hpp"

namespace unirat {

/// Rational function in canonical form: gcd(num, den) = 1, den != 0, and
/// den's leading coefficient under the ring order is 1. Structural equality
/// is mathematical equality.
class RatFn {
public:
    RatFn() = default;
    explicit RatFn(MultiPoly num);  // denominator 1
    RatFn(MultiPoly num, MultiPoly den);

    static RatFn zero(const Ring& ring) { return RatFn(MultiPoly::zero(ring)); }
    static RatFn constant(const Ring& ring, const Rational& c) {
        return RatFn(MultiPoly::constant(ring, c));
    }
    static RatFn variable(const Ring& ring, std::size_t idx) {
        return RatFn(MultiPoly::variable(ring, idx));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const Ring& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }
    Rational constant_value() const;

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
    RatFn inverse() const;
    RatFn pow(long e) const;

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFn derivative(std::size_t var) const;

    /// Evaluate with every variable replaced by a rational function (possibly
    /// of a different ring); values.size() must equal ring var count.
    RatFn substitute(const std::vector<RatFn>& values) const;

    /// Total degree max(deg num, deg den); the natural degree for univariate
    /// rational functions.
    unsigned degree() const { return std::max(num_.total_degree(), den_.total_degree()); }

    static int compare(const RatFn& a, const RatFn& b);

    std::string str() const;

private:
    MultiPoly num_, den_;
};

std::string format_ratfn(const RatFn& f);

}  // namespace unirat

#endif
