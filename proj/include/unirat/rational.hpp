#ifndef UNIRAT_RATIONAL_HPP
#define UNIRAT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace unirat {

using Integer = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematical errors an input can trigger (division by zero, transcendental
// element where an algebraic one is required, ...).
struct MathError : Error {
    using Error::Error;
};

// Arithmetic invariant violations; these indicate a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

/// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0,
/// zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw MathError("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw MathError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (is_zero()) throw MathError("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(unsigned long e) const {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
        return Rational(std::move(r));  // already canonical
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer int_pow(const Integer& a, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

}  // namespace unirat

#endif
