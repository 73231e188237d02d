#include "unirat/ratfn.hpp"

namespace unirat {

RatFn::RatFn(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.ring(), Rational(1))) {}

RatFn::RatFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!same_ring(num_.ring(), den_.ring())) throw InternalError("RatFn: ring mismatch");
    if (den_.is_zero()) throw MathError("RatFn: zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.ring(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = mpoly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divided_by(g);
            den_ = *den_.divided_by(g);
        }
    }
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = num_.scale(inv);
        den_ = den_.scale(inv);
    }
}

Rational RatFn::constant_value() const {
    if (!is_constant()) throw InternalError("RatFn: not a constant");
    if (num_.is_zero()) return Rational(0);
    return num_.leading_coeff() / den_.leading_coeff();
}

RatFn RatFn::operator-() const {
    RatFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const { return RatFn(num_ * o.num_, den_ * o.den_); }

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw MathError("RatFn: division by zero");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw MathError("RatFn: inverse of zero");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(long e) const {
    if (e == 0) return constant(ring(), Rational(1));
    if (e < 0) return inverse().pow(-e);
    return RatFn(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFn RatFn::derivative(std::size_t var) const {
    return RatFn(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

namespace {

RatFn eval_poly_at(const MultiPoly& p, const std::vector<RatFn>& values, const Ring& target) {
    RatFn acc = RatFn::zero(target);
    for (const auto& t : p.terms()) {
        RatFn term = RatFn::constant(target, t.c);
        for (std::size_t i = 0; i < values.size(); ++i)
            if (t.m[i]) term *= values[i].pow(t.m[i]);
        acc += term;
    }
    return acc;
}

}  // namespace

RatFn RatFn::substitute(const std::vector<RatFn>& values) const {
    if (values.size() != ring()->vars.size()) throw InternalError("RatFn::substitute: arity mismatch");
    const Ring& target = values.empty() ? ring() : values[0].ring();
    RatFn n = eval_poly_at(num_, values, target);
    RatFn d = eval_poly_at(den_, values, target);
    if (d.is_zero()) throw MathError("RatFn::substitute: denominator vanished");
    return n / d;
}

int RatFn::compare(const RatFn& a, const RatFn& b) {
    int c = MultiPoly::compare(a.num_, b.num_);
    if (c != 0) return c;
    return MultiPoly::compare(a.den_, b.den_);
}

std::string RatFn::str() const { return format_ratfn(*this); }

std::string format_ratfn(const RatFn& f) {
    if (f.den().is_one()) return format_poly(f.num());
    std::string n = format_poly(f.num());
    std::string d = format_poly(f.den());
    if (f.num().term_count() > 1) n = "(" + n + ")";
    bool d_simple = f.den().term_count() == 1 && f.den().leading_coeff().is_one() &&
                    f.den().leading_monomial().degree() <= 1;
    if (!d_simple) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace unirat
