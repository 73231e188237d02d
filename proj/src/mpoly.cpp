#include "unirat/mpoly.hpp"

#include <algorithm>
#include <map>

namespace unirat {

MultiPoly MultiPoly::constant(Ring ring, Rational c) {
    MultiPoly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->vars.size()), std::move(c)});
    return p;
}

MultiPoly MultiPoly::variable(Ring ring, std::size_t idx, unsigned exp) {
    if (exp == 0) return constant(std::move(ring), Rational(1));
    MultiPoly p(std::move(ring));
    p.terms_.push_back({Monomial::var(p.ring_->vars.size(), idx, exp), Rational(1)});
    return p;
}

MultiPoly MultiPoly::monomial(Ring ring, Monomial m, Rational c) {
    MultiPoly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

MultiPoly MultiPoly::from_terms(Ring ring, std::vector<Term> terms) {
    MultiPoly p(std::move(ring));
    const MonomialOrder& ord = p.ring_->order;
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.less(b.m, a.m); });
    p.terms_ = std::move(terms);
    p.normalize_sorted();
    return p;
}

void MultiPoly::normalize_sorted() {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

const Monomial& MultiPoly::leading_monomial() const {
    if (is_zero()) throw InternalError("leading_monomial of zero polynomial");
    return terms_.front().m;
}

const Rational& MultiPoly::leading_coeff() const {
    if (is_zero()) throw InternalError("leading_coeff of zero polynomial");
    return terms_.front().c;
}

Rational MultiPoly::constant_term() const {
    if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
    return Rational(0);
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m[var]);
    return d;
}

Rational MultiPoly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.m == m) return t.c;
    return Rational(0);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (!same_ring(ring_, o.ring_)) throw InternalError("MultiPoly: ring mismatch in +");
    MultiPoly r(ring_ ? ring_ : o.ring_);
    const MonomialOrder& ord = r.ring_->order;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].m == o.terms_[j].m) {
            Rational c = terms_[i].c + o.terms_[j].c;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].m, std::move(c)});
            ++i;
            ++j;
        } else if (ord.less(o.terms_[j].m, terms_[i].m)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (!same_ring(ring_, o.ring_)) throw InternalError("MultiPoly: ring mismatch in *");
    MultiPoly r(ring_ ? ring_ : o.ring_);
    if (is_zero() || o.is_zero()) return r;
    const MonomialOrder& ord = r.ring_->order;
    auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.less(b, a); };
    std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.m * b.m;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), a.c * b.c);
            else
                it->second += a.c * b.c;
        }
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    return r;
}

MultiPoly MultiPoly::scale(const Rational& c) const {
    if (c.is_zero()) return MultiPoly(ring_);
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return MultiPoly(ring_);
    MultiPoly r(*this);
    for (auto& t : r.terms_) {
        t.m = t.m * m;
        t.c *= c;
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(ring_, Rational(1));
    MultiPoly base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(ring_);
    for (const auto& t : terms_) {
        unsigned e = t.m[var];
        if (e == 0) continue;
        Monomial m = t.m;
        m.at(var) = e - 1;
        r.terms_.push_back({std::move(m), t.c * Rational(static_cast<long>(e))});
    }
    // Dropping terms can break ordering only by removals; order is preserved.
    return r;
}

MultiPoly MultiPoly::eval_var(std::size_t var, const Rational& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        unsigned e = t.m[var];
        Monomial m = t.m;
        m.at(var) = 0;
        out.push_back({std::move(m), t.c * value.pow(e)});
    }
    return from_terms(ring_, std::move(out));
}

MultiPoly MultiPoly::subst_var(std::size_t var, const MultiPoly& value) const {
    auto cs = coeffs_in(var);
    MultiPoly r(ring_);
    for (std::size_t e = cs.size(); e-- > 0;) r = r * value + cs[e];
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scale(leading_coeff().inverse());
}

std::pair<Rational, MultiPoly> MultiPoly::primitive_integer() const {
    if (is_zero()) return {Rational(1), *this};
    Integer den_lcm(1), num_gcd(0);
    for (const auto& t : terms_) den_lcm = int_lcm(den_lcm, t.c.den());
    for (const auto& t : terms_) num_gcd = int_gcd(num_gcd, t.c.num() * (den_lcm / t.c.den()));
    Rational c(num_gcd, den_lcm);
    if (leading_coeff().sign() < 0) c = -c;
    return {c, scale(c.inverse())};
}

std::optional<MultiPoly> MultiPoly::divided_by(const MultiPoly& d) const {
    if (d.is_zero()) throw MathError("MultiPoly: division by zero polynomial");
    MultiPoly q(ring_), r(*this);
    const Monomial& dlm = d.leading_monomial();
    while (!r.is_zero()) {
        const Monomial& rlm = r.leading_monomial();
        if (!dlm.divides(rlm)) return std::nullopt;
        Monomial qm = dlm.divide_into(rlm);
        Rational qc = r.leading_coeff() / d.leading_coeff();
        q.terms_.push_back({qm, qc});
        r = r - d.mul_term(qm, qc);
    }
    return from_terms(ring_, std::move(q.terms_));
}

std::vector<MultiPoly> MultiPoly::coeffs_in(std::size_t var) const {
    std::vector<MultiPoly> cs(degree_in(var) + 1, MultiPoly(ring_));
    for (const auto& t : terms_) {
        unsigned e = t.m[var];
        Monomial m = t.m;
        m.at(var) = 0;
        cs[e] = cs[e] + monomial(ring_, std::move(m), t.c);
    }
    while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
    return cs;
}

MultiPoly MultiPoly::from_coeffs_in(std::size_t var, const std::vector<MultiPoly>& cs, const Ring& ring) {
    MultiPoly r(ring);
    for (std::size_t e = 0; e < cs.size(); ++e) {
        MultiPoly xe = variable(ring, var, static_cast<unsigned>(e));
        r = r + cs[e] * xe;
    }
    return r;
}

MultiPoly MultiPoly::with_order(const Ring& target) const {
    if (ring_->vars != target->vars) throw InternalError("with_order: variable mismatch");
    std::vector<Term> ts = terms_;
    return from_terms(target, std::move(ts));
}

MultiPoly MultiPoly::map_vars(const Ring& target, const std::vector<std::size_t>& var_map) const {
    std::size_t tn = target->vars.size();
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(tn);
        for (std::size_t i = 0; i < var_map.size(); ++i)
            if (t.m[i]) m.at(var_map[i]) = t.m[i];
        ts.push_back({std::move(m), t.c});
    }
    return from_terms(target, std::move(ts));
}

int MultiPoly::compare(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[i];
        if (!(ta.m == tb.m)) {
            const MonomialOrder& ord = a.ring_->order;
            return ord.less(ta.m, tb.m) ? -1 : 1;
        }
        if (ta.c != tb.c) return ta.c < tb.c ? -1 : 1;
    }
    return 0;
}

std::string MultiPoly::str() const { return format_poly(*this); }

namespace {

std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace

std::string format_poly(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    // Canonical printed form: descending grevlex regardless of ring order.
    std::vector<MultiPoly::Term> ts = f.terms();
    MonomialOrder g = MonomialOrder::grevlex();
    std::sort(ts.begin(), ts.end(),
              [&](const auto& a, const auto& b) { return g.less(b.m, a.m); });
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Rational c = ts[i].c;
        bool neg = c.sign() < 0;
        if (i == 0)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        Rational a = c.abs();
        std::string mono = format_monomial(ts[i].m, f.ring()->vars);
        if (mono.empty())
            s += a.str();
        else if (a.is_one())
            s += mono;
        else
            s += a.str() + "*" + mono;
    }
    return s;
}

}  // namespace unirat
