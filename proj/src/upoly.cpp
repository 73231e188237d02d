#include "unirat/upoly.hpp"

#include <algorithm>

namespace unirat {
namespace upoly {

QPoly trim(QPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int deg(const QPoly& f) { return static_cast<int>(f.size()) - 1; }
bool is_zero(const QPoly& f) { return f.empty(); }

const Rational& lc(const QPoly& f) {
    if (f.empty()) throw InternalError("upoly: lc of zero");
    return f.back();
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

QPoly neg(QPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

QPoly scale(QPoly a, const Rational& c) {
    if (c.is_zero()) return {};
    for (auto& x : a) x *= c;
    return a;
}

QPoly monic(const QPoly& a) {
    if (a.empty()) return a;
    return scale(a, lc(a).inverse());
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw MathError("upoly: division by zero");
    QPoly r = a, q;
    int db = deg(b);
    if (deg(a) >= db) q.assign(a.size() - b.size() + 1, Rational(0));
    while (!r.empty() && deg(r) >= db) {
        Rational c = lc(r) / lc(b);
        int shift = deg(r) - db;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
        r = trim(std::move(r));
    }
    return {trim(std::move(q)), std::move(r)};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly f = a, g = b;
    while (!g.empty()) {
        QPoly r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return monic(f);
}

QPoly derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rational(static_cast<long>(i));
    return trim(std::move(r));
}

Rational eval(const QPoly& a, const Rational& x) {
    Rational r(0);
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

QPoly compose(const QPoly& outer, const QPoly& inner) {
    QPoly r;
    for (std::size_t i = outer.size(); i-- > 0;) {
        r = mul(r, inner);
        if (!outer[i].is_zero()) {
            if (r.empty()) r.push_back(Rational(0));
            r[0] += outer[i];
        }
        r = trim(std::move(r));
    }
    return r;
}

QPoly pow(const QPoly& a, unsigned e) {
    QPoly r{Rational(1)};
    QPoly base = a;
    while (e) {
        if (e & 1u) r = mul(r, base);
        e >>= 1u;
        if (e) base = mul(base, base);
    }
    return r;
}

QPoly from_mpoly(const MultiPoly& f, std::size_t var) {
    QPoly r(f.is_zero() ? 0 : f.degree_in(var) + 1, Rational(0));
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < t.m.nvars(); ++i)
            if (i != var && t.m[i]) throw InternalError("upoly::from_mpoly: not univariate");
        r[t.m[var]] += t.c;
    }
    return trim(std::move(r));
}

MultiPoly to_mpoly(const QPoly& f, const Ring& ring, std::size_t var) {
    std::vector<MultiPoly::Term> ts;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f[i].is_zero())
            ts.push_back({Monomial::var(ring->vars.size(), var, static_cast<unsigned>(i)), f[i]});
    return MultiPoly::from_terms(ring, std::move(ts));
}

std::vector<std::pair<QPoly, unsigned>> squarefree_decompose(const QPoly& f) {
    if (f.empty()) throw MathError("squarefree_decompose: zero polynomial");
    std::vector<std::pair<QPoly, unsigned>> out;
    QPoly F = monic(f);
    if (deg(F) == 0) return out;
    QPoly fp = derivative(F);
    QPoly g = gcd(F, fp);
    if (deg(g) == 0) {
        out.push_back({F, 1});
        return out;
    }
    QPoly b = divmod(F, g).first;
    QPoly c = divmod(fp, g).first;
    QPoly d = sub(c, derivative(b));
    unsigned i = 1;
    while (deg(b) > 0) {
        QPoly a = gcd(b, d);
        if (deg(a) > 0) out.push_back({a, i});
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = sub(c, derivative(b));
        ++i;
    }
    return out;
}

}  // namespace upoly
}  // namespace unirat
