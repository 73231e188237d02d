#include <algorithm>

#include "unirat/mpoly.hpp"

namespace unirat {

namespace {

// Univariate view in one variable with MultiPoly coefficients, ascending.
struct UniView {
    std::vector<MultiPoly> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const MultiPoly& lc() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

UniView to_view(const MultiPoly& f, std::size_t var) {
    UniView v;
    if (f.is_zero()) return v;
    v.c = f.coeffs_in(var);
    v.trim();
    return v;
}

MultiPoly from_view(const UniView& v, std::size_t var, const Ring& ring) {
    return MultiPoly::from_coeffs_in(var, v.c, ring);
}

UniView scale_view(const UniView& v, const MultiPoly& s) {
    UniView r;
    r.c.reserve(v.c.size());
    for (const auto& x : v.c) r.c.push_back(x * s);
    r.trim();
    return r;
}

UniView sub_shifted(const UniView& a, const UniView& b, unsigned shift, const MultiPoly& factor) {
    // a - x^shift * factor * b
    UniView r = a;
    if (r.c.size() < b.c.size() + shift) r.c.resize(b.c.size() + shift, MultiPoly(factor.ring()));
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] = r.c[i + shift] - factor * b.c[i];
    r.trim();
    return r;
}

UniView divide_view_exact(const UniView& v, const MultiPoly& d) {
    UniView r;
    r.c.reserve(v.c.size());
    for (const auto& x : v.c) {
        auto q = x.divided_by(d);
        if (!q) throw InternalError("subresultant: inexact division");
        r.c.push_back(std::move(*q));
    }
    r.trim();
    return r;
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
UniView prem(const UniView& f, const UniView& g) {
    UniView r = f;
    const MultiPoly& lg = g.lc();
    int e = g.deg();
    int m = f.deg() - e + 1;
    while (!r.is_zero() && r.deg() >= e) {
        MultiPoly rl = r.lc();
        unsigned shift = static_cast<unsigned>(r.deg() - e);
        r = scale_view(r, lg);
        r = sub_shifted(r, g, shift, rl);
        --m;
        if (!r.is_zero() && r.deg() >= e + static_cast<int>(shift))
            throw InternalError("prem: degree did not drop");
    }
    if (m > 0) {
        MultiPoly p = lg.pow(static_cast<unsigned>(m));
        r = scale_view(r, p);
    }
    return r;
}

MultiPoly one_poly(const Ring& ring) { return MultiPoly::constant(ring, Rational(1)); }

// gcd of the primitive parts via the subresultant PRS; inputs primitive in var.
UniView prs_gcd(UniView F, UniView G, const Ring& ring, std::size_t var) {
    if (F.deg() < G.deg()) std::swap(F, G);
    MultiPoly g = one_poly(ring), h = one_poly(ring);
    while (true) {
        int delta = F.deg() - G.deg();
        UniView R = prem(F, G);
        if (R.is_zero()) break;
        F = std::move(G);
        MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
        G = divide_view_exact(R, divisor);
        g = F.lc();
        if (delta > 0) {
            MultiPoly gp = g.pow(static_cast<unsigned>(delta));
            if (delta == 1) {
                h = gp;
            } else {
                auto q = gp.divided_by(h.pow(static_cast<unsigned>(delta - 1)));
                if (!q) throw InternalError("subresultant: h update inexact");
                h = std::move(*q);
            }
        }
        if (G.deg() == 0) break;
    }
    // Primitive part of the last nonzero "remainder" G.
    if (G.deg() == 0) return to_view(one_poly(ring), var);
    MultiPoly gp = from_view(G, var, ring);
    MultiPoly prim = primitive_wrt(gp, var);
    return to_view(prim, var);
}

// Variable both polynomials use, weighted by how often; nullopt if none.
std::optional<std::size_t> pick_common_var(const MultiPoly& a, const MultiPoly& b) {
    std::size_t n = a.ring()->vars.size();
    std::optional<std::size_t> best;
    std::size_t best_uses = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (a.degree_in(v) == 0 || b.degree_in(v) == 0) continue;
        std::size_t uses = 0;
        for (const auto& t : a.terms())
            if (t.m[v]) ++uses;
        for (const auto& t : b.terms())
            if (t.m[v]) ++uses;
        if (!best || uses > best_uses) {
            best = v;
            best_uses = uses;
        }
    }
    return best;
}

}  // namespace

MultiPoly content_wrt(const MultiPoly& f, std::size_t var) {
    if (f.is_zero()) return f;
    auto cs = f.coeffs_in(var);
    MultiPoly g = MultiPoly::zero(f.ring());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = mpoly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

MultiPoly primitive_wrt(const MultiPoly& f, std::size_t var) {
    if (f.is_zero()) return f;
    MultiPoly c = content_wrt(f, var);
    auto q = f.divided_by(c);
    if (!q) throw InternalError("primitive_wrt: content does not divide");
    return *q;
}

MultiPoly mpoly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (!same_ring(a.ring(), b.ring())) throw InternalError("mpoly_gcd: ring mismatch");
    if (a.is_constant() || b.is_constant()) return one_poly(a.ring());

    auto v = pick_common_var(a, b);
    if (!v) {
        // No shared variable: any common divisor is free of every variable
        // one side uses, hence divides both contents down to a constant.
        for (std::size_t i = 0; i < a.ring()->vars.size(); ++i) {
            if (a.degree_in(i) > 0 && b.degree_in(i) == 0)
                return mpoly_gcd(content_wrt(a, i), b);
            if (b.degree_in(i) > 0 && a.degree_in(i) == 0)
                return mpoly_gcd(a, content_wrt(b, i));
        }
        throw InternalError("mpoly_gcd: unreachable variable split");
    }

    MultiPoly ca = content_wrt(a, *v), cb = content_wrt(b, *v);
    MultiPoly pa = *a.divided_by(ca), pb = *b.divided_by(cb);
    UniView g = prs_gcd(to_view(pa, *v), to_view(pb, *v), a.ring(), *v);
    MultiPoly result = from_view(g, *v, a.ring()) * mpoly_gcd(ca, cb);
    return result.monic();
}

MultiPoly resultant_wrt(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    const Ring& ring = a.ring();
    if (a.is_zero() || b.is_zero()) return MultiPoly::zero(ring);
    UniView A = to_view(a, var), B = to_view(b, var);
    if (A.deg() == 0 && B.deg() == 0) return one_poly(ring);
    if (A.deg() == 0) return A.c[0].pow(static_cast<unsigned>(B.deg()));
    if (B.deg() == 0) return B.c[0].pow(static_cast<unsigned>(A.deg()));

    MultiPoly ca = content_wrt(a, var), cb = content_wrt(b, var);
    MultiPoly scale = ca.pow(static_cast<unsigned>(B.deg())) * cb.pow(static_cast<unsigned>(A.deg()));
    A = to_view(*a.divided_by(ca), var);
    B = to_view(*b.divided_by(cb), var);

    int sign = 1;
    if (A.deg() < B.deg()) {
        if ((A.deg() & 1) && (B.deg() & 1)) sign = -sign;
        std::swap(A, B);
    }
    MultiPoly g = one_poly(ring), h = one_poly(ring);
    while (true) {
        int d = A.deg(), e = B.deg();
        int delta = d - e;
        if ((d & 1) && (e & 1)) sign = -sign;
        UniView R = prem(A, B);
        if (R.is_zero()) return MultiPoly::zero(ring);  // common factor
        A = std::move(B);
        MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
        B = divide_view_exact(R, divisor);
        g = A.lc();
        if (delta > 0) {
            MultiPoly gp = g.pow(static_cast<unsigned>(delta));
            if (delta == 1) {
                h = gp;
            } else {
                auto q = gp.divided_by(h.pow(static_cast<unsigned>(delta - 1)));
                if (!q) throw InternalError("resultant: h update inexact");
                h = std::move(*q);
            }
        }
        if (B.deg() <= 0) break;
    }
    if (B.is_zero()) return MultiPoly::zero(ring);
    unsigned dA = static_cast<unsigned>(A.deg());
    MultiPoly num = B.c[0].pow(dA);
    MultiPoly res;
    if (dA <= 1) {
        res = num;
    } else {
        auto q = num.divided_by(h.pow(dA - 1));
        if (!q) throw InternalError("resultant: final division inexact");
        res = std::move(*q);
    }
    if (sign < 0) res = -res;
    return scale * res;
}

MultiPoly squarefree_part(const MultiPoly& f) {
    if (f.is_zero() || f.is_constant()) return f;
    MultiPoly g = MultiPoly::zero(f.ring());
    g = f;
    for (std::size_t v = 0; v < f.ring()->vars.size(); ++v) {
        if (f.degree_in(v) == 0) continue;
        g = mpoly_gcd(g, f.derivative(v));
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return f.primitive_integer().second;
    auto q = f.divided_by(g.monic());
    if (!q) throw InternalError("squarefree_part: gcd does not divide");
    return q->primitive_integer().second;
}

}  // namespace unirat
