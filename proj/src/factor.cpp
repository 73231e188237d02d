#include "unirat/factor.hpp"

#include <algorithm>
#include <map>

#include "unirat/upoly.hpp"

namespace unirat {

namespace {

std::vector<std::size_t> used_vars(const MultiPoly& f) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < f.ring()->vars.size(); ++i)
        if (f.degree_in(i) > 0) v.push_back(i);
    return v;
}

unsigned degree_over(const MultiPoly& f, const std::vector<std::size_t>& vars) {
    unsigned d = 0;
    for (const auto& t : f.terms()) {
        unsigned s = 0;
        for (std::size_t v : vars) s += t.m[v];
        d = std::max(d, s);
    }
    return d;
}

MultiPoly truncate_over(const MultiPoly& f, const std::vector<std::size_t>& vars, unsigned bound) {
    std::vector<MultiPoly::Term> ts;
    for (const auto& t : f.terms()) {
        unsigned s = 0;
        for (std::size_t v : vars) s += t.m[v];
        if (s <= bound) ts.push_back(t);
    }
    return MultiPoly::from_terms(f.ring(), std::move(ts));
}

// Deterministic enumeration of integer points: rings of growing max-norm,
// digits sweeping 0, 1, -1, 2, -2, ...
class PointEnumerator {
public:
    explicit PointEnumerator(std::size_t dims) : dims_(dims), norm_(0), counter_(dims, 0) {}

    std::vector<long> next() {
        while (true) {
            if (norm_ == 0) {
                ++norm_;
                counter_.assign(dims_, 0);
                return std::vector<long>(dims_, 0);
            }
            // counter digits run over 0..2*norm_, mapping to 0,1,-1,...,norm_,-norm_
            bool has_extreme = false;
            std::vector<long> pt(dims_);
            for (std::size_t i = 0; i < dims_; ++i) {
                unsigned d = counter_[i];
                long val = (d + 1) / 2;
                if (d % 2 == 0) val = -val;
                pt[i] = val;  // d=0 -> 0, d=1 -> 1, d=2 -> -1, d=3 -> 2, ...
                if (static_cast<unsigned long>(val < 0 ? -val : val) == norm_) has_extreme = true;
            }
            advance();
            if (has_extreme) return pt;
        }
    }

private:
    void advance() {
        for (std::size_t i = 0; i < dims_; ++i) {
            if (++counter_[i] <= 2 * norm_) return;
            counter_[i] = 0;
        }
        ++norm_;
        counter_.assign(dims_, 0);
    }

    std::size_t dims_;
    unsigned long norm_;
    std::vector<unsigned> counter_;
};

std::vector<MultiPoly> factor_squarefree_multi(const MultiPoly& f);

// Splits one squarefree, x-primitive, >=2-variable polynomial; f integer
// primitive with positive leading coefficient, deg_x >= 1.
std::vector<MultiPoly> lift_and_recombine(const MultiPoly& f, std::size_t x) {
    const Ring& ring = f.ring();
    std::vector<std::size_t> others;
    for (std::size_t v : used_vars(f))
        if (v != x) others.push_back(v);

    auto coeffs = f.coeffs_in(x);
    unsigned d = static_cast<unsigned>(coeffs.size() - 1);
    const MultiPoly lead = coeffs.back();

    // Evaluation point: leading coefficient alive, squarefree image.
    PointEnumerator pts(others.size());
    std::vector<Rational> point;
    QPoly image;
    for (;;) {
        std::vector<long> raw = pts.next();
        std::vector<Rational> cand(raw.begin(), raw.end());
        MultiPoly img = f;
        MultiPoly lc_img = lead;
        for (std::size_t i = 0; i < others.size(); ++i) {
            img = img.eval_var(others[i], cand[i]);
            lc_img = lc_img.eval_var(others[i], cand[i]);
        }
        if (lc_img.is_zero()) continue;
        QPoly u = upoly::from_mpoly(img, x);
        if (upoly::deg(upoly::gcd(u, upoly::derivative(u))) != 0) continue;
        point = std::move(cand);
        image = std::move(u);
        break;
    }

    auto ufac = upoly::factor(image);
    if (ufac.factors.size() == 1) return {f};

    // Monic transform F = lead^(d-1) * f(x/lead), then shift others to 0.
    MultiPoly F = MultiPoly::zero(ring);
    for (unsigned i = 0; i <= d; ++i) {
        MultiPoly term = coeffs[i] * MultiPoly::variable(ring, x, i);
        if (i < d) term = term * lead.pow(d - 1 - i);
        F = F + term;
    }
    MultiPoly Fs = F;
    for (std::size_t i = 0; i < others.size(); ++i) {
        MultiPoly repl = MultiPoly::variable(ring, others[i]) +
                         MultiPoly::constant(ring, point[i]);
        Fs = Fs.subst_var(others[i], repl);
    }
    unsigned D = degree_over(Fs, others);

    // Monic univariate base factors after the same transform.
    Rational b(0);
    {
        MultiPoly lc_img = lead;
        for (std::size_t i = 0; i < others.size(); ++i) lc_img = lc_img.eval_var(others[i], point[i]);
        b = lc_img.leading_coeff();
    }
    std::vector<QPoly> base;
    for (const auto& [g, mult] : ufac.factors) {
        (void)mult;  // squarefree image
        // gh(x) = b^dg * g(x/b): coefficient i scales by b^(dg-i), stays monic
        unsigned dg = static_cast<unsigned>(upoly::deg(g));
        QPoly gh(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            gh[i] = g[i] * b.pow(dg - static_cast<unsigned>(i));
        base.push_back(upoly::trim(std::move(gh)));
    }

    // Bezout data for the pairwise-coprime monic base.
    QPoly u_all{Rational(1)};
    for (const auto& g : base) u_all = upoly::mul(u_all, g);
    std::vector<QPoly> cofactor(base.size()), sbasis(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        cofactor[i] = upoly::divmod(u_all, base[i]).first;
        // inverse of cofactor modulo base[i] via extended Euclid
        QPoly r0 = base[i], r1 = upoly::divmod(cofactor[i], base[i]).second;
        QPoly t0, t1{Rational(1)};
        while (!upoly::is_zero(r1)) {
            auto [q, r2] = upoly::divmod(r0, r1);
            QPoly t2 = upoly::sub(t0, upoly::mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (upoly::deg(r0) != 0) throw InternalError("hensel: base factors not coprime");
        sbasis[i] = upoly::divmod(upoly::scale(t0, r0[0].inverse()), base[i]).second;
    }

    // Lift all variables at once, homogeneous degree by degree.
    std::vector<MultiPoly> G;
    for (const auto& g : base) G.push_back(upoly::to_mpoly(g, ring, x));
    for (unsigned k = 1; k <= D; ++k) {
        MultiPoly prod = MultiPoly::constant(ring, Rational(1));
        for (const auto& g : G) prod = truncate_over(prod * g, others, D);
        MultiPoly E = Fs - prod;
        if (E.is_zero()) break;
        // Group the tau-degree-k part by tau-monomial.
        std::map<std::vector<unsigned>, QPoly> parts;
        for (const auto& t : E.terms()) {
            unsigned s = 0;
            std::vector<unsigned> key(others.size());
            for (std::size_t i = 0; i < others.size(); ++i) {
                key[i] = t.m[others[i]];
                s += key[i];
            }
            if (s != k) continue;
            QPoly& c = parts[key];
            if (c.size() <= t.m[x]) c.resize(t.m[x] + 1, Rational(0));
            c[t.m[x]] += t.c;
        }
        if (parts.empty()) continue;
        for (auto& [key, cpoly] : parts) {
            QPoly c = upoly::trim(cpoly);
            if (upoly::is_zero(c)) continue;
            Monomial tau(ring->vars.size());
            for (std::size_t i = 0; i < others.size(); ++i) tau.at(others[i]) = key[i];
            for (std::size_t i = 0; i < base.size(); ++i) {
                QPoly sigma = upoly::divmod(upoly::mul(sbasis[i], c), base[i]).second;
                if (upoly::is_zero(sigma)) continue;
                MultiPoly corr = upoly::to_mpoly(sigma, ring, x).mul_term(tau, Rational(1));
                G[i] = G[i] + corr;
            }
        }
    }

    // Recombine subsets; a subset forms a true factor iff its truncated
    // product divides Fs exactly.
    std::vector<MultiPoly> found;
    std::vector<std::size_t> remaining(G.size());
    for (std::size_t i = 0; i < G.size(); ++i) remaining[i] = i;
    MultiPoly rest = Fs;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            MultiPoly cand = MultiPoly::constant(ring, Rational(1));
            for (std::size_t i : idx) cand = truncate_over(cand * G[remaining[i]], others, D);
            auto q = rest.divided_by(cand);
            if (q) {
                found.push_back(cand);
                rest = std::move(*q);
                std::vector<std::size_t> keep;
                for (std::size_t i = 0; i < remaining.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        keep.push_back(remaining[i]);
                remaining = std::move(keep);
                hit = true;
                break;
            }
            long i = static_cast<long>(s) - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                                 remaining.size() - s + static_cast<std::size_t>(i))
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (rest.total_degree() > 0) found.push_back(rest);

    // Shift back and undo the monic transform.
    std::vector<MultiPoly> out;
    for (auto& Fac : found) {
        MultiPoly g = Fac;
        for (std::size_t i = 0; i < others.size(); ++i) {
            MultiPoly repl = MultiPoly::variable(ring, others[i]) -
                             MultiPoly::constant(ring, point[i]);
            g = g.subst_var(others[i], repl);
        }
        // x -> lead * x, then primitive part.
        auto cs = g.coeffs_in(x);
        MultiPoly back = MultiPoly::zero(ring);
        for (std::size_t i = 0; i < cs.size(); ++i)
            back = back + cs[i] * lead.pow(static_cast<unsigned>(i)) *
                              MultiPoly::variable(ring, x, static_cast<unsigned>(i));
        back = primitive_wrt(back, x).primitive_integer().second;
        out.push_back(std::move(back));
    }
    std::sort(out.begin(), out.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return MultiPoly::compare(a, b) < 0; });
    return out;
}

// Irreducible factors of a squarefree integer-primitive polynomial.
std::vector<MultiPoly> factor_squarefree_multi(const MultiPoly& f) {
    const Ring& ring = f.ring();
    auto vars = used_vars(f);
    if (vars.empty()) return {};
    if (vars.size() == 1) {
        auto u = upoly::factor(upoly::from_mpoly(f, vars[0]));
        std::vector<MultiPoly> out;
        for (const auto& [g, mult] : u.factors) {
            (void)mult;
            out.push_back(upoly::to_mpoly(g, ring, vars[0]).primitive_integer().second);
        }
        return out;
    }
    // Main variable: minimal positive degree, ties to the lowest index.
    std::size_t x = vars[0];
    for (std::size_t v : vars)
        if (f.degree_in(v) < f.degree_in(x)) x = v;

    MultiPoly cont = content_wrt(f, x);
    std::vector<MultiPoly> out;
    MultiPoly prim = f;
    if (!cont.is_constant()) {
        MultiPoly c_int = cont.primitive_integer().second;
        auto q = f.divided_by(c_int);
        if (!q) throw InternalError("factor: content division failed");
        prim = q->primitive_integer().second;
        out = factor_squarefree_multi(c_int);
    }
    auto main_factors = used_vars(prim).size() >= 2 ? lift_and_recombine(prim, x)
                                                    : factor_squarefree_multi(prim);
    out.insert(out.end(), main_factors.begin(), main_factors.end());
    std::sort(out.begin(), out.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return MultiPoly::compare(a, b) < 0; });
    return out;
}

}  // namespace

MultiPoly Factorization::product(const Ring& ring) const {
    MultiPoly p = MultiPoly::constant(ring, constant);
    for (const auto& [f, e] : factors) p = p * f.pow(e);
    return p;
}

Factorization factor_univariate_q(const MultiPoly& f) {
    if (f.is_zero()) throw MathError("factor_univariate_q: zero polynomial");
    auto vars = used_vars(f);
    if (vars.size() > 1) throw MathError("factor_univariate_q: polynomial is not univariate");
    Factorization out;
    if (vars.empty()) {
        out.constant = f.leading_coeff();
        return out;
    }
    auto u = upoly::factor(upoly::from_mpoly(f, vars[0]));
    out.constant = u.constant;
    for (const auto& [g, mult] : u.factors)
        out.factors.push_back({upoly::to_mpoly(g, f.ring(), vars[0]), mult});
    return out;
}

Factorization factor_multivariate_q(const MultiPoly& f) {
    if (f.is_zero()) throw MathError("factor_multivariate_q: zero polynomial");
    auto [c0, F] = f.primitive_integer();
    Factorization out;
    out.constant = c0;
    if (F.is_constant()) {
        out.constant = out.constant * F.constant_term();
        return out;
    }
    MultiPoly work = F;
    while (!work.is_constant()) {
        MultiPoly sf = squarefree_part(work);
        for (const auto& r : factor_squarefree_multi(sf)) {
            unsigned e = 0;
            while (true) {
                auto q = work.divided_by(r);
                if (!q) break;
                work = std::move(*q);
                ++e;
            }
            if (e == 0) throw InternalError("factor: squarefree factor does not divide");
            out.factors.push_back({r, e});
        }
    }
    out.constant = out.constant * work.constant_term();
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree())
            return a.first.total_degree() < b.first.total_degree();
        return MultiPoly::compare(a.first, b.first) < 0;
    });
    if (!(out.product(f.ring()) == f)) throw InternalError("factor: product check failed");
    return out;
}

bool is_irreducible_q(const MultiPoly& f) {
    if (f.is_zero() || f.is_constant()) return false;
    auto fac = factor_multivariate_q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace unirat
