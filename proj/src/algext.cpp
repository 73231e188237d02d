#include "unirat/algext.hpp"

#include <algorithm>

#include "unirat/factor.hpp"

namespace unirat {

namespace epoly {

EPoly trim(EPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int deg(const EPoly& f) { return static_cast<int>(f.size()) - 1; }
bool is_zero(const EPoly& f) { return f.empty(); }

EPoly add(const EPoly& a, const EPoly& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const Ring& r = a[0].ring();
    EPoly out(std::max(a.size(), b.size()), RatFn::zero(r));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return trim(std::move(out));
}

EPoly sub(const EPoly& a, const EPoly& b) {
    EPoly nb = b;
    for (auto& c : nb) c = -c;
    return add(a, nb);
}

EPoly mul(const EPoly& a, const EPoly& b) {
    if (a.empty() || b.empty()) return {};
    const Ring& r = a[0].ring();
    EPoly out(a.size() + b.size() - 1, RatFn::zero(r));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return trim(std::move(out));
}

EPoly scale(EPoly a, const RatFn& c) {
    if (c.is_zero()) return {};
    for (auto& x : a) x *= c;
    return a;
}

EPoly monic(const EPoly& a) {
    if (a.empty()) return a;
    return scale(a, a.back().inverse());
}

std::pair<EPoly, EPoly> divmod(const EPoly& a, const EPoly& b) {
    if (b.empty()) throw MathError("epoly: division by zero");
    const Ring& ring = b[0].ring();
    EPoly r = a, q;
    int db = deg(b);
    if (deg(a) >= db) q.assign(a.size() - b.size() + 1, RatFn::zero(ring));
    RatFn inv = b.back().inverse();
    while (!r.empty() && deg(r) >= db) {
        RatFn c = r.back() * inv;
        int shift = deg(r) - db;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
        r = trim(std::move(r));
    }
    return {trim(std::move(q)), std::move(r)};
}

EPoly gcd(const EPoly& a, const EPoly& b) {
    EPoly f = a, g = b;
    while (!g.empty()) {
        EPoly r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return monic(f);
}

EPoly derivative(const EPoly& a) {
    if (a.size() <= 1) return {};
    const Ring& ring = a[0].ring();
    EPoly r(a.size() - 1, RatFn::zero(ring));
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = a[i] * RatFn::constant(ring, Rational(static_cast<long>(i)));
    return trim(std::move(r));
}

}  // namespace epoly

// ---------------------------------------------------------------------------
// AlgExtension
// ---------------------------------------------------------------------------

namespace {

// Clear denominators of an EPoly in z into Q[t..., z]; z is the last ring var.
MultiPoly clear_to_ring(const EPoly& f, const Ring& target, std::size_t zvar,
                        const std::vector<std::size_t>& tmap) {
    MultiPoly lcm = MultiPoly::constant(f.empty() ? target : f[0].den().ring(), Rational(1));
    for (const auto& c : f) {
        MultiPoly g = mpoly_gcd(lcm, c.den());
        lcm = *(lcm * c.den()).divided_by(g);
    }
    MultiPoly out = MultiPoly::zero(target);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) continue;
        MultiPoly ci = f[i].num() * *lcm.divided_by(f[i].den());
        out = out + ci.map_vars(target, tmap) * MultiPoly::variable(target, zvar, static_cast<unsigned>(i));
    }
    return out;
}

}  // namespace

AlgExtension::AlgExtension(Ring base_ring, EPoly min_poly)
    : base_(std::move(base_ring)), p_(epoly::trim(std::move(min_poly))) {
    if (epoly::deg(p_) < 1) throw MathError("AlgExtension: minimal polynomial must be nonconstant");
    if (!p_.back().is_constant() || !p_.back().constant_value().is_one())
        throw MathError("AlgExtension: minimal polynomial must be monic");
    deg_ = static_cast<unsigned>(epoly::deg(p_));
    for (const auto& c : p_)
        if (!same_ring(c.ring(), base_)) throw InternalError("AlgExtension: coefficient ring mismatch");

    // Certify irreducibility over E by factoring the cleared form over Q.
    std::size_t k = base_->vars.size();
    std::vector<std::string> names = base_->vars;
    names.push_back("@z");
    Ring zr = make_ring(std::move(names));
    std::vector<std::size_t> tmap(k);
    for (std::size_t i = 0; i < k; ++i) tmap[i] = i;
    MultiPoly cleared = clear_to_ring(p_, zr, k, tmap);
    auto fac = factor_multivariate_q(cleared);
    unsigned z_factors = 0;
    for (const auto& [g, mult] : fac.factors) {
        if (g.degree_in(k) == 0) continue;  // content in t only
        z_factors += mult;
        if (mult > 1 || g.degree_in(k) != deg_) z_factors = 99;
    }
    if (z_factors != 1) throw MathError("AlgExtension: minimal polynomial is not irreducible");
}

// ---------------------------------------------------------------------------
// ExtElement
// ---------------------------------------------------------------------------

ExtElement ext_zero(const AlgExtension& ext) {
    return {std::vector<RatFn>(ext.degree(), RatFn::zero(ext.base_ring()))};
}

ExtElement ext_one(const AlgExtension& ext) {
    ExtElement e = ext_zero(ext);
    e.coeffs[0] = RatFn::constant(ext.base_ring(), Rational(1));
    return e;
}

ExtElement ext_alpha(const AlgExtension& ext) {
    if (ext.degree() == 1) {
        // alpha is itself a base element: the root of the linear minpoly.
        return {std::vector<RatFn>{-ext.min_poly()[0]}};
    }
    ExtElement e = ext_zero(ext);
    e.coeffs[1] = RatFn::constant(ext.base_ring(), Rational(1));
    return e;
}

ExtElement ext_from_base(const RatFn& c, const AlgExtension& ext) {
    ExtElement e = ext_zero(ext);
    e.coeffs[0] = c;
    return e;
}

ExtElement ext_from_epoly(EPoly f, const AlgExtension& ext) {
    EPoly r = epoly::divmod(std::move(f), ext.min_poly()).second;
    ExtElement e = ext_zero(ext);
    for (std::size_t i = 0; i < r.size(); ++i) e.coeffs[i] = r[i];
    return e;
}

bool ext_is_zero(const ExtElement& e) {
    for (const auto& c : e.coeffs)
        if (!c.is_zero()) return false;
    return true;
}

bool ext_in_base(const ExtElement& e) {
    for (std::size_t i = 1; i < e.coeffs.size(); ++i)
        if (!e.coeffs[i].is_zero()) return false;
    return true;
}

RatFn ext_to_base(const ExtElement& e, const AlgExtension& ext) {
    if (!ext_in_base(e)) throw InternalError("ext_to_base: element not in the base field");
    (void)ext;
    return e.coeffs[0];
}

int ext_compare(const ExtElement& a, const ExtElement& b) {
    if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size() ? -1 : 1;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        int c = RatFn::compare(a.coeffs[i], b.coeffs[i]);
        if (c != 0) return c;
    }
    return 0;
}

ExtElement ext_add(const ExtElement& a, const ExtElement& b, const AlgExtension& ext) {
    ExtElement r = ext_zero(ext);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return r;
}

ExtElement ext_sub(const ExtElement& a, const ExtElement& b, const AlgExtension& ext) {
    ExtElement r = ext_zero(ext);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] - b.coeffs[i];
    return r;
}

ExtElement ext_neg(const ExtElement& a, const AlgExtension& ext) {
    return ext_sub(ext_zero(ext), a, ext);
}

ExtElement ext_mul(const ExtElement& a, const ExtElement& b, const AlgExtension& ext) {
    EPoly pa = epoly::trim(a.coeffs), pb = epoly::trim(b.coeffs);
    return ext_from_epoly(epoly::mul(pa, pb), ext);
}

ExtElement ext_scale(const ExtElement& a, const RatFn& c, const AlgExtension& ext) {
    ExtElement r = ext_zero(ext);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] * c;
    return r;
}

ExtElement ext_invert(const ExtElement& e, const AlgExtension& ext) {
    if (ext_is_zero(e)) throw MathError("division by zero");
    EPoly r0 = ext.min_poly(), r1 = epoly::trim(e.coeffs);
    const Ring& ring = ext.base_ring();
    EPoly t0, t1{RatFn::constant(ring, Rational(1))};
    while (!epoly::is_zero(r1)) {
        auto [q, r2] = epoly::divmod(r0, r1);
        EPoly t2 = epoly::sub(t0, epoly::mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (epoly::deg(r0) != 0) throw InternalError("ext_invert: minimal polynomial not irreducible");
    return ext_from_epoly(epoly::scale(std::move(t0), r0[0].inverse()), ext);
}

ExtElement ext_pow(const ExtElement& a, unsigned e, const AlgExtension& ext) {
    ExtElement r = ext_one(ext), base = a;
    while (e) {
        if (e & 1u) r = ext_mul(r, base, ext);
        e >>= 1u;
        if (e) base = ext_mul(base, base, ext);
    }
    return r;
}

ExtElement ext_eval_poly(const std::vector<ExtElement>& cs, const ExtElement& x,
                         const AlgExtension& ext) {
    ExtElement r = ext_zero(ext);
    for (std::size_t i = cs.size(); i-- > 0;) r = ext_add(ext_mul(r, x, ext), cs[i], ext);
    return r;
}

// ---------------------------------------------------------------------------
// ExtPoly
// ---------------------------------------------------------------------------

namespace extpoly {

ExtPoly trim(ExtPoly f) {
    while (!f.coeffs.empty() && ext_is_zero(f.coeffs.back())) f.coeffs.pop_back();
    return f;
}

int deg(const ExtPoly& f) { return static_cast<int>(f.coeffs.size()) - 1; }
bool is_zero(const ExtPoly& f) { return f.coeffs.empty(); }

bool is_monic(const ExtPoly& f, const AlgExtension& ext) {
    if (is_zero(f)) return false;
    return ext_compare(f.coeffs.back(), ext_one(ext)) == 0;
}

ExtPoly from_base(const EPoly& f, const AlgExtension& ext) {
    ExtPoly r;
    r.coeffs.reserve(f.size());
    for (const auto& c : f) r.coeffs.push_back(ext_from_base(c, ext));
    return trim(std::move(r));
}

ExtPoly add(const ExtPoly& a, const ExtPoly& b, const AlgExtension& ext) {
    ExtPoly r;
    r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), ext_zero(ext));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        r.coeffs[i] = ext_add(r.coeffs[i], b.coeffs[i], ext);
    return trim(std::move(r));
}

ExtPoly sub(const ExtPoly& a, const ExtPoly& b, const AlgExtension& ext) {
    ExtPoly nb = b;
    for (auto& c : nb.coeffs) c = ext_neg(c, ext);
    return add(a, nb, ext);
}

ExtPoly mul(const ExtPoly& a, const ExtPoly& b, const AlgExtension& ext) {
    if (is_zero(a) || is_zero(b)) return {};
    ExtPoly r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, ext_zero(ext));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = ext_add(r.coeffs[i + j], ext_mul(a.coeffs[i], b.coeffs[j], ext), ext);
    return trim(std::move(r));
}

ExtPoly scale(const ExtPoly& a, const ExtElement& c, const AlgExtension& ext) {
    ExtPoly r = a;
    for (auto& x : r.coeffs) x = ext_mul(x, c, ext);
    return trim(std::move(r));
}

ExtPoly monic(const ExtPoly& a, const AlgExtension& ext) {
    if (is_zero(a)) return a;
    return scale(a, ext_invert(a.coeffs.back(), ext), ext);
}

std::pair<ExtPoly, ExtPoly> divmod(const ExtPoly& a, const ExtPoly& b, const AlgExtension& ext) {
    if (is_zero(b)) throw MathError("extpoly: division by zero");
    ExtPoly r = a, q;
    int db = deg(b);
    if (deg(a) >= db) q.coeffs.assign(a.coeffs.size() - b.coeffs.size() + 1, ext_zero(ext));
    ExtElement inv = ext_invert(b.coeffs.back(), ext);
    while (!is_zero(r) && deg(r) >= db) {
        ExtElement c = ext_mul(r.coeffs.back(), inv, ext);
        int shift = deg(r) - db;
        q.coeffs[shift] = c;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            r.coeffs[i + shift] = ext_sub(r.coeffs[i + shift], ext_mul(c, b.coeffs[i], ext), ext);
        r = trim(std::move(r));
    }
    return {trim(std::move(q)), std::move(r)};
}

ExtPoly gcd(const ExtPoly& a, const ExtPoly& b, const AlgExtension& ext) {
    ExtPoly f = a, g = b;
    while (!is_zero(g)) {
        ExtPoly r = divmod(f, g, ext).second;
        f = std::move(g);
        g = std::move(r);
    }
    return monic(f, ext);
}

ExtPoly derivative(const ExtPoly& a, const AlgExtension& ext) {
    if (a.coeffs.size() <= 1) return {};
    ExtPoly r;
    r.coeffs.assign(a.coeffs.size() - 1, ext_zero(ext));
    for (std::size_t i = 1; i < a.coeffs.size(); ++i)
        r.coeffs[i - 1] =
            ext_scale(a.coeffs[i], RatFn::constant(ext.base_ring(), Rational(static_cast<long>(i))), ext);
    return trim(std::move(r));
}

ExtPoly shift_z(const ExtPoly& f, const ExtElement& c, const AlgExtension& ext) {
    // Horner for z -> z + c.
    ExtPoly r;
    ExtPoly zc;
    zc.coeffs = {c, ext_one(ext)};
    for (std::size_t i = f.coeffs.size(); i-- > 0;) {
        r = mul(r, zc, ext);
        ExtPoly ci;
        ci.coeffs = {f.coeffs[i]};
        r = add(r, trim(std::move(ci)), ext);
    }
    return r;
}

ExtElement eval(const ExtPoly& f, const ExtElement& x, const AlgExtension& ext) {
    return ext_eval_poly(f.coeffs, x, ext);
}

bool equal(const ExtPoly& a, const ExtPoly& b) { return compare(a, b) == 0; }

int compare(const ExtPoly& a, const ExtPoly& b) {
    if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size() ? -1 : 1;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        int c = ext_compare(a.coeffs[i], b.coeffs[i]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace extpoly

// ---------------------------------------------------------------------------
// Trager factorization
// ---------------------------------------------------------------------------

namespace {

bool squarefree_in_z(const MultiPoly& n, std::size_t zv) {
    if (n.degree_in(zv) == 0) return false;
    MultiPoly g = mpoly_gcd(n, n.derivative(zv));
    return g.degree_in(zv) == 0;
}

}  // namespace

MultiPoly trager_norm(const ExtPoly& f, const AlgExtension& ext) {
    std::size_t k = ext.base_ring()->vars.size();
    std::vector<std::string> names = ext.base_ring()->vars;
    names.push_back("@z");
    names.push_back("@y");
    Ring R = make_ring(std::move(names));
    std::size_t zv = k, yv = k + 1;
    std::vector<std::size_t> tmap(k);
    for (std::size_t i = 0; i < k; ++i) tmap[i] = i;

    MultiPoly phat = clear_to_ring(ext.min_poly(), R, yv, tmap);

    // Clear every denominator in f at once.
    MultiPoly lcm = MultiPoly::constant(ext.base_ring(), Rational(1));
    for (const auto& e : f.coeffs)
        for (const auto& c : e.coeffs) {
            MultiPoly g = mpoly_gcd(lcm, c.den());
            lcm = *(lcm * c.den()).divided_by(g);
        }
    MultiPoly ghat = MultiPoly::zero(R);
    for (std::size_t j = 0; j < f.coeffs.size(); ++j)
        for (std::size_t l = 0; l < f.coeffs[j].coeffs.size(); ++l) {
            const RatFn& c = f.coeffs[j].coeffs[l];
            if (c.is_zero()) continue;
            MultiPoly ci = c.num() * *lcm.divided_by(c.den());
            ghat = ghat + ci.map_vars(R, tmap) *
                              MultiPoly::variable(R, zv, static_cast<unsigned>(j)) *
                              MultiPoly::variable(R, yv, static_cast<unsigned>(l));
        }
    return resultant_wrt(phat, ghat, yv);
}

std::vector<ExtPoly> trager_factor(const ExtPoly& f, const AlgExtension& ext) {
    if (extpoly::is_zero(f)) throw MathError("trager_factor: zero polynomial");
    if (!extpoly::is_monic(f, ext)) throw MathError("trager_factor: expected monic input");
    {
        ExtPoly g = extpoly::gcd(f, extpoly::derivative(f, ext), ext);
        if (extpoly::deg(g) != 0) throw MathError("expected squarefree");
    }
    if (extpoly::deg(f) == 1) return {f};

    std::size_t k = ext.base_ring()->vars.size();
    std::size_t zv = k;

    long s = 0;
    MultiPoly norm = MultiPoly::zero(ext.base_ring());
    ExtPoly shifted;
    for (unsigned attempt = 0;; ++attempt) {
        s = (attempt + 1) / 2;
        if (attempt % 2 == 0) s = -s;  // 0, 1, -1, 2, -2, ...
        ExtElement shift_elem =
            ext_scale(ext_alpha(ext), RatFn::constant(ext.base_ring(), Rational(-s)), ext);
        shifted = extpoly::shift_z(f, shift_elem, ext);
        MultiPoly n = trager_norm(shifted, ext);
        if (squarefree_in_z(n, zv)) {
            norm = std::move(n);
            break;
        }
        if (attempt > 64) throw InternalError("trager: no squarefree norm found");
    }

    auto fac = factor_multivariate_q(norm);
    std::vector<ExtPoly> out;
    const Ring& norm_ring = norm.ring();
    std::vector<std::size_t> t_back(norm_ring->vars.size(), 0);
    for (std::size_t i = 0; i < k; ++i) t_back[i] = i;
    Ring tring = ext.base_ring();
    ExtElement salpha = ext_scale(ext_alpha(ext), RatFn::constant(tring, Rational(s)), ext);

    for (const auto& [ni, mult] : fac.factors) {
        if (ni.degree_in(zv) == 0) continue;  // content in t
        if (mult != 1) throw InternalError("trager: norm factor multiplicity");
        // Map the factor into an ExtPoly and substitute z -> z + s*alpha.
        ExtPoly nz;
        for (const auto& c : ni.coeffs_in(zv)) {
            MultiPoly ct = c.map_vars(tring, t_back);
            nz.coeffs.push_back(ext_from_base(RatFn(ct), ext));
        }
        nz = extpoly::trim(std::move(nz));
        ExtPoly pulled = extpoly::shift_z(nz, salpha, ext);
        ExtPoly h = extpoly::gcd(f, pulled, ext);
        if (extpoly::deg(h) < 1) continue;
        out.push_back(std::move(h));
    }

    std::sort(out.begin(), out.end(), [](const ExtPoly& a, const ExtPoly& b) {
        if (extpoly::deg(a) != extpoly::deg(b)) return extpoly::deg(a) < extpoly::deg(b);
        return extpoly::compare(a, b) < 0;
    });

    ExtPoly prod;
    prod.coeffs = {ext_one(ext)};
    for (const auto& h : out) prod = extpoly::mul(prod, h, ext);
    if (!extpoly::equal(prod, f)) throw InternalError("trager: factor product check failed");
    return out;
}

}  // namespace unirat
