#include <algorithm>

#include "unirat/upoly.hpp"

namespace unirat {
namespace upoly {

namespace {

using ZPoly = std::vector<Integer>;  // dense ascending, trimmed

ZPoly ztrim(ZPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

Integer mod_pos(Integer a, const Integer& m) {
    a %= m;
    if (a < 0) a += m;
    return a;
}

Integer mod_sym(Integer a, const Integer& m) {
    a = mod_pos(std::move(a), m);
    if (a * 2 > m) a -= m;
    return a;
}

ZPoly zmodp(ZPoly f, const Integer& m) {
    for (auto& c : f) c = mod_pos(std::move(c), m);
    return ztrim(std::move(f));
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zmodp(std::move(r), m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zmodp(std::move(r), m);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zmodp(std::move(r), m);
}

// Division by a monic divisor, coefficients mod m.
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (b.empty() || b.back() != 1) throw InternalError("zdivmod_monic: divisor not monic");
    ZPoly r = a, q;
    int db = zdeg(b);
    if (zdeg(a) >= db) q.assign(a.size() - b.size() + 1, Integer(0));
    while (!r.empty() && zdeg(r) >= db) {
        Integer c = r.back();
        int shift = zdeg(r) - db;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i + shift] = mod_pos(r[i + shift] - c * b[i], m);
        r = ztrim(std::move(r));
    }
    return {ztrim(std::move(q)), std::move(r)};
}

Integer inv_mod(const Integer& a, const Integer& p) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw InternalError("inv_mod: not invertible");
    return r;
}

ZPoly zmonic(ZPoly f, const Integer& p) {
    f = zmodp(std::move(f), p);
    if (f.empty() || f.back() == 1) return f;
    Integer inv = inv_mod(f.back(), p);
    for (auto& c : f) c = mod_pos(c * inv, p);
    return f;
}

ZPoly zgcd(ZPoly a, ZPoly b, const Integer& p) {
    a = zmonic(std::move(a), p);
    b = zmonic(std::move(b), p);
    while (!b.empty()) {
        ZPoly r = zdivmod_monic(a, b, p).second;
        a = std::move(b);
        b = zmonic(std::move(r), p);
    }
    return a;
}

// x^e mod f (f monic), coefficients mod p.
ZPoly xpow_mod(unsigned long e, const ZPoly& f, const Integer& p) {
    ZPoly base{Integer(0), Integer(1)};
    ZPoly r{Integer(1)};
    base = zdivmod_monic(base, f, p).second;
    while (e) {
        if (e & 1ul) r = zdivmod_monic(zmul(r, base, p), f, p).second;
        e >>= 1ul;
        if (e) base = zdivmod_monic(zmul(base, base, p), f, p).second;
    }
    return r;
}

bool is_small_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Nullspace basis of the Berlekamp map (Frobenius minus identity) mod p for
// monic squarefree f; the nullity equals the number of irreducible factors.
std::vector<ZPoly> berlekamp_nullspace(const ZPoly& f, const Integer& p) {
    std::size_t d = static_cast<std::size_t>(zdeg(f));
    // M column j = x^(j*p) mod f.
    std::vector<ZPoly> cols(d);
    ZPoly xp = xpow_mod(mpz_get_ui(p.get_mpz_t()), f, p);
    cols[0] = ZPoly{Integer(1)};
    for (std::size_t j = 1; j < d; ++j)
        cols[j] = zdivmod_monic(zmul(cols[j - 1], xp, p), f, p).second;
    // N = M - I, rows indexed by coefficient, columns by j.
    std::vector<std::vector<Integer>> n(d, std::vector<Integer>(d, Integer(0)));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < cols[j].size(); ++i) n[i][j] = cols[j][i];
        n[j][j] = mod_pos(n[j][j] - 1, p);
    }
    // Row reduce; track pivot column per row.
    std::vector<long> pivot_of_col(d, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < d; ++col) {
        std::size_t sel = row;
        while (sel < d && n[sel][col] == 0) ++sel;
        if (sel == d) continue;
        std::swap(n[sel], n[row]);
        Integer inv = inv_mod(n[row][col], p);
        for (std::size_t j = 0; j < d; ++j) n[row][j] = mod_pos(n[row][j] * inv, p);
        for (std::size_t i = 0; i < d; ++i) {
            if (i == row || n[i][col] == 0) continue;
            Integer c = n[i][col];
            for (std::size_t j = 0; j < d; ++j) n[i][j] = mod_pos(n[i][j] - c * n[row][j], p);
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<ZPoly> basis;
    for (std::size_t col = 0; col < d; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        ZPoly v(d, Integer(0));
        v[col] = 1;
        for (std::size_t c2 = 0; c2 < d; ++c2)
            if (pivot_of_col[c2] >= 0)
                v[c2] = mod_pos(-n[static_cast<std::size_t>(pivot_of_col[c2])][col], p);
        basis.push_back(ztrim(std::move(v)));
    }
    return basis;
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::vector<ZPoly> berlekamp_split(const ZPoly& f, const Integer& p,
                                   const std::vector<ZPoly>& nullspace) {
    std::size_t r = nullspace.size();
    std::vector<ZPoly> factors{f};
    for (const auto& v : nullspace) {
        if (factors.size() == r) break;
        if (zdeg(v) < 1) continue;  // the constant vector splits nothing
        for (Integer c(0); c < p && factors.size() < r; ++c) {
            ZPoly shifted = v;
            shifted[0] = mod_pos(shifted[0] - c, p);
            std::vector<ZPoly> next;
            for (auto& g : factors) {
                if (zdeg(g) <= 1) {
                    next.push_back(std::move(g));
                    continue;
                }
                ZPoly h = zgcd(g, shifted, p);
                if (zdeg(h) > 0 && zdeg(h) < zdeg(g)) {
                    next.push_back(zdivmod_monic(g, h, p).first);
                    next.push_back(std::move(h));
                } else {
                    next.push_back(std::move(g));
                }
            }
            factors = std::move(next);
        }
    }
    if (factors.size() != r) throw InternalError("berlekamp: split count mismatch");
    std::sort(factors.begin(), factors.end(), zpoly_less);
    return factors;
}

// Extended Euclid mod p: s*g + t*h = 1 with deg s < deg h, deg t < deg g.
std::pair<ZPoly, ZPoly> bezout_mod(const ZPoly& g, const ZPoly& h, const Integer& p) {
    ZPoly r0 = zmodp(g, p), r1 = zmodp(h, p);
    ZPoly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
    while (!r1.empty()) {
        ZPoly r1m = zmonic(r1, p);
        Integer lcinv = inv_mod(r1.back(), p);
        auto [q, rem] = zdivmod_monic(r0, r1m, p);
        // q is the quotient by the monic version; rescale.
        ZPoly qs;
        qs.reserve(q.size());
        for (auto& c : q) qs.push_back(mod_pos(c * lcinv, p));
        ZPoly r2 = rem;
        ZPoly s2 = zsub(s0, zmul(qs, s1, p), p);
        ZPoly t2 = zsub(t0, zmul(qs, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (zdeg(r0) != 0) throw InternalError("bezout_mod: inputs not coprime");
    Integer inv = inv_mod(r0[0], p);
    for (auto& c : s0) c = mod_pos(c * inv, p);
    for (auto& c : t0) c = mod_pos(c * inv, p);
    return {std::move(s0), std::move(t0)};
}

struct LiftPair {
    ZPoly g, h, s, t;
};

// One quadratic Hensel step: modulus m -> m^2 (g, h monic).
LiftPair hensel_step(const ZPoly& f, LiftPair cur, const Integer& m) {
    Integer m2 = m * m;
    ZPoly e = zsub(zmodp(f, m2), zmul(cur.g, cur.h, m2), m2);
    auto [q, r] = zdivmod_monic(zmul(cur.s, e, m2), cur.h, m2);
    ZPoly g2 = zadd(cur.g, zadd(zmul(cur.t, e, m2), zmul(q, cur.g, m2), m2), m2);
    ZPoly h2 = zadd(cur.h, r, m2);
    ZPoly one{Integer(1)};
    ZPoly b = zsub(zadd(zmul(cur.s, g2, m2), zmul(cur.t, h2, m2), m2), one, m2);
    auto [c, d] = zdivmod_monic(zmul(cur.s, b, m2), h2, m2);
    ZPoly s2 = zsub(cur.s, d, m2);
    ZPoly t2 = zsub(cur.t, zadd(zmul(cur.t, b, m2), zmul(c, g2, m2), m2), m2);
    return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

// Lift f = prod(base) from mod p to mod target (a power of p); f monic.
std::vector<ZPoly> hensel_tree(const ZPoly& f, const std::vector<ZPoly>& base, const Integer& p,
                               const Integer& target) {
    if (base.size() == 1) return {zmodp(f, target)};
    std::size_t half = base.size() / 2;
    std::vector<ZPoly> left(base.begin(), base.begin() + static_cast<long>(half));
    std::vector<ZPoly> right(base.begin() + static_cast<long>(half), base.end());
    ZPoly g{Integer(1)}, h{Integer(1)};
    for (const auto& u : left) g = zmul(g, u, p);
    for (const auto& u : right) h = zmul(h, u, p);
    auto [s, t] = bezout_mod(g, h, p);
    LiftPair cur{g, h, s, t};
    Integer m = p;
    while (m < target) {
        cur = hensel_step(f, std::move(cur), m);
        m = m * m;
    }
    cur.g = zmodp(cur.g, target);
    cur.h = zmodp(cur.h, target);
    std::vector<ZPoly> out = hensel_tree(cur.g, left, p, target);
    std::vector<ZPoly> rout = hensel_tree(cur.h, right, p, target);
    out.insert(out.end(), rout.begin(), rout.end());
    return out;
}

// Exact division over Z by a monic divisor; nullopt if remainder nonzero.
std::optional<ZPoly> zdivide_exact(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a, q;
    int db = zdeg(b);
    if (zdeg(a) < db) return std::nullopt;
    q.assign(a.size() - b.size() + 1, Integer(0));
    while (!r.empty() && zdeg(r) >= db) {
        Integer c = r.back();
        int shift = zdeg(r) - db;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
        r = ztrim(std::move(r));
    }
    if (!r.empty()) return std::nullopt;
    return ztrim(std::move(q));
}

ZPoly zprimitive(ZPoly f) {
    Integer g(0);
    for (const auto& c : f) g = int_gcd(g, c);
    if (g == 0) return f;
    if (!f.empty() && f.back() < 0) g = -g;
    for (auto& c : f) c /= g;
    return f;
}

// Zassenhaus recombination of lifted monic factors modulo mk.
std::vector<ZPoly> recombine(ZPoly F, std::vector<ZPoly> modular, const Integer& mk) {
    std::vector<ZPoly> out;
    auto symmetric = [&](ZPoly f) {
        for (auto& c : f) c = mod_sym(std::move(c), mk);
        return f;
    };
    std::size_t s = 1;
    while (2 * s <= modular.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{Integer(1)};
            for (std::size_t i : idx) cand = zmul(cand, modular[i], mk);
            cand = symmetric(std::move(cand));
            bool ok = true;
            if (!F.empty() && F[0] != 0) {
                if (cand.empty() || cand[0] == 0)
                    ok = false;
                else
                    ok = (F[0] % cand[0]) == 0;
            }
            if (ok) {
                auto q = zdivide_exact(F, cand);
                if (q) {
                    out.push_back(cand);
                    F = std::move(*q);
                    std::vector<ZPoly> rest;
                    for (std::size_t i = 0; i < modular.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end())
                            rest.push_back(std::move(modular[i]));
                    modular = std::move(rest);
                    found = true;
                    break;
                }
            }
            // next combination
            long i = static_cast<long>(s) - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                                 modular.size() - s + static_cast<std::size_t>(i))
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (zdeg(F) > 0) out.push_back(std::move(F));
    return out;
}

// f integer, primitive, squarefree, lc > 0, deg >= 1 -> primitive irreducible
// integer factors with positive leading coefficients.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    if (zdeg(f) == 1) return {f};
    if (f[0] == 0) {
        // x divides exactly once (squarefree).
        ZPoly x{Integer(0), Integer(1)};
        ZPoly rest(f.begin() + 1, f.end());
        auto out = factor_squarefree_z(zprimitive(std::move(rest)));
        out.push_back(std::move(x));
        std::sort(out.begin(), out.end(), zpoly_less);
        return out;
    }
    const Integer b = f.back();
    std::size_t d = static_cast<std::size_t>(zdeg(f));
    // Monic transform: F(x) = b^(d-1) f(x/b).
    ZPoly F(f.size());
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        F[i] = f[i] * int_pow(b, static_cast<unsigned long>(d - 1 - i));
    F[d] = 1;

    // Prime selection: first suitable primes, keep the one with the fewest
    // modular factors.
    std::vector<ZPoly> best_nullspace;
    ZPoly best_fp;
    Integer best_p(0);
    std::size_t tried = 0;
    for (unsigned long p = 3; tried < 3 && p < 10000; p += 2) {
        if (!is_small_prime(p)) continue;
        Integer P(static_cast<long>(p));
        ZPoly fp = zmodp(F, P);
        if (zdeg(fp) != static_cast<int>(d)) continue;  // cannot happen (monic); kept for clarity
        ZPoly der;
        for (std::size_t i = 1; i < fp.size(); ++i)
            der.push_back(mod_pos(fp[i] * Integer(static_cast<long>(i)), P));
        der = ztrim(std::move(der));
        if (der.empty()) continue;
        if (zdeg(zgcd(fp, der, P)) != 0) continue;  // not squarefree mod p
        auto ns = berlekamp_nullspace(fp, P);
        ++tried;
        if (best_p == 0 || ns.size() < best_nullspace.size()) {
            best_p = P;
            best_fp = fp;
            best_nullspace = std::move(ns);
            if (best_nullspace.size() == 1) break;
        }
    }
    if (best_p == 0) throw InternalError("factor: no suitable prime found");
    if (best_nullspace.size() == 1) return {f};  // irreducible

    std::vector<ZPoly> modular = berlekamp_split(best_fp, best_p, best_nullspace);

    // Mignotte-style bound on factor coefficients of the monic transform.
    Integer norm2(0);
    for (const auto& c : F) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    Integer bound = (root + 1) * int_pow(Integer(2), static_cast<unsigned long>(d)) + 1;
    Integer target = best_p;
    while (target <= 2 * bound) target *= best_p;

    std::vector<ZPoly> lifted = hensel_tree(F, modular, best_p, target);
    std::vector<ZPoly> monic_factors = recombine(F, std::move(lifted), target);

    // Undo the transform: g(x) = primitive(G(b x)).
    std::vector<ZPoly> out;
    out.reserve(monic_factors.size());
    for (auto& G : monic_factors) {
        for (std::size_t i = 0; i < G.size(); ++i) G[i] *= int_pow(b, static_cast<unsigned long>(i));
        out.push_back(zprimitive(std::move(G)));
    }
    std::sort(out.begin(), out.end(), zpoly_less);
    return out;
}

ZPoly to_zpoly_primitive(const QPoly& f) {
    Integer den(1);
    for (const auto& c : f) den = int_lcm(den, c.den());
    ZPoly z(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) z[i] = f[i].num() * (den / f[i].den());
    return zprimitive(std::move(z));
}

QPoly to_qpoly(const ZPoly& f) {
    QPoly q(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) q[i] = Rational(f[i]);
    return q;
}

}  // namespace

Factorization factor(const QPoly& f) {
    if (is_zero(f)) throw MathError("factor: zero polynomial");
    Factorization out;
    out.constant = lc(f);
    if (deg(f) == 0) return out;
    QPoly m = monic(f);
    for (const auto& [part, mult] : squarefree_decompose(m)) {
        ZPoly zp = to_zpoly_primitive(part);
        for (const auto& g : factor_squarefree_z(zp)) {
            QPoly qf = monic(to_qpoly(g));
            out.factors.push_back({std::move(qf), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        for (std::size_t i = a.first.size(); i-- > 0;)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const QPoly& f) {
    if (deg(f) < 1) return false;
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace upoly
}  // namespace unirat
