#include "helpers.hpp"

#include "unirat/linalg.hpp"

namespace testutil {

MultiPoly sylvester_resultant(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    auto ac = a.coeffs_in(var);
    auto bc = b.coeffs_in(var);
    std::size_t da = ac.size() - 1, db = bc.size() - 1;
    const Ring& ring = a.ring();
    if (da == 0 && db == 0) return MultiPoly::constant(ring, Rational(1));
    if (da == 0) return ac[0].pow(static_cast<unsigned>(db));
    if (db == 0) return bc[0].pow(static_cast<unsigned>(da));
    std::size_t n = da + db;
    std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n, MultiPoly::zero(ring)));
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j <= da; ++j) s[i][i + j] = ac[da - j];
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j <= db; ++j) s[db + i][i + j] = bc[db - j];
    return det_bareiss(std::move(s));
}

namespace {

std::vector<Integer> divisors_with_sign(const Integer& v) {
    Integer a = v < 0 ? Integer(-v) : v;
    std::vector<Integer> out;
    for (Integer d(1); d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        out.push_back(-d);
        Integer q = a / d;
        if (q != d) {
            out.push_back(q);
            out.push_back(-q);
        }
    }
    return out;
}

}  // namespace

bool kronecker_has_proper_factor(const QPoly& f) {
    int d = upoly::deg(f);
    if (d <= 1) return false;
    // Monic transform: factors of f correspond to monic integer factors of F.
    Integer den(1);
    for (const auto& c : f) den = int_lcm(den, c.den());
    std::vector<Integer> z(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) z[i] = f[i].num() * (den / f[i].den());
    Integer lead = z.back();
    std::vector<Integer> F(z.size());
    for (std::size_t i = 0; i + 1 < z.size(); ++i)
        F[i] = z[i] * int_pow(lead, static_cast<unsigned long>(d - 1 - static_cast<int>(i)));
    F[static_cast<std::size_t>(d)] = 1;

    auto eval = [&](const std::vector<Integer>& p, long x) {
        Integer acc(0);
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
        return acc;
    };

    for (int r = 1; 2 * r <= d; ++r) {
        // Monic candidate of degree r through divisor values at r points
        // 0, 1, -1, 2, -2, ...
        std::vector<long> pts;
        long x = 0;
        while (static_cast<int>(pts.size()) < r) {
            if (eval(F, x) == 0) return true;  // integer root: linear factor
            pts.push_back(x);
            x = x > 0 ? -x : -x + 1;
        }
        std::vector<std::vector<Integer>> divs;
        for (long x : pts) divs.push_back(divisors_with_sign(eval(F, x)));
        std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
        while (true) {
            // Lagrange interpolation of the monic candidate minus x^r.
            // Candidate g with g(pts[i]) = divs[i][pick[i]].
            // Solve the linear system for coefficients g_0..g_{r-1} where
            // g(x) = x^r + sum g_j x^j.
            std::vector<Rational> rhs(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) {
                Integer xv(pts[static_cast<std::size_t>(i)]);
                Integer xr = int_pow(xv, static_cast<unsigned long>(r));
                rhs[static_cast<std::size_t>(i)] =
                    Rational(divs[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]] - xr);
            }
            // Vandermonde solve (tiny r).
            std::vector<std::vector<Rational>> m(static_cast<std::size_t>(r),
                                                 std::vector<Rational>(static_cast<std::size_t>(r)));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        Rational(int_pow(Integer(pts[static_cast<std::size_t>(i)]),
                                         static_cast<unsigned long>(j)));
            // Gaussian elimination.
            bool singular = false;
            for (int c = 0; c < r && !singular; ++c) {
                int piv = -1;
                for (int i = c; i < r; ++i)
                    if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
                        piv = i;
                        break;
                    }
                if (piv < 0) {
                    singular = true;
                    break;
                }
                std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(c)]);
                std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(c)]);
                for (int i = 0; i < r; ++i) {
                    if (i == c) continue;
                    Rational fct = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                                   m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
                    if (fct.is_zero()) continue;
                    for (int j = 0; j < r; ++j)
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                            fct * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
                    rhs[static_cast<std::size_t>(i)] -= fct * rhs[static_cast<std::size_t>(c)];
                }
            }
            if (!singular) {
                QPoly g(static_cast<std::size_t>(r) + 1, Rational(0));
                g[static_cast<std::size_t>(r)] = Rational(1);
                bool integral = true;
                for (int j = 0; j < r; ++j) {
                    Rational c = rhs[static_cast<std::size_t>(j)] /
                                 m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
                    if (!c.is_integer()) integral = false;
                    g[static_cast<std::size_t>(j)] = c;
                }
                if (integral) {
                    QPoly Fq(F.size());
                    for (std::size_t i = 0; i < F.size(); ++i) Fq[i] = Rational(F[i]);
                    auto [q, rem] = upoly::divmod(Fq, g);
                    (void)q;
                    if (upoly::is_zero(rem)) return true;
                }
            }
            // advance pick
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (pick[i] + 1 < divs[i].size()) {
                    ++pick[i];
                    break;
                }
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
    return false;
}

}  // namespace testutil
