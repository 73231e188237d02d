#ifndef UNIRAT_TESTS_HELPERS_HPP
#define UNIRAT_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "unirat/parse.hpp"
#include "unirat/upoly.hpp"

namespace testutil {

using namespace unirat;

inline Ring ring1() { return make_ring({"x"}); }
inline Ring ring2() { return make_ring({"x1", "x2"}); }

inline RatFn rf(const std::string& s, const Ring& r) { return parse_ratfn(s, r); }

inline MultiPoly pp(const std::string& s, const Ring& r) {
    RatFn f = parse_ratfn(s, r);
    if (!f.is_polynomial()) throw std::runtime_error("pp: not a polynomial: " + s);
    return f.num();
}

// Deterministic random polynomials for property tests.
inline MultiPoly random_poly(std::mt19937& rng, const Ring& r, unsigned max_terms = 4,
                             unsigned max_exp = 3, long coeff_range = 9) {
    std::uniform_int_distribution<unsigned> nt(1, max_terms);
    std::uniform_int_distribution<unsigned> ex(0, max_exp);
    std::uniform_int_distribution<long> cf(-coeff_range, coeff_range);
    std::vector<MultiPoly::Term> terms;
    unsigned n = nt(rng);
    for (unsigned i = 0; i < n; ++i) {
        Monomial m(r->vars.size());
        for (std::size_t v = 0; v < r->vars.size(); ++v) m.at(v) = ex(rng);
        terms.push_back({std::move(m), Rational(cf(rng))});
    }
    return MultiPoly::from_terms(r, std::move(terms));
}

inline MultiPoly random_nonzero_poly(std::mt19937& rng, const Ring& r, unsigned max_terms = 4,
                                     unsigned max_exp = 3, long coeff_range = 9) {
    for (;;) {
        MultiPoly p = random_poly(rng, r, max_terms, max_exp, coeff_range);
        if (!p.is_zero()) return p;
    }
}

inline QPoly random_qpoly(std::mt19937& rng, unsigned max_deg, long coeff_range) {
    std::uniform_int_distribution<unsigned> dd(1, max_deg);
    std::uniform_int_distribution<long> cf(-coeff_range, coeff_range);
    unsigned d = dd(rng);
    QPoly f(d + 1);
    for (unsigned i = 0; i <= d; ++i) f[i] = Rational(cf(rng));
    while (upoly::is_zero(upoly::trim(f))) f[d] = Rational(cf(rng));
    f = upoly::trim(f);
    if (upoly::deg(f) == 0) f.push_back(Rational(1));
    return f;
}

// Oracle: rank by recursive minor expansion over rational functions.
inline std::size_t rank_by_minors(const std::vector<std::vector<RatFn>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();

    // Determinant by Laplace expansion.
    auto det = [&](auto&& self, std::vector<std::vector<RatFn>> a) -> RatFn {
        std::size_t n = a.size();
        if (n == 1) return a[0][0];
        RatFn acc = RatFn::zero(a[0][0].ring());
        for (std::size_t j = 0; j < n; ++j) {
            if (a[0][j].is_zero()) continue;
            std::vector<std::vector<RatFn>> sub;
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<RatFn> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j) row.push_back(a[i][k]);
                sub.push_back(std::move(row));
            }
            RatFn term = a[0][j] * self(self, std::move(sub));
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };

    std::size_t best = 0;
    std::size_t kmax = std::min(rows, cols);
    // All k x k minors, largest first.
    for (std::size_t k = kmax; k >= 1; --k) {
        std::vector<std::size_t> ri(k), ci(k);
        for (std::size_t i = 0; i < k; ++i) ri[i] = i;
        bool done_r = false;
        while (!done_r) {
            for (std::size_t i = 0; i < k; ++i) ci[i] = i;
            bool done_c = false;
            while (!done_c) {
                std::vector<std::vector<RatFn>> sub(k, std::vector<RatFn>());
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i].push_back(m[ri[i]][ci[j]]);
                if (!det(det, sub).is_zero()) {
                    best = k;
                    return best;
                }
                // next column combination
                std::size_t j = k;
                while (j-- > 0) {
                    if (ci[j] != cols - k + j) {
                        ++ci[j];
                        for (std::size_t l = j + 1; l < k; ++l) ci[l] = ci[l - 1] + 1;
                        break;
                    }
                    if (j == 0) done_c = true;
                }
                if (k == 0) break;
            }
            std::size_t j = k;
            while (j-- > 0) {
                if (ri[j] != rows - k + j) {
                    ++ri[j];
                    for (std::size_t l = j + 1; l < k; ++l) ri[l] = ri[l - 1] + 1;
                    break;
                }
                if (j == 0) done_r = true;
            }
        }
    }
    return best;
}

// Oracle: resultant as the determinant of the Sylvester matrix (Bareiss).
MultiPoly sylvester_resultant(const MultiPoly& a, const MultiPoly& b, std::size_t var);

// Oracle: does a primitive integer polynomial of degree <= 6 have a proper
// factor? Kronecker-style search: monic transform, then monic divisors of
// degree <= deg/2 interpolated through divisor tuples of integer values.
bool kronecker_has_proper_factor(const QPoly& f);

}  // namespace testutil

#endif
