#include "unirat/linalg.hpp"

namespace unirat {

namespace {

// Bareiss elimination in place; returns rank. Entries must form a matrix
// over one polynomial ring.
std::size_t bareiss_rank(std::vector<std::vector<MultiPoly>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    const Ring ring = m[0][0].ring();
    MultiPoly prev = MultiPoly::constant(ring, Rational(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                MultiPoly t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                auto q = t.divided_by(prev);
                if (!q) throw InternalError("bareiss: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][c] = MultiPoly::zero(ring);
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank_fraction_free(const std::vector<std::vector<RatFn>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    const Ring ring = m[0][0].ring();
    std::vector<std::vector<MultiPoly>> p(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        MultiPoly lcm = MultiPoly::constant(ring, Rational(1));
        for (const auto& e : m[i]) {
            MultiPoly g = mpoly_gcd(lcm, e.den());
            lcm = *(lcm * e.den()).divided_by(g);
        }
        p[i].reserve(m[i].size());
        for (const auto& e : m[i]) p[i].push_back(e.num() * *lcm.divided_by(e.den()));
    }
    return bareiss_rank(p);
}

MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> m) {
    if (m.empty()) throw InternalError("det_bareiss: empty matrix");
    std::size_t n = m.size();
    const Ring ring = m[0][0].ring();
    MultiPoly prev = MultiPoly::constant(ring, Rational(1));
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return MultiPoly::zero(ring);
        if (p != c) {
            std::swap(m[p], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                MultiPoly t = m[c][c] * m[i][j] - m[i][c] * m[c][j];
                auto q = t.divided_by(prev);
                if (!q) throw InternalError("det_bareiss: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][c] = MultiPoly::zero(ring);
        }
        prev = m[c][c];
    }
    MultiPoly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

}  // namespace unirat
