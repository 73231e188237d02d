#ifndef UNIRAT_LINALG_HPP
#define UNIRAT_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "unirat/ratfn.hpp"

namespace unirat {

/// Exact rank of a matrix of rational functions (fraction-free Bareiss after
/// clearing row denominators).
std::size_t rank_fraction_free(const std::vector<std::vector<RatFn>>& m);

/// Exact determinant of a square MultiPoly matrix (Bareiss).
MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> m);

/// Row echelon structure over the field of rational functions, with sparse
/// rows keyed by an ordered key type. Each inserted vector is reduced against
/// the stored rows; its coordinates in terms of the originally inserted
/// vectors are tracked so solves can report combinations.
template <class Key, class Less = std::less<Key>>
class Echelon {
public:
    using Vec = std::map<Key, RatFn, Less>;

    struct Row {
        Vec v;                        // reduced, pivot = largest key
        std::vector<RatFn> coords;    // in terms of accepted originals
    };

    explicit Echelon(Ring coeff_ring) : ring_(std::move(coeff_ring)) {}

    std::size_t dim() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }
    const Ring& coeff_ring() const { return ring_; }

    /// Reduce v against stored rows; returns the residual and the coordinates
    /// of the eliminated part.
    std::pair<Vec, std::vector<RatFn>> reduce(Vec v) const {
        std::vector<RatFn> coords(accepted_, RatFn::zero(ring_));
        bool changed = true;
        while (changed && !v.empty()) {
            changed = false;
            Key pivot = v.rbegin()->first;
            for (const auto& row : rows_) {
                if (!(row.v.rbegin()->first == pivot)) continue;
                RatFn factor = v.rbegin()->second / row.v.rbegin()->second;
                axpy(v, row.v, factor);
                for (std::size_t i = 0; i < row.coords.size(); ++i)
                    coords[i] += factor * row.coords[i];
                changed = !v.empty();
                break;
            }
        }
        return {std::move(v), std::move(coords)};
    }

    /// Insert a vector; returns true if it enlarged the span. The vector is
    /// recorded as original index `accepted_` when accepted.
    bool insert(Vec v) {
        auto [res, coords] = reduce(std::move(v));
        if (res.empty()) return false;
        for (auto& row : rows_) row.coords.push_back(RatFn::zero(ring_));
        Row r;
        r.v = std::move(res);
        // The residual equals the original minus the eliminated combination.
        r.coords = std::vector<RatFn>(accepted_ + 1, RatFn::zero(ring_));
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = -coords[i];
        r.coords[accepted_] = RatFn::constant(ring_, Rational(1));
        rows_.push_back(std::move(r));
        ++accepted_;
        return true;
    }

    /// Solve target = sum c_i * original_i; nullopt if not in the span.
    std::optional<std::vector<RatFn>> solve(Vec target) const {
        auto [res, coords] = reduce(std::move(target));
        if (!res.empty()) return std::nullopt;
        return coords;
    }

    bool contains(Vec target) const {
        auto [res, coords] = reduce(std::move(target));
        (void)coords;
        return res.empty();
    }

    static void axpy(Vec& v, const Vec& row, const RatFn& factor) {
        // v -= factor * row
        for (const auto& [k, c] : row) {
            auto it = v.find(k);
            if (it == v.end()) {
                RatFn x = -(factor * c);
                if (!x.is_zero()) v.emplace(k, std::move(x));
            } else {
                it->second -= factor * c;
                if (it->second.is_zero()) v.erase(it);
            }
        }
    }

private:
    Ring ring_;
    std::vector<Row> rows_;
    std::size_t accepted_ = 0;
};

}  // namespace unirat

#endif
