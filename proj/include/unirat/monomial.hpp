#ifndef UNIRAT_MONOMIAL_HPP
#define UNIRAT_MONOMIAL_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unirat/rational.hpp"

namespace unirat {

/// Exponent vector with one slot per ambient variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0u) {}
    explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

    static Monomial var(std::size_t nvars, std::size_t idx, unsigned exp = 1) {
        Monomial m(nvars);
        m.e_[idx] = exp;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& at(std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& exps() const { return e_; }

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned x : e_) d += x;
        return d;
    }

    bool is_one() const {
        for (unsigned x : e_)
            if (x) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// o / *this; caller must ensure divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
        return r;
    }

    Monomial pow(unsigned k) const {
        Monomial r(*this);
        for (auto& x : r.e_) x *= k;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

private:
    std::vector<unsigned> e_;
};

enum class OrderKind { Lex, GrevLex, Block };

/// Total multiplicative well-order on monomials. Block is the product order
/// grevlex x grevlex with variables [0, split) in the leading block; any
/// monomial involving a leading-block variable sorts above all monomials
/// free of them, which is what elimination needs.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::size_t split = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder block(std::size_t split) { return {OrderKind::Block, split}; }

    bool operator==(const MonomialOrder&) const = default;

    // a < b
    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::Lex: return lex_less(a, b, 0, a.nvars());
            case OrderKind::GrevLex: return grevlex_less(a, b, 0, a.nvars());
            case OrderKind::Block: {
                if (grevlex_less(a, b, 0, split)) return true;
                if (grevlex_less(b, a, 0, split)) return false;
                return grevlex_less(a, b, split, a.nvars());
            }
        }
        return false;
    }

private:
    static bool lex_less(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    static bool grevlex_less(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        unsigned da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db;
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

struct RingData {
    std::vector<std::string> vars;
    MonomialOrder order;
};

using Ring = std::shared_ptr<const RingData>;

inline Ring make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<RingData>(RingData{std::move(vars), order});
}

inline bool same_ring(const Ring& a, const Ring& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->vars == b->vars && a->order == b->order;
}

inline std::optional<std::size_t> var_index(const Ring& r, const std::string& name) {
    for (std::size_t i = 0; i < r->vars.size(); ++i)
        if (r->vars[i] == name) return i;
    return std::nullopt;
}

}  // namespace unirat

#endif
