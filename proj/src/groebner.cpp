#include "unirat/groebner.hpp"

#include <algorithm>
#include <set>

namespace unirat {

namespace {

bool g_validate = false;

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g) {
    const Monomial lcm = f.leading_monomial().lcm(g.leading_monomial());
    MultiPoly a = f.mul_term(f.leading_monomial().divide_into(lcm), f.leading_coeff().inverse());
    MultiPoly b = g.mul_term(g.leading_monomial().divide_into(lcm), g.leading_coeff().inverse());
    return a - b;
}

MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    MultiPoly p = f;
    std::vector<MultiPoly::Term> tail;
    while (!p.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(p.leading_monomial())) {
                Monomial q = g.leading_monomial().divide_into(p.leading_monomial());
                Rational c = p.leading_coeff() / g.leading_coeff();
                p = p - g.mul_term(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            tail.push_back({p.leading_monomial(), p.leading_coeff()});
            p = p - MultiPoly::monomial(p.ring(), p.leading_monomial(), p.leading_coeff());
        }
    }
    return MultiPoly::from_terms(f.ring(), std::move(tail));
}

struct Pair {
    unsigned deg;
    Monomial lcm;
    std::size_t i, j;
};

}  // namespace

Ideal::Ideal(Ring r, std::vector<MultiPoly> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring)) throw InternalError("Ideal: generator ring mismatch");
        generators.push_back(std::move(g));
    }
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& g) {
    if (!same_ring(f.ring(), g.ring)) throw InternalError("normal_form: ring mismatch");
    return reduce_full(f, g.elements);
}

GroebnerBasis buchberger(const Ideal& ideal) {
    const Ring& ring = ideal.ring;
    const MonomialOrder& ord = ring->order;
    GroebnerBasis out{ring, {}, true};

    std::vector<MultiPoly> basis;
    for (const auto& g : ideal.generators) basis.push_back(g.monic());
    if (basis.empty()) return out;

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (!(a.lcm == b.lcm)) return ord.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
        queue.push_back({l.degree(), std::move(l), i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    std::set<std::pair<std::size_t, std::size_t>> treated;
    auto is_treated = [&](std::size_t a, std::size_t b) {
        return treated.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        treated.insert({p.i, p.j});

        const Monomial& li = basis[p.i].leading_monomial();
        const Monomial& lj = basis[p.j].leading_monomial();
        // Product criterion.
        if ((li * lj) == p.lcm) continue;
        // Chain criterion.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].leading_monomial().divides(p.lcm) && is_treated(p.i, k) && is_treated(p.j, k))
                chained = true;
        }
        if (chained) continue;

        MultiPoly r = reduce_full(spoly(basis[p.i], basis[p.j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        std::size_t n = basis.size() - 1;
        for (std::size_t i = 0; i < n; ++i) push_pair(i, n);
    }

    // Minimal basis: drop elements whose leading monomial another divides.
    std::sort(basis.begin(), basis.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        if (!(a.leading_monomial() == b.leading_monomial()))
            return ord.less(a.leading_monomial(), b.leading_monomial());
        return MultiPoly::compare(a, b) < 0;
    });
    std::vector<MultiPoly> minimal;
    for (const auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    // Tail-reduce each element modulo the others.
    std::vector<MultiPoly> reduced(minimal.size(), MultiPoly(ring));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = reduce_full(minimal[i], others).monic();
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.less(b.leading_monomial(), a.leading_monomial());
    });
    out.elements = std::move(reduced);

    if (g_validate && !spolys_reduce_to_zero(out))
        throw InternalError("buchberger: basis failed S-polynomial validation");
    return out;
}

std::vector<MultiPoly> eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep) {
    const Ring& ring = ideal.ring;
    std::size_t n = ring->vars.size();
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n) throw InternalError("eliminate: bad variable index");
        kept[k] = true;
    }
    std::vector<std::size_t> drop_vars, keep_vars;
    for (std::size_t i = 0; i < n; ++i) (kept[i] ? keep_vars : drop_vars).push_back(i);

    std::vector<std::string> names;
    names.reserve(n);
    std::vector<std::size_t> var_map(n);
    for (std::size_t i = 0; i < drop_vars.size(); ++i) {
        names.push_back(ring->vars[drop_vars[i]]);
        var_map[drop_vars[i]] = i;
    }
    for (std::size_t i = 0; i < keep_vars.size(); ++i) {
        names.push_back(ring->vars[keep_vars[i]]);
        var_map[keep_vars[i]] = drop_vars.size() + i;
    }
    Ring block = make_ring(std::move(names), MonomialOrder::block(drop_vars.size()));

    std::vector<MultiPoly> gens;
    gens.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) gens.push_back(g.map_vars(block, var_map));
    GroebnerBasis gb = buchberger(Ideal(block, std::move(gens)));

    std::vector<std::size_t> back(n);
    for (std::size_t i = 0; i < n; ++i) back[var_map[i]] = i;
    std::vector<MultiPoly> result;
    for (const auto& e : gb.elements) {
        bool pure = true;
        for (const auto& t : e.terms())
            for (std::size_t i = 0; i < drop_vars.size() && pure; ++i)
                if (t.m[i]) pure = false;
        if (pure) result.push_back(e.map_vars(ring, back));
    }
    return result;
}

bool spolys_reduce_to_zero(const GroebnerBasis& g) {
    for (std::size_t j = 1; j < g.elements.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!reduce_full(spoly(g.elements[i], g.elements[j]), g.elements).is_zero()) return false;
    return true;
}

void set_basis_validation(bool on) { g_validate = on; }
bool basis_validation() { return g_validate; }

}  // namespace unirat
