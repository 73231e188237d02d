#include "unirat/fieldops.hpp"

#include <algorithm>

namespace unirat {

namespace {

std::vector<std::vector<RatFn>> jacobian_rows(const std::vector<RatFn>& gens, const Ring& ring) {
    std::vector<std::vector<RatFn>> rows;
    rows.reserve(gens.size());
    for (const auto& f : gens) {
        std::vector<RatFn> row;
        row.reserve(ring->vars.size());
        for (std::size_t j = 0; j < ring->vars.size(); ++j) row.push_back(f.derivative(j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> numbered(const std::string& stem, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

// Deterministic enumeration of nonzero small-integer coefficient vectors:
// digits sweep 0, 1, -1, 2, -2, ... ring by ring in max-norm.
class CoeffEnumerator {
public:
    explicit CoeffEnumerator(std::size_t dims) : dims_(dims), norm_(1), counter_(dims, 0) {}

    std::vector<long> next() {
        while (true) {
            std::vector<long> pt(dims_);
            bool extreme = false;
            for (std::size_t i = 0; i < dims_; ++i) {
                unsigned d = counter_[i];
                long val = static_cast<long>((d + 1) / 2);
                if (d != 0 && d % 2 == 0) val = -val;
                pt[i] = val;
                if (static_cast<unsigned long>(val < 0 ? -val : val) == norm_) extreme = true;
            }
            advance();
            if (extreme) return pt;
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

}  // namespace

FieldPresentation::FieldPresentation(Ring r, std::vector<RatFn> generators) : ring(std::move(r)) {
    for (auto& g : generators) {
        if (!same_ring(g.ring(), ring)) throw InternalError("FieldPresentation: ring mismatch");
        if (g.is_constant()) continue;  // K itself contributes nothing
        gens.push_back(std::move(g));
    }
    if (gens.empty()) throw MathError("field presentation needs a nonconstant generator");
}

RatFn MinPoly::eval(const std::vector<RatFn>& tag_values, const RatFn& z) const {
    RatFn acc = RatFn::zero(z.ring());
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * z + coeffs[i].substitute(tag_values);
    return acc;
}

// ---------------------------------------------------------------------------
// SpanEngine
// ---------------------------------------------------------------------------

SpanEngine::SpanEngine(Ring ambient, std::vector<RatFn> basis,
                       const std::vector<MultiPoly>& extra_dens)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    n_ = ambient_->vars.size();
    k_ = basis_.size();
    if (k_ == 0) throw InternalError("SpanEngine: empty basis");

    tring_ = make_ring(numbered("t", k_));
    std::vector<std::string> big_names = ambient_->vars;
    big_names.push_back("@w");
    for (const auto& t : tring_->vars) big_names.push_back("@" + t);
    big_ = make_ring(std::move(big_names), MonomialOrder::block(n_ + 1));

    delta_ = MultiPoly::constant(ambient_, Rational(1));
    for (const auto& b : basis_) delta_ = delta_ * b.den();
    for (const auto& d : extra_dens) {
        if (d.is_zero()) throw MathError("SpanEngine: zero denominator");
        delta_ = delta_ * d;
    }

    std::vector<std::size_t> amb_to_big(n_);
    for (std::size_t i = 0; i < n_; ++i) amb_to_big[i] = i;
    std::vector<MultiPoly> gens;
    for (std::size_t j = 0; j < k_; ++j) {
        MultiPoly num = basis_[j].num().map_vars(big_, amb_to_big);
        MultiPoly den = basis_[j].den().map_vars(big_, amb_to_big);
        MultiPoly tj = MultiPoly::variable(big_, n_ + 1 + j);
        gens.push_back(num - tj * den);
    }
    gens.push_back(MultiPoly::variable(big_, n_) * delta_.map_vars(big_, amb_to_big) -
                   MultiPoly::constant(big_, Rational(1)));
    gb_ = buchberger(Ideal(big_, std::move(gens)));

    for (const auto& e : gb_.elements) {
        FVec grouped = to_fvec(e);
        if (grouped.empty()) throw InternalError("SpanEngine: zero basis element");
        GBElem el;
        el.lead = grouped.rbegin()->first;
        for (auto it = grouped.rbegin(); it != grouped.rend(); ++it)
            el.terms.push_back({it->first, it->second});
        gbf_.push_back(std::move(el));
    }
}

SpanEngine::FVec SpanEngine::to_fvec(const MultiPoly& big) const {
    // Group terms by (x, w) part; collect the t part as the coefficient.
    std::map<Key, std::vector<MultiPoly::Term>> groups;
    for (const auto& t : big.terms()) {
        Key key(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i) key[i] = t.m[i];
        Monomial tmono(k_);
        for (std::size_t j = 0; j < k_; ++j) tmono.at(j) = t.m[n_ + 1 + j];
        groups[key].push_back({std::move(tmono), t.c});
    }
    FVec out;
    for (auto& [key, terms] : groups) {
        MultiPoly c = MultiPoly::from_terms(tring_, std::move(terms));
        if (!c.is_zero()) out.emplace(key, RatFn(std::move(c)));
    }
    return out;
}

SpanEngine::FVec SpanEngine::reduce(FVec v) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = v.rbegin(); it != v.rend() && !changed; ++it) {
            const Key& key = it->first;
            for (const auto& el : gbf_) {
                bool divides = true;
                for (std::size_t i = 0; i <= n_ && divides; ++i)
                    if (el.lead[i] > key[i]) divides = false;
                if (!divides) continue;
                Key shift(n_ + 1);
                for (std::size_t i = 0; i <= n_; ++i) shift[i] = key[i] - el.lead[i];
                RatFn factor = it->second / el.terms.front().second;
                for (const auto& [k2, c2] : el.terms) {
                    Key kk(n_ + 1);
                    for (std::size_t i = 0; i <= n_; ++i) kk[i] = k2[i] + shift[i];
                    auto jt = v.find(kk);
                    if (jt == v.end()) {
                        RatFn x = -(factor * c2);
                        if (!x.is_zero()) v.emplace(std::move(kk), std::move(x));
                    } else {
                        jt->second -= factor * c2;
                        if (jt->second.is_zero()) v.erase(jt);
                    }
                }
                changed = true;
                break;
            }
        }
    }
    return v;
}

SpanEngine::FVec SpanEngine::one() const {
    FVec v;
    v.emplace(Key(n_ + 1, 0u), RatFn::constant(tring_, Rational(1)));
    return v;
}

SpanEngine::FVec SpanEngine::img_poly(const MultiPoly& p) const {
    if (!same_ring(p.ring(), ambient_)) throw InternalError("img_poly: ring mismatch");
    FVec v;
    for (const auto& t : p.terms()) {
        Key key(n_ + 1, 0u);
        for (std::size_t i = 0; i < n_; ++i) key[i] = t.m[i];
        v.emplace(std::move(key), RatFn::constant(tring_, t.c));
    }
    return reduce(std::move(v));
}

SpanEngine::FVec SpanEngine::img(const RatFn& h) const {
    if (h.den().is_constant()) {
        return img_poly(h.num().scale(h.den().leading_coeff().inverse()));
    }
    MultiPoly pow = delta_;
    for (unsigned e = 1; e <= 64; ++e) {
        auto u = pow.divided_by(h.den());
        if (u) {
            FVec v;
            for (const auto& t : (h.num() * *u).terms()) {
                Key key(n_ + 1, 0u);
                for (std::size_t i = 0; i < n_; ++i) key[i] = t.m[i];
                key[n_] = e;
                v.emplace(std::move(key), RatFn::constant(tring_, t.c));
            }
            return reduce(std::move(v));
        }
        pow = pow * delta_;
    }
    throw InternalError("SpanEngine::img: denominator not invertible in the localization");
}

SpanEngine::FVec SpanEngine::mul_nf(const FVec& a, const FVec& b) const {
    FVec v;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            Key k(n_ + 1);
            for (std::size_t i = 0; i <= n_; ++i) k[i] = ka[i] + kb[i];
            RatFn c = ca * cb;
            auto it = v.find(k);
            if (it == v.end()) {
                if (!c.is_zero()) v.emplace(std::move(k), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) v.erase(it);
            }
        }
    return reduce(std::move(v));
}

// ---------------------------------------------------------------------------
// AlgebraSpan
// ---------------------------------------------------------------------------

AlgebraSpan::AlgebraSpan(const SpanEngine& eng, const std::vector<RatFn>& generators,
                         const std::vector<RatFn>& generator_witnesses, Ring witness_ring)
    : eng_(eng), witness_ring_(std::move(witness_ring)) {
    if (generators.size() != generator_witnesses.size())
        throw InternalError("AlgebraSpan: witness count mismatch");
    Echelon<SpanEngine::Key, detail::GrevLexKeyLess> ech(eng.tag_ring());
    std::vector<SpanEngine::FVec> gen_imgs;
    gen_imgs.reserve(generators.size());
    for (const auto& g : generators) gen_imgs.push_back(eng.img(g));

    vectors_.push_back(eng.one());
    witnesses_.push_back(RatFn::constant(witness_ring_, Rational(1)));
    ech.insert(vectors_[0]);
    for (std::size_t qi = 0; qi < vectors_.size(); ++qi) {
        for (std::size_t l = 0; l < gen_imgs.size(); ++l) {
            SpanEngine::FVec cand = eng.mul_nf(vectors_[qi], gen_imgs[l]);
            if (!ech.insert(cand)) continue;
            vectors_.push_back(std::move(cand));
            witnesses_.push_back(witnesses_[qi] * generator_witnesses[l]);
            if (vectors_.size() > 4096)
                throw MathError("AlgebraSpan: dimension exceeds cap; generators not algebraic?");
        }
    }
}

std::optional<RatFn> AlgebraSpan::solve(const MultiPoly& num, const MultiPoly& den,
                                        const std::vector<RatFn>& tag_to_witness) const {
    SpanEngine::FVec target = eng_.img_poly(num);
    SpanEngine::FVec denv = eng_.img_poly(den);
    Echelon<SpanEngine::Key, detail::GrevLexKeyLess> ech(eng_.tag_ring());
    for (const auto& v : vectors_) {
        if (!ech.insert(eng_.mul_nf(denv, v)))
            throw InternalError("AlgebraSpan::solve: dependent scaled basis");
    }
    auto coords = ech.solve(std::move(target));
    if (!coords) return std::nullopt;
    RatFn expr = RatFn::zero(witness_ring_);
    for (std::size_t e = 0; e < coords->size(); ++e) {
        if ((*coords)[e].is_zero()) continue;
        expr += (*coords)[e].substitute(tag_to_witness) * witnesses_[e];
    }
    return expr;
}

// ---------------------------------------------------------------------------
// TagSystem
// ---------------------------------------------------------------------------

TagSystem::TagSystem(FieldPresentation F) : field_(std::move(F)) {
    const Ring& ring = field_.ring;
    std::size_t n = ring->vars.size(), m = field_.gens.size();
    yring_ = make_ring(numbered("y", m));

    std::vector<std::string> names = ring->vars;
    names.push_back("@w");
    for (const auto& y : yring_->vars) names.push_back("@" + y);
    Ring big = make_ring(std::move(names), MonomialOrder::block(n + 1));
    std::vector<std::size_t> amb_to_big(n);
    for (std::size_t i = 0; i < n; ++i) amb_to_big[i] = i;

    std::vector<MultiPoly> gens;
    MultiPoly delta = MultiPoly::constant(ring, Rational(1));
    for (std::size_t i = 0; i < m; ++i) {
        const RatFn& f = field_.gens[i];
        gens.push_back(f.num().map_vars(big, amb_to_big) -
                       MultiPoly::variable(big, n + 1 + i) * f.den().map_vars(big, amb_to_big));
        delta = delta * f.den();
    }
    gens.push_back(MultiPoly::variable(big, n) * delta.map_vars(big, amb_to_big) -
                   MultiPoly::constant(big, Rational(1)));
    ideal_ = std::make_unique<Ideal>(big, std::move(gens));
    basis_ = buchberger(*ideal_);

    basis_idx_ = select_transcendence_basis(field_);
    std::vector<RatFn> tbasis;
    std::vector<MultiPoly> extra_dens;
    std::vector<bool> in_basis(m, false);
    for (std::size_t i : basis_idx_) {
        tbasis.push_back(field_.gens[i]);
        in_basis[i] = true;
    }
    std::vector<RatFn> algebraics, alg_wit;
    for (std::size_t i = 0; i < m; ++i) {
        if (in_basis[i]) continue;
        algebraics.push_back(field_.gens[i]);
        alg_wit.push_back(RatFn::variable(yring_, i));
        extra_dens.push_back(field_.gens[i].den());
    }
    engine_ = std::make_unique<SpanEngine>(ring, std::move(tbasis), extra_dens);
    for (std::size_t j = 0; j < basis_idx_.size(); ++j)
        tag_to_y_.push_back(RatFn::variable(yring_, basis_idx_[j]));
    span_ = std::make_unique<AlgebraSpan>(*engine_, algebraics, alg_wit, yring_);
}

MemberResult TagSystem::is_member(const RatFn& g) const {
    if (!same_ring(g.ring(), field_.ring)) throw InternalError("is_member: ring mismatch");
    if (g.is_constant()) {
        MembershipWitness w{yring_, RatFn::constant(yring_, g.constant_value())};
        return {true, std::move(w)};
    }
    // Fast rejection: transcendental over the whole field.
    {
        std::vector<RatFn> rows;
        for (std::size_t i : basis_idx_) rows.push_back(field_.gens[i]);
        rows.push_back(g);
        if (rank_fraction_free(jacobian_rows(rows, field_.ring)) > basis_idx_.size())
            return {false, std::nullopt};
    }
    auto expr = span_->solve(g.num(), g.den(), tag_to_y_);
    if (!expr) return {false, std::nullopt};
    RatFn check = expr->substitute(field_.gens);
    if (!(check == g)) throw InternalError("is_member: witness substitution failed");
    return {true, MembershipWitness{yring_, std::move(*expr)}};
}

// ---------------------------------------------------------------------------
// Free operations
// ---------------------------------------------------------------------------

MemberResult is_member(const RatFn& f, const FieldPresentation& F) {
    TagSystem ts(F);
    return ts.is_member(f);
}

unsigned transcendence_degree(const FieldPresentation& F) {
    return static_cast<unsigned>(rank_fraction_free(jacobian_rows(F.gens, F.ring)));
}

std::vector<std::size_t> select_transcendence_basis(const FieldPresentation& F) {
    std::vector<std::size_t> picked;
    std::vector<RatFn> rows;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < F.gens.size(); ++i) {
        rows.push_back(F.gens[i]);
        std::size_t r = rank_fraction_free(jacobian_rows(rows, F.ring));
        if (r > rank) {
            rank = r;
            picked.push_back(i);
        } else {
            rows.pop_back();
        }
    }
    return picked;
}

namespace {

MinPoly minpoly_impl(const std::vector<RatFn>& gens, const RatFn& g,
                     const std::vector<std::string>& tag_names, const Ring& ambient) {
    std::size_t n = ambient->vars.size(), m = gens.size();
    if (tag_names.size() != m) throw InternalError("minpoly: tag name count");

    // Stage 1: eliminate {x, w} from the tag ideal extended with z*den - num.
    std::vector<std::string> names = ambient->vars;
    names.push_back("@w");
    names.push_back("@z");
    for (const auto& t : tag_names) names.push_back("@" + t);
    Ring big = make_ring(std::move(names), MonomialOrder::block(n + 1));
    std::vector<std::size_t> amb_to_big(n);
    for (std::size_t i = 0; i < n; ++i) amb_to_big[i] = i;

    std::vector<MultiPoly> igens;
    MultiPoly delta = g.den();
    for (const auto& f : gens) delta = delta * f.den();
    for (std::size_t i = 0; i < m; ++i) {
        igens.push_back(gens[i].num().map_vars(big, amb_to_big) -
                        MultiPoly::variable(big, n + 2 + i) * gens[i].den().map_vars(big, amb_to_big));
    }
    igens.push_back(MultiPoly::variable(big, n + 1) * g.den().map_vars(big, amb_to_big) -
                    g.num().map_vars(big, amb_to_big));
    igens.push_back(MultiPoly::variable(big, n) * delta.map_vars(big, amb_to_big) -
                    MultiPoly::constant(big, Rational(1)));
    GroebnerBasis gb1 = buchberger(Ideal(big, std::move(igens)));

    // Stage 2: basis of the relation ideal under the block order {z} > {tags}.
    Ring zy = make_ring([&] {
        std::vector<std::string> v{"z"};
        for (const auto& t : tag_names) v.push_back(t);
        return v;
    }(), MonomialOrder::block(1));
    std::vector<std::size_t> big_to_zy(n + 2 + m, 0);
    std::vector<MultiPoly> kgens;
    for (const auto& e : gb1.elements) {
        bool pure = true;
        for (const auto& t : e.terms())
            for (std::size_t i = 0; i <= n && pure; ++i)
                if (t.m[i]) pure = false;
        if (!pure) continue;
        std::vector<MultiPoly::Term> ts;
        for (const auto& t : e.terms()) {
            Monomial mm(1 + m);
            mm.at(0) = t.m[n + 1];
            for (std::size_t j = 0; j < m; ++j) mm.at(1 + j) = t.m[n + 2 + j];
            ts.push_back({std::move(mm), t.c});
        }
        kgens.push_back(MultiPoly::from_terms(zy, std::move(ts)));
    }
    GroebnerBasis gb2 = buchberger(Ideal(zy, std::move(kgens)));

    // Split off the bottom relation ideal (z-free elements) in the tag ring.
    Ring tring = make_ring(tag_names);
    std::vector<std::size_t> zy_to_t(1 + m, 0);
    for (std::size_t j = 0; j < m; ++j) zy_to_t[1 + j] = j;
    GroebnerBasis bottom{tring, {}, true};
    for (const auto& e : gb2.elements)
        if (e.degree_in(0) == 0) bottom.elements.push_back(e.map_vars(tring, zy_to_t));

    // Minimal z-degree element with a nonzero image over the bottom field.
    std::optional<std::vector<MultiPoly>> best;  // reduced coefficients in tring
    for (const auto& e : gb2.elements) {
        unsigned dz = e.degree_in(0);
        if (dz == 0) continue;
        std::vector<MultiPoly> cs;
        bool nonzero = false;
        for (auto& c_zy : e.coeffs_in(0)) {
            MultiPoly c = c_zy.map_vars(tring, zy_to_t);
            if (!bottom.elements.empty()) c = normal_form(c, bottom);
            nonzero = nonzero || !c.is_zero();
            cs.push_back(std::move(c));
        }
        if (!nonzero) continue;
        while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
        if (cs.size() < 2) throw InternalError("minpoly: image degenerated to a constant");
        if (!best || cs.size() < best->size()) best = std::move(cs);
    }
    if (!best) throw MathError("transcendental element");

    MinPoly mp;
    mp.coeff_ring = tring;
    const MultiPoly& lead = best->back();
    for (const auto& c : *best) mp.coeffs.push_back(RatFn(c, lead));

    // p(g) must vanish exactly after substituting the generators.
    RatFn val = mp.eval(gens, g);
    if (!val.is_zero()) throw InternalError("minpoly: substitution check failed");
    return mp;
}

}  // namespace

MinPoly minimal_polynomial(const RatFn& g, const FieldPresentation& F) {
    return minpoly_impl(F.gens, g, numbered("y", F.gens.size()), F.ring);
}

MinPoly minimal_polynomial_over_basis(const std::vector<RatFn>& basis, const RatFn& g,
                                      const std::vector<std::string>& tag_names) {
    if (basis.empty()) throw InternalError("minimal_polynomial_over_basis: empty basis");
    return minpoly_impl(basis, g, tag_names, basis[0].ring());
}

std::pair<RatFn, MinPoly> primitive_element(const std::vector<RatFn>& e_basis,
                                            const std::vector<RatFn>& algebraics) {
    if (algebraics.empty()) throw MathError("primitive_element: nothing to adjoin");
    const Ring ambient = e_basis.empty() ? algebraics[0].ring() : e_basis[0].ring();
    if (e_basis.empty()) throw MathError("primitive_element: empty transcendence basis");
    if (rank_fraction_free(jacobian_rows(e_basis, ambient)) != e_basis.size())
        throw MathError("primitive_element: basis is not algebraically independent");

    std::vector<MultiPoly> extra_dens;
    for (const auto& a : algebraics) extra_dens.push_back(a.den());
    SpanEngine eng(ambient, e_basis, extra_dens);
    Ring awring = make_ring(numbered("a", algebraics.size()));
    std::vector<RatFn> awit;
    for (std::size_t i = 0; i < algebraics.size(); ++i) awit.push_back(RatFn::variable(awring, i));
    AlgebraSpan span(eng, algebraics, awit, awring);
    unsigned target = span.dim();

    std::vector<std::string> tnames = numbered("t", e_basis.size());
    // Jacobian rank check ensures the algebraics are algebraic over the basis.
    {
        std::vector<RatFn> rows = e_basis;
        for (const auto& a : algebraics) rows.push_back(a);
        if (rank_fraction_free(jacobian_rows(rows, ambient)) != e_basis.size())
            throw MathError("primitive_element: element transcendental over the basis");
    }

    CoeffEnumerator en(algebraics.size());
    for (unsigned tries = 0; tries < 4096; ++tries) {
        std::vector<long> c = en.next();
        RatFn beta = RatFn::zero(ambient);
        for (std::size_t j = 0; j < algebraics.size(); ++j)
            if (c[j] != 0) beta += RatFn::constant(ambient, Rational(c[j])) * algebraics[j];
        if (beta.is_constant()) continue;
        MinPoly mp = minimal_polynomial_over_basis(e_basis, beta, tnames);
        if (mp.degree() == target) return {beta, std::move(mp)};
    }
    throw InternalError("primitive_element: no candidate certified");
}

bool field_contains(const FieldPresentation& F, const TagSystem& G) {
    for (const auto& f : F.gens)
        if (!G.is_member(f).member) return false;
    return true;
}

bool field_contains(const FieldPresentation& F, const FieldPresentation& G) {
    TagSystem ts(G);
    return field_contains(F, ts);
}

bool field_equal(const FieldPresentation& F, const FieldPresentation& G) {
    TagSystem tf(F), tg(G);
    return field_contains(F, tg) && field_contains(G, tf);
}

}  // namespace unirat
