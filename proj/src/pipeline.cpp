#include "unirat/pipeline.hpp"

#include <algorithm>

namespace unirat {

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

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

/// Presentation polish: the field is unchanged under h -> c*h + d, so strip
/// additive constants from polynomial generators and rescale to a primitive
/// integer form.
RatFn normalize_generator(const RatFn& h) {
    if (!h.is_polynomial()) return h;
    MultiPoly p = h.num();
    p = p - MultiPoly::constant(p.ring(), p.constant_term());
    if (p.is_zero()) return h;
    return RatFn(p.primitive_integer().second);
}

// Representation of ambient elements over the power basis 1, alpha, ...,
// alpha^(D-1) of Q(x) as an E0-vector space.
class PowerBasisSolver {
public:
    PowerBasisSolver(const SpanEngine& eng, const RatFn& alpha, unsigned dim)
        : eng_(eng), dim_(dim) {
        SpanEngine::FVec a = eng.img(alpha);
        powers_.push_back(eng.one());
        for (unsigned j = 1; j < dim; ++j) powers_.push_back(eng.mul_nf(powers_.back(), a));
    }

    std::vector<RatFn> solve(const RatFn& f) const {
        SpanEngine::FVec target = eng_.img_poly(f.num());
        SpanEngine::FVec denv = eng_.img_poly(f.den());
        Echelon<SpanEngine::Key, detail::GrevLexKeyLess> ech(eng_.tag_ring());
        for (const auto& p : powers_)
            if (!ech.insert(eng_.mul_nf(denv, p)))
                throw InternalError("PowerBasisSolver: dependent powers");
        auto coords = ech.solve(std::move(target));
        if (!coords) throw InternalError("PowerBasisSolver: element outside the power span");
        return *coords;
    }

private:
    const SpanEngine& eng_;
    unsigned dim_;
    std::vector<SpanEngine::FVec> powers_;
};

struct RewriteContext {
    RewriteResult rw;
    std::unique_ptr<SpanEngine> eng;
    std::vector<RatFn> algebraics;  // non-basis generators
};

RewriteContext rewrite_ctx(const FieldPresentation& F) {
    const Ring& ring = F.ring;
    std::size_t n = ring->vars.size();
    if (transcendence_degree(F) != n) throw MathError("extension not algebraic");

    RewriteContext ctx;
    RewriteResult& rw = ctx.rw;
    rw.basis_indices = select_transcendence_basis(F);
    std::vector<bool> in_basis(F.gens.size(), false);
    for (std::size_t i : rw.basis_indices) {
        rw.transc_basis.push_back(F.gens[i]);
        in_basis[i] = true;
    }
    for (std::size_t i = 0; i < F.gens.size(); ++i)
        if (!in_basis[i]) ctx.algebraics.push_back(F.gens[i]);

    unsigned d_beta = 1;
    if (!ctx.algebraics.empty()) {
        auto [beta, pbeta] = primitive_element(rw.transc_basis, ctx.algebraics);
        d_beta = pbeta.degree();
        rw.bottom_primitive = std::move(beta);
        rw.bottom_minpoly = std::move(pbeta);
    }

    std::vector<MultiPoly> extra_dens;
    for (const auto& a : ctx.algebraics) extra_dens.push_back(a.den());
    ctx.eng = std::make_unique<SpanEngine>(ring, rw.transc_basis, extra_dens);

    // [Q(x) : E0] as the dimension of the algebra generated by the variables.
    std::vector<RatFn> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(RatFn::variable(ring, i));
    Ring xw = make_ring(numbered("v", n));
    std::vector<RatFn> xwit;
    for (std::size_t i = 0; i < n; ++i) xwit.push_back(RatFn::variable(xw, i));
    AlgebraSpan xspan(*ctx.eng, xs, xwit, xw);
    rw.top_degree_over_base = xspan.dim();

    // Ambient primitive element: small integer combination of the variables.
    std::vector<std::string> tnames = numbered("t", rw.transc_basis.size());
    CoeffEnumerator en(n);
    bool found = false;
    for (unsigned tries = 0; tries < 4096 && !found; ++tries) {
        std::vector<long> c = en.next();
        RatFn alpha = RatFn::zero(ring);
        for (std::size_t i = 0; i < n; ++i)
            if (c[i] != 0) alpha += RatFn::constant(ring, Rational(c[i])) * RatFn::variable(ring, i);
        if (alpha.is_constant()) continue;
        MinPoly mp = minimal_polynomial_over_basis(rw.transc_basis, alpha, tnames);
        if (mp.degree() != rw.top_degree_over_base) continue;
        rw.ambient_primitive = std::move(alpha);
        rw.p_alpha_base = std::move(mp);
        found = true;
    }
    if (!found) throw InternalError("rewrite_to_simple: no primitive element certified");

    rw.p_alpha = minimal_polynomial(rw.ambient_primitive, F);
    if (rw.p_alpha.degree() * d_beta != rw.top_degree_over_base)
        throw InternalError("rewrite_to_simple: tower degree mismatch");
    return ctx;
}

}  // namespace

RatFn RewriteResult::back_substitute(const ExtElement& e) const {
    const Ring& ring = ambient_primitive.ring();
    RatFn acc = RatFn::zero(ring);
    for (std::size_t j = e.coeffs.size(); j-- > 0;) {
        acc = acc * ambient_primitive;
        if (!e.coeffs[j].is_zero()) acc += e.coeffs[j].substitute(transc_basis);
    }
    return acc;
}

RewriteResult rewrite_to_simple(const FieldPresentation& F) { return rewrite_ctx(F).rw; }

PipelineResult algebraic_intermediate_fields(const FieldPresentation& F, std::size_t cap) {
    RewriteContext ctx = rewrite_ctx(F);
    const RewriteResult& rw = ctx.rw;
    const Ring& ring = F.ring;
    std::size_t n = ring->vars.size();

    AlgExtension ext(rw.p_alpha_base.coeff_ring, rw.p_alpha_base.coeffs);
    PowerBasisSolver solver(*ctx.eng, rw.ambient_primitive, rw.top_degree_over_base);

    std::vector<ExtElement> bottom;
    for (const auto& a : ctx.algebraics) {
        ExtElement e = ext_zero(ext);
        std::vector<RatFn> coords = solver.solve(a);
        for (std::size_t j = 0; j < coords.size(); ++j) e.coeffs[j] = coords[j];
        bottom.push_back(std::move(e));
    }

    SubfieldSearchResult search = find_intermediate_fields(ext, bottom, cap);

    PipelineResult out;
    out.warnings = search.warnings;
    TagSystem bottom_ts{F};

    for (const auto& L : search.fields) {
        std::vector<RatFn> gens;
        for (const auto& t : rw.transc_basis) gens.push_back(t);
        for (const auto& a : ctx.algebraics) gens.push_back(a);
        for (const auto& g : L.generators) {
            RatFn gx = normalize_generator(rw.back_substitute(g));
            if (gx.is_constant()) continue;
            gens.push_back(std::move(gx));
        }
        // Prune generators that the remaining ones already produce.
        for (std::size_t i = 0; i < gens.size() && gens.size() > 1;) {
            std::vector<RatFn> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            FieldPresentation rest{ring, others};
            if (is_member(gens[i], rest).member)
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
            else
                ++i;
        }

        FieldPresentation lp{ring, gens};
        TagSystem lts{lp};
        // Bottom generators must all land inside the candidate field.
        bool bottom_inside = true;
        for (const auto& f : F.gens) bottom_inside = bottom_inside && lts.is_member(f).member;
        if (!bottom_inside) throw InternalError("pipeline: candidate lost the bottom field");
        // Strictly above the bottom field.
        bool strict_above = false;
        for (const auto& g : gens) strict_above = strict_above || !bottom_ts.is_member(g).member;
        if (!strict_above) continue;
        // Strictly below Q(x).
        bool strict_below = false;
        for (std::size_t i = 0; i < n; ++i)
            strict_below = strict_below || !lts.is_member(RatFn::variable(ring, i)).member;
        if (!strict_below) continue;

        SubfieldAnswer ans;
        ans.generators_x = std::move(gens);
        ans.extension_degree_over_bottom = L.degree_over_bottom;
        out.fields.push_back(std::move(ans));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Luroth closure and univariate decomposition
// ---------------------------------------------------------------------------

namespace {

struct NearSeparated {
    Ring doubled;                        // x vars then X copies
    std::vector<std::size_t> fwd;        // ambient var i -> i
    std::vector<std::size_t> copy;       // ambient var i -> n + i
    MultiPoly phi;
};

NearSeparated near_separated(const RatFn& f) {
    const Ring& ring = f.ring();
    std::size_t n = ring->vars.size();
    std::vector<std::string> names = ring->vars;
    for (const auto& v : ring->vars) names.push_back("@" + v);
    NearSeparated ns;
    ns.doubled = make_ring(std::move(names));
    ns.fwd.resize(n);
    ns.copy.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        ns.fwd[i] = i;
        ns.copy[i] = n + i;
    }
    MultiPoly nx = f.num().map_vars(ns.doubled, ns.fwd);
    MultiPoly dx = f.den().map_vars(ns.doubled, ns.fwd);
    MultiPoly nX = f.num().map_vars(ns.doubled, ns.copy);
    MultiPoly dX = f.den().map_vars(ns.doubled, ns.copy);
    ns.phi = nx * dX - nX * dx;
    return ns;
}

bool vanishes_on_diagonal(const MultiPoly& p, const NearSeparated& ns, const Ring& ambient) {
    std::size_t n = ambient->vars.size();
    std::vector<std::size_t> collapse(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        collapse[i] = i;
        collapse[n + i] = i;
    }
    return p.map_vars(ambient, collapse).is_zero();
}

// Candidate inner functions from the coefficients of a factor with respect
// to the copied variables: ratios of pairwise independent coefficients.
std::vector<RatFn> extract_candidates(const MultiPoly& p, const NearSeparated& ns,
                                      const Ring& ambient) {
    std::size_t n = ambient->vars.size();
    // Group by the exponent pattern of the copied variables.
    std::map<std::vector<unsigned>, std::vector<MultiPoly::Term>> groups;
    for (const auto& t : p.terms()) {
        std::vector<unsigned> key(n);
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) {
            key[i] = t.m[n + i];
            m.at(i) = t.m[i];
        }
        groups[key].push_back({std::move(m), t.c});
    }
    std::vector<MultiPoly> coeffs;
    for (auto& [key, terms] : groups) {
        MultiPoly c = MultiPoly::from_terms(ambient, std::move(terms));
        if (!c.is_zero()) coeffs.push_back(std::move(c));
    }
    auto proportional = [](const MultiPoly& a, const MultiPoly& b) {
        if (a.is_zero() || b.is_zero()) return true;
        if (!(a.leading_monomial() == b.leading_monomial())) return false;
        return a.scale(b.leading_coeff()) == b.scale(a.leading_coeff());
    };
    std::vector<RatFn> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = i + 1; j < coeffs.size(); ++j) {
            if (proportional(coeffs[i], coeffs[j])) continue;
            out.push_back(RatFn(coeffs[j], coeffs[i]));
        }
    return out;
}

}  // namespace

RatFn luroth_closure(const FieldPresentation& F) {
    if (transcendence_degree(F) != 1) throw MathError("luroth_closure: transcendence degree must be 1");
    const Ring& ring = F.ring;
    if (ring->vars.size() == 1) return RatFn::variable(ring, 0);  // closure is Q(x) itself

    RatFn g = F.gens[0];
    for (unsigned iter = 0; iter < 32; ++iter) {
        NearSeparated ns = near_separated(g);
        auto fac = factor_multivariate_q(ns.phi);
        std::vector<RatFn> candidates;
        for (const auto& [p, mult] : fac.factors) {
            (void)mult;
            if (!vanishes_on_diagonal(p, ns, ring)) continue;
            auto cs = extract_candidates(p, ns, ring);
            candidates.insert(candidates.end(), cs.begin(), cs.end());
        }
        std::optional<RatFn> best;
        std::optional<FieldPresentation> best_field;
        for (const auto& h : candidates) {
            if (h.is_constant()) continue;
            FieldPresentation hf{ring, {h}};
            if (!is_member(g, hf).member) continue;
            if (!best) {
                best = h;
                best_field = hf;
                continue;
            }
            // Keep the larger field.
            if (field_contains(*best_field, TagSystem{hf}) && !field_equal(*best_field, hf)) {
                best = h;
                best_field = hf;
            }
        }
        if (!best) throw InternalError("luroth_closure: no diagonal candidate validated");
        if (field_equal(FieldPresentation{ring, {g}}, *best_field)) {
            g = *best;  // fixpoint: g admits no further decomposition
            break;
        }
        g = *best;
    }

    // Closure must contain every generator and stay algebraic over F.
    FieldPresentation gf{ring, {g}};
    TagSystem gts{gf};
    for (const auto& f : F.gens)
        if (!gts.is_member(f).member)
            throw InternalError("luroth_closure: generator escaped the closure");
    (void)minimal_polynomial(g, F);  // throws if transcendental
    return normalize_generator(g);
}

std::vector<Decomposition> decompose_univariate(const RatFn& f) {
    if (f.is_constant()) throw MathError("decompose_univariate: constant input");
    const Ring& ring = f.ring();
    std::size_t var = ring->vars.size();
    for (std::size_t i = 0; i < ring->vars.size(); ++i)
        if (f.num().degree_in(i) > 0 || f.den().degree_in(i) > 0) {
            if (var != ring->vars.size()) throw MathError("decompose_univariate: not univariate");
            var = i;
        }
    unsigned N = f.degree();

    NearSeparated ns = near_separated(f);
    auto fac = factor_multivariate_q(ns.phi);
    std::ptrdiff_t diag = -1;
    for (std::size_t i = 0; i < fac.factors.size(); ++i)
        if (vanishes_on_diagonal(fac.factors[i].first, ns, ring)) {
            if (diag >= 0) throw InternalError("decompose_univariate: several diagonal factors");
            diag = static_cast<std::ptrdiff_t>(i);
        }
    if (diag < 0 || fac.factors[static_cast<std::size_t>(diag)].second != 1)
        throw InternalError("decompose_univariate: diagonal factor missing");

    std::vector<std::pair<MultiPoly, unsigned>> rest;
    for (std::size_t i = 0; i < fac.factors.size(); ++i)
        if (static_cast<std::ptrdiff_t>(i) != diag) rest.push_back(fac.factors[i]);

    Ring zring = make_ring({"z"});
    std::vector<Decomposition> out;
    std::vector<FieldPresentation> seen;

    std::vector<unsigned> expo(rest.size(), 0);
    while (true) {
        MultiPoly p = fac.factors[static_cast<std::size_t>(diag)].first;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (expo[i]) p = p * rest[i].first.pow(expo[i]);
        for (const auto& h0 : extract_candidates(p, ns, ring)) {
            RatFn h = normalize_generator(h0);
            if (h.is_constant()) continue;
            unsigned dh = h.degree();
            if (dh < 2 || dh >= N) continue;
            FieldPresentation hf{ring, {h}};
            TagSystem ts{hf};
            auto mr = ts.is_member(f);
            if (!mr.member) continue;
            bool dup = false;
            for (const auto& s : seen)
                if (field_equal(s, hf)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            seen.push_back(hf);
            RatFn outer = mr.witness->expr.substitute({RatFn::variable(zring, 0)});
            out.push_back({std::move(outer), h});
            break;  // one representative per subset
        }
        // next multiplicity vector
        std::size_t i = 0;
        for (; i < rest.size(); ++i) {
            if (expo[i] < rest[i].second) {
                ++expo[i];
                break;
            }
            expo[i] = 0;
        }
        if (i == rest.size()) break;
    }

    std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
        if (a.inner.degree() != b.inner.degree()) return a.inner.degree() < b.inner.degree();
        return RatFn::compare(a.inner, b.inner) < 0;
    });
    return out;
}

}  // namespace unirat
