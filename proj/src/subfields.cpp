#include "unirat/subfields.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "unirat/linalg.hpp"

namespace unirat {

namespace {

bool ext_less(const ExtElement& a, const ExtElement& b) { return ext_compare(a, b) < 0; }

ExtElement apply_map(const EmbeddingMap& m, const ExtElement& e, const AlgExtension& ext) {
    std::vector<ExtElement> cs;
    cs.reserve(e.coeffs.size());
    for (const auto& c : e.coeffs) cs.push_back(ext_from_base(c, ext));
    return ext_eval_poly(cs, m.image, ext);
}

ExtElement minpoly_at(const ExtElement& e, const AlgExtension& ext) {
    std::vector<ExtElement> cs;
    cs.reserve(ext.min_poly().size());
    for (const auto& c : ext.min_poly()) cs.push_back(ext_from_base(c, ext));
    return ext_eval_poly(cs, e, ext);
}

// Q(t)-subspace of E[alpha] spanned by the algebra generated by `gens`.
class ExtSpan {
public:
    ExtSpan(const AlgExtension& ext, const std::vector<ExtElement>& gens)
        : ext_(ext), ech_(ext.base_ring()) {
        basis_.push_back(ext_one(ext));
        ech_.insert(to_vec(basis_[0]));
        for (std::size_t qi = 0; qi < basis_.size(); ++qi) {
            for (const auto& g : gens) {
                ExtElement cand = ext_mul(basis_[qi], g, ext_);
                if (!ech_.insert(to_vec(cand))) continue;
                basis_.push_back(std::move(cand));
                if (basis_.size() > ext_.degree())
                    throw InternalError("ExtSpan: dimension exceeds the extension degree");
            }
        }
    }

    unsigned dim() const { return static_cast<unsigned>(basis_.size()); }

    bool contains(const ExtElement& e) const { return ech_.contains(to_vec(e)); }

    bool contains_all(const std::vector<ExtElement>& es) const {
        for (const auto& e : es)
            if (!contains(e)) return false;
        return true;
    }

    const std::vector<ExtElement>& basis() const { return basis_; }

private:
    static std::map<std::size_t, RatFn> to_vec(const ExtElement& e) {
        std::map<std::size_t, RatFn> v;
        for (std::size_t i = 0; i < e.coeffs.size(); ++i)
            if (!e.coeffs[i].is_zero()) v.emplace(i, e.coeffs[i]);
        return v;
    }

    const AlgExtension& ext_;
    std::vector<ExtElement> basis_;
    Echelon<std::size_t> ech_;
};

}  // namespace

std::vector<EmbeddingMap> embeddings_from_factors(const std::vector<ExtPoly>& factors,
                                                  const AlgExtension& ext) {
    std::vector<EmbeddingMap> maps;
    for (const auto& f : factors) {
        if (extpoly::deg(f) != 1) continue;
        // Monic linear factor z + c: root is -c.
        ExtElement root = ext_neg(f.coeffs[0], ext);
        if (!ext_is_zero(minpoly_at(root, ext)))
            throw InternalError("embeddings_from_factors: image is not a root");
        maps.push_back({std::move(root)});
    }
    std::sort(maps.begin(), maps.end(),
              [](const EmbeddingMap& a, const EmbeddingMap& b) { return ext_less(a.image, b.image); });
    bool has_id = false;
    for (const auto& m : maps)
        if (ext_compare(m.image, ext_alpha(ext)) == 0) has_id = true;
    if (!has_id) throw InternalError("embeddings_from_factors: identity map missing");
    return maps;
}

EmbeddingMap compose(const EmbeddingMap& a, const EmbeddingMap& b, const AlgExtension& ext) {
    // (a o b)(alpha) = a(b(alpha)) = b.image evaluated at a.image.
    return {apply_map(a, b.image, ext)};
}

EmbeddingGroup group_closure(const std::vector<EmbeddingMap>& maps, const AlgExtension& ext) {
    std::vector<ExtElement> elems;
    auto insert_elem = [&](const ExtElement& e) {
        for (const auto& x : elems)
            if (ext_compare(x, e) == 0) return false;
        elems.push_back(e);
        return true;
    };
    insert_elem(ext_alpha(ext));
    for (const auto& m : maps) insert_elem(m.image);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ExtElement> snapshot = elems;
        for (const auto& a : snapshot)
            for (const auto& b : snapshot) {
                ExtElement c = apply_map({a}, b, ext);
                if (insert_elem(c)) grew = true;
                if (elems.size() > ext.degree())
                    throw InternalError("group_closure: closure exceeds the extension degree");
            }
    }
    std::sort(elems.begin(), elems.end(), ext_less);
    EmbeddingGroup g;
    for (auto& e : elems) g.elements.push_back({std::move(e)});
    return g;
}

namespace {

bool same_group(const EmbeddingGroup& a, const EmbeddingGroup& b) {
    if (a.elements.size() != b.elements.size()) return false;
    for (std::size_t i = 0; i < a.elements.size(); ++i)
        if (ext_compare(a.elements[i].image, b.elements[i].image) != 0) return false;
    return true;
}

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<EmbeddingGroup> minimal_subgroups(const EmbeddingGroup& g, const AlgExtension& ext) {
    std::vector<EmbeddingGroup> out;
    ExtElement id = ext_alpha(ext);
    for (const auto& m : g.elements) {
        if (ext_compare(m.image, id) == 0) continue;
        EmbeddingGroup h = group_closure({m}, ext);
        if (!is_prime(h.order())) continue;
        bool seen = false;
        for (const auto& o : out) seen = seen || same_group(o, h);
        if (!seen) out.push_back(std::move(h));
    }
    return out;
}

std::vector<EmbeddingGroup> all_subgroups(const EmbeddingGroup& g, const AlgExtension& ext) {
    std::vector<EmbeddingMap> nonid;
    ExtElement id = ext_alpha(ext);
    for (const auto& m : g.elements)
        if (ext_compare(m.image, id) != 0) nonid.push_back(m);
    if (nonid.size() > 20) throw InternalError("all_subgroups: group unexpectedly large");
    std::vector<EmbeddingGroup> out;
    for (std::size_t mask = 0; mask < (1u << nonid.size()); ++mask) {
        std::vector<EmbeddingMap> seed;
        for (std::size_t i = 0; i < nonid.size(); ++i)
            if (mask & (1u << i)) seed.push_back(nonid[i]);
        EmbeddingGroup h = group_closure(seed, ext);
        bool seen = false;
        for (const auto& o : out) seen = seen || same_group(o, h);
        if (!seen) out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const EmbeddingGroup& a, const EmbeddingGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        for (std::size_t i = 0; i < a.elements.size(); ++i) {
            int c = ext_compare(a.elements[i].image, b.elements[i].image);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

CandidateField fixed_field_candidate(const EmbeddingGroup& sub, const AlgExtension& ext) {
    if (sub.order() < 2) throw InternalError("fixed_field_candidate: subgroup too small");
    ExtPoly h;
    h.coeffs = {ext_one(ext)};
    for (const auto& m : sub.elements) {
        ExtPoly lin;
        lin.coeffs = {ext_neg(m.image, ext), ext_one(ext)};
        h = extpoly::mul(h, lin, ext);
    }
    CandidateField c;
    c.provenance = CandidateField::Provenance::GroupResolvent;
    c.defining_data = "subgroup of order " + std::to_string(sub.order());
    for (std::size_t i = 0; i + 1 < h.coeffs.size(); ++i) c.coeff_generators.push_back(h.coeffs[i]);
    return c;
}

std::vector<CandidateField> block_candidates(const std::vector<ExtPoly>& factors,
                                             const AlgExtension& ext, unsigned bottom_degree,
                                             std::size_t cap, bool* cap_exceeded) {
    if (cap_exceeded) *cap_exceeded = false;
    unsigned D = ext.degree();
    // Locate the factor z - alpha.
    std::ptrdiff_t id_idx = -1;
    ExtElement alpha = ext_alpha(ext);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (extpoly::deg(factors[i]) != 1) continue;
        if (ext_compare(ext_neg(factors[i].coeffs[0], ext), alpha) == 0) {
            id_idx = static_cast<std::ptrdiff_t>(i);
            break;
        }
    }
    if (id_idx < 0) throw InternalError("block_candidates: factor z - alpha missing");
    std::vector<const ExtPoly*> rest;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (static_cast<std::ptrdiff_t>(i) != id_idx) rest.push_back(&factors[i]);

    // Order subsets by total degree, then by index pattern.
    if (rest.size() > 20) throw InternalError("block_candidates: too many factors");
    struct Subset {
        unsigned deg;
        std::size_t mask;
    };
    std::vector<Subset> subsets;
    for (std::size_t mask = 1; mask < (std::size_t(1) << rest.size()); ++mask) {
        unsigned d = 1;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (mask & (std::size_t(1) << i)) d += static_cast<unsigned>(extpoly::deg(*rest[i]));
        subsets.push_back({d, mask});
    }
    std::sort(subsets.begin(), subsets.end(), [](const Subset& a, const Subset& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.mask < b.mask;
    });

    std::vector<CandidateField> out;
    std::size_t examined = 0;
    ExtPoly zma;
    zma.coeffs = {ext_neg(alpha, ext), ext_one(ext)};
    for (const auto& s : subsets) {
        if (examined >= cap) {
            if (cap_exceeded) *cap_exceeded = true;
            break;
        }
        ++examined;
        unsigned d = s.deg;
        if (d <= 1 || d >= D || D % d != 0) continue;
        unsigned l_over_e = D / d;
        if (bottom_degree != 0 && l_over_e % bottom_degree != 0) continue;
        ExtPoly block = zma;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (s.mask & (std::size_t(1) << i)) block = extpoly::mul(block, *rest[i], ext);
        CandidateField c;
        c.provenance = CandidateField::Provenance::BlockProduct;
        c.defining_data = "block of degree " + std::to_string(d);
        for (std::size_t i = 0; i + 1 < block.coeffs.size(); ++i)
            c.coeff_generators.push_back(block.coeffs[i]);
        out.push_back(std::move(c));
    }
    return out;
}

SubfieldSearchResult find_intermediate_fields(const AlgExtension& ext,
                                              const std::vector<ExtElement>& bottom,
                                              std::size_t cap) {
    SubfieldSearchResult result;
    unsigned D = ext.degree();
    if (D == 1) return result;

    ExtPoly palpha = extpoly::from_base(ext.min_poly(), ext);
    std::vector<ExtPoly> factors = trager_factor(palpha, ext);

    ExtSpan bottom_span(ext, bottom);
    unsigned d_f = bottom_span.dim();
    if (D % d_f != 0) throw InternalError("find_intermediate_fields: bottom degree does not divide");

    std::vector<CandidateField> candidates;
    {
        std::vector<EmbeddingMap> emb = embeddings_from_factors(factors, ext);
        EmbeddingGroup full = group_closure(emb, ext);
        for (const auto& sub : all_subgroups(full, ext)) {
            if (sub.order() < 2) continue;
            candidates.push_back(fixed_field_candidate(sub, ext));
        }
        bool cap_hit = false;
        auto blocks = block_candidates(factors, ext, d_f, cap, &cap_hit);
        if (cap_hit)
            result.warnings.push_back(
                "block subset cap reached; subfield list may be incomplete");
        candidates.insert(candidates.end(), blocks.begin(), blocks.end());
    }

    struct Entry {
        IntermediateField field;
        ExtSpan span;
    };
    std::vector<Entry> accepted;
    for (const auto& c : candidates) {
        std::vector<ExtElement> gens;
        for (const auto& g : c.coeff_generators)
            if (!ext_in_base(g)) gens.push_back(g);
        if (gens.empty()) continue;
        std::vector<ExtElement> all = bottom;
        all.insert(all.end(), gens.begin(), gens.end());
        ExtSpan span(ext, all);
        unsigned dim = span.dim();
        if (dim >= D || dim <= d_f) continue;  // not strictly between
        if (D % dim != 0) throw InternalError("find_intermediate_fields: tower degree violation");
        bool dup = false;
        for (const auto& e : accepted) {
            if (e.field.degree_over_base != dim) continue;
            if (e.span.contains_all(gens) && span.contains_all(e.field.generators)) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        IntermediateField f;
        f.generators = gens;
        f.degree_over_base = dim;
        f.degree_over_bottom = dim / d_f;
        accepted.push_back({std::move(f), std::move(span)});
    }

    std::sort(accepted.begin(), accepted.end(), [](const Entry& a, const Entry& b) {
        if (a.field.degree_over_bottom != b.field.degree_over_bottom)
            return a.field.degree_over_bottom < b.field.degree_over_bottom;
        const auto& ga = a.field.generators;
        const auto& gb = b.field.generators;
        if (ga.size() != gb.size()) return ga.size() < gb.size();
        for (std::size_t i = 0; i < ga.size(); ++i) {
            int c = ext_compare(ga[i], gb[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    for (auto& e : accepted) result.fields.push_back(std::move(e.field));
    return result;
}

}  // namespace unirat
