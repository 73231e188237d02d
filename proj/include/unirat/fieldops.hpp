#ifndef UNIRAT_FIELDOPS_HPP
#define UNIRAT_FIELDOPS_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "unirat/groebner.hpp"
#include "unirat/linalg.hpp"
#include "unirat/ratfn.hpp"

namespace unirat {

/// A unirational field Q(f_1,...,f_m) inside Q(x_1,...,x_n).
struct FieldPresentation {
    Ring ring;                // ambient x-ring
    std::vector<RatFn> gens;  // canonical, constants dropped

    FieldPresentation(Ring r, std::vector<RatFn> generators);
};

struct MembershipWitness {
    Ring tag_ring;  // y_1..y_m
    RatFn expr;     // substituting y_i -> f_i reproduces the query exactly
};

struct MemberResult {
    bool member = false;
    std::optional<MembershipWitness> witness;
};

/// Monic univariate polynomial in z whose coefficients are rational functions
/// of tag variables.
struct MinPoly {
    Ring coeff_ring;
    std::vector<RatFn> coeffs;  // ascending; back() == 1

    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    /// Evaluate at tag values and a z value inside the ambient field.
    RatFn eval(const std::vector<RatFn>& tag_values, const RatFn& z) const;
};

namespace detail {

struct GrevLexKeyLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        unsigned da = 0, db = 0;
        for (unsigned x : a) da += x;
        for (unsigned x : b) db += x;
        if (da != db) return da < db;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

}  // namespace detail

/// Normal-form engine over the coefficient field Q(t_1..t_k) for a fixed
/// algebraically independent basis T of rational functions: Groebner basis of
/// the graph ideal of T (with denominator inverter w) under the block order
/// {x,w} > {t}, which is also a basis over Q(t)[x,w]. Gives every element of
/// the localization a canonical Q(t)-linear normal form, the substrate for
/// membership, degrees, and representation solves.
class SpanEngine {
public:
    using Key = std::vector<unsigned>;  // exponents over (x_1..x_n, w)
    using FVec = std::map<Key, RatFn, detail::GrevLexKeyLess>;

    SpanEngine(Ring ambient, std::vector<RatFn> basis, const std::vector<MultiPoly>& extra_dens);

    const Ring& ambient() const { return ambient_; }
    const Ring& tag_ring() const { return tring_; }  // t_1..t_k
    const std::vector<RatFn>& basis() const { return basis_; }
    const GroebnerBasis& tag_basis() const { return gb_; }

    FVec one() const;
    /// Canonical image of a polynomial in the ambient variables.
    FVec img_poly(const MultiPoly& p) const;
    /// Canonical image of h; den(h) must divide a power of the inverted set.
    FVec img(const RatFn& h) const;
    FVec mul_nf(const FVec& a, const FVec& b) const;

private:
    struct GBElem {
        Key lead;
        std::vector<std::pair<Key, RatFn>> terms;  // descending, first is lead
    };

    FVec reduce(FVec v) const;
    FVec to_fvec(const MultiPoly& big) const;

    Ring ambient_, big_, tring_;
    std::vector<RatFn> basis_;
    MultiPoly delta_;  // ambient ring
    GroebnerBasis gb_;
    std::vector<GBElem> gbf_;
    std::size_t n_ = 0, k_ = 0;
};

/// Finite-dimensional Q(t)-algebra generated by images inside a SpanEngine
/// quotient; tracks a witness expression (in a caller-chosen tag ring) for
/// every basis vector.
class AlgebraSpan {
public:
    AlgebraSpan(const SpanEngine& eng, const std::vector<RatFn>& generators,
                const std::vector<RatFn>& generator_witnesses, Ring witness_ring);

    unsigned dim() const { return static_cast<unsigned>(vectors_.size()); }
    const std::vector<SpanEngine::FVec>& vectors() const { return vectors_; }
    const std::vector<RatFn>& witnesses() const { return witnesses_; }

    /// Decide num/den = sum c_e * basis_e; returns the witness combination
    /// with coefficients mapped through tag_to_witness.
    std::optional<RatFn> solve(const MultiPoly& num, const MultiPoly& den,
                               const std::vector<RatFn>& tag_to_witness) const;

private:
    const SpanEngine& eng_;
    Ring witness_ring_;
    std::vector<SpanEngine::FVec> vectors_;
    std::vector<RatFn> witnesses_;
};

/// Cached query system for one field presentation: the full tag ideal
/// {num_i - y_i den_i} + {w*prod(den_i) - 1} with its reduced basis, plus the
/// derived transcendence-basis engine and generator span used by queries.
class TagSystem {
public:
    explicit TagSystem(FieldPresentation F);

    const FieldPresentation& field() const { return field_; }
    const Ideal& ideal() const { return *ideal_; }
    const GroebnerBasis& basis() const { return basis_; }
    const Ring& tag_ring() const { return yring_; }
    const std::vector<std::size_t>& basis_indices() const { return basis_idx_; }
    const SpanEngine& engine() const { return *engine_; }
    /// [F : Q(T)] for the selected transcendence basis T.
    unsigned degree_over_basis() const { return span_->dim(); }

    MemberResult is_member(const RatFn& g) const;

private:
    FieldPresentation field_;
    Ring yring_;
    std::unique_ptr<Ideal> ideal_;
    GroebnerBasis basis_;
    std::vector<std::size_t> basis_idx_;
    std::unique_ptr<SpanEngine> engine_;
    std::unique_ptr<AlgebraSpan> span_;
    std::vector<RatFn> tag_to_y_;  // t_j -> y_(basis index)
};

MemberResult is_member(const RatFn& f, const FieldPresentation& F);
unsigned transcendence_degree(const FieldPresentation& F);
/// Greedy by index: keep f_i iff it increases the Jacobian rank (1-based in
/// the CLI; 0-based here).
std::vector<std::size_t> select_transcendence_basis(const FieldPresentation& F);

/// Monic minimal polynomial of g over F, coefficients as rational functions
/// of the tags y_1..y_m; throws MathError("transcendental element") when g is
/// not algebraic over F.
MinPoly minimal_polynomial(const RatFn& g, const FieldPresentation& F);

/// Minimal polynomial of g over the purely transcendental field generated by
/// an independent basis; coefficient ring uses the given tag names.
MinPoly minimal_polynomial_over_basis(const std::vector<RatFn>& basis, const RatFn& g,
                                      const std::vector<std::string>& tag_names);

/// beta = small integer combination of the algebraics with
/// E(beta) = E(algebraics), certified by the degree of its minimal
/// polynomial; returns beta and that polynomial (tags t_1..t_k).
std::pair<RatFn, MinPoly> primitive_element(const std::vector<RatFn>& e_basis,
                                            const std::vector<RatFn>& algebraics);

/// Every generator of F is a member of G (i.e. F subset of G).
bool field_contains(const FieldPresentation& F, const FieldPresentation& G);
bool field_contains(const FieldPresentation& F, const TagSystem& G);
bool field_equal(const FieldPresentation& F, const FieldPresentation& G);

}  // namespace unirat

#endif
