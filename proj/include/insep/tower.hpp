#ifndef INSEP_TOWER_HPP
#define INSEP_TOWER_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "insep/ambient.hpp"
#include "insep/prespoly.hpp"

namespace insep {

// A field K with A^(p^e) <= K <= A, represented by the row space of its
// coordinates over A^(p^e).  The row space is kept in reduced echelon form,
// so equal fields have identical representations.
class IntermediateField {
public:
    static IntermediateField closure(std::shared_ptr<const AmbientField> amb,
                                     std::vector<RatFunc> gens);
    static IntermediateField base_field(std::shared_ptr<const AmbientField> amb);
    static IntermediateField full_field(std::shared_ptr<const AmbientField> amb);
    static IntermediateField from_rows(std::shared_ptr<const AmbientField> amb,
                                       const std::vector<SparseRow>& rows, bool verify = false);

    const std::shared_ptr<const AmbientField>& ambient() const { return amb_; }
    const std::vector<RatFunc>& gens() const { return gens_; }
    std::uint32_t dim() const { return space_.rank(); }
    const RowSpace& space() const { return space_; }
    const std::vector<RatFunc>& basis_elements() const { return basis_; }

    bool contains(const RatFunc& f) const { return space_.contains(amb_->descend(f)); }
    bool contains_row(const SparseRow& r) const { return space_.contains(r); }
    bool subfield_of(const IntermediateField& o) const;
    bool same_field(const IntermediateField& o) const { return space_.same_space(o.space_); }

private:
    IntermediateField(std::shared_ptr<const AmbientField> amb, RowSpace space,
                      std::vector<RatFunc> gens);
    std::shared_ptr<const AmbientField> amb_;
    RowSpace space_;
    std::vector<RatFunc> gens_;
    std::vector<RatFunc> basis_;
};

// [big : small]; throws NotASubfield when small is not contained in big.
std::uint64_t degree_over(const IntermediateField& big, const IntermediateField& small);

// Least n >= 0 with big^(p^n) contained in small (assumes small <= big as the
// relevant tower use; always at most the ambient exponent e).
std::uint32_t tower_exponent(const IntermediateField& big, const IntermediateField& small);

IntermediateField intersect_fields(const IntermediateField& a, const IntermediateField& b);
IntermediateField compositum(const IntermediateField& a, const IntermediateField& b);
// Field generated over base by the p^i-th powers of src: base * src^(p^i).
IntermediateField power_compositum(const IntermediateField& base, const IntermediateField& src,
                                   std::uint32_t i);

struct DisjointnessResult {
    bool disjoint = true;
    // When not disjoint: elements of a, independent over the intersection,
    // with a nontrivial relation sum coefficients[j]*elements[j] = 0 whose
    // coefficients lie in b.
    std::vector<RatFunc> elements;
    std::vector<RatFunc> coefficients;
};

// Linear disjointness of a and b over their intersection, inside A.
DisjointnessResult linear_disjointness(const IntermediateField& a, const IntermediateField& b);

// One stage of a triangular presentation: u has minimal p-power exponent e_i
// over the previous stage field, and u^(p^(e_i)) equals tail evaluated at the
// earlier generators, with coefficients in the base.
struct Stage {
    RatFunc u;
    std::uint32_t ei = 0;
    std::uint32_t pe = 1;
    PresPoly tail;
};

// Triangular presentation of top = base(g_1, .., g_n): relations
// X_i^(p^(e_i)) = tail_i(X_1..X_(i-1)).  Generators already contained in the
// running stage field are dropped, preserving the basis property of the
// reduced monomials.
class Presentation {
public:
    Presentation(IntermediateField base, const std::vector<RatFunc>& gens);

    const IntermediateField& base() const { return base_; }
    const IntermediateField& top() const { return top_; }
    std::uint32_t ngens() const { return static_cast<std::uint32_t>(stages_.size()); }
    const std::vector<Stage>& stages() const { return stages_; }
    std::vector<RatFunc> gen_values() const;
    std::vector<Relation> relations() const;
    std::uint64_t degree() const;  // [top : base]

    // J[i][j] = d P_i / d X_j evaluated at the generators; strictly lower
    // triangular because P_i = X_i^(p^(e_i)) - tail_i(X_<i).
    const DMat& jacobian() const;

    // f as a reduced polynomial in the generators with base coefficients.
    // Throws NotInField when f lies outside top.  Thread-safe and memoized.
    PresPoly express(const RatFunc& f) const;

private:
    void append_columns(std::uint32_t stage_index);

    IntermediateField base_;
    IntermediateField top_;
    std::vector<Stage> stages_;
    std::vector<RatFunc> kappa_;                 // base field basis values
    std::vector<PresPoly::Expo> mono_expos_;     // reduced monomials, block order
    std::vector<SparseRow> mono_rows_;           // their coordinate rows
    std::vector<std::pair<std::uint32_t, std::uint32_t>> labels_;  // (monomial, kappa)
    RowSpace solver_;
    mutable DMat jac_;
    mutable bool jac_ready_ = false;
    mutable std::map<std::string, PresPoly> memo_;
    mutable std::mutex mutex_;
};

// The minimal number of generators of top over base together with one
// realizing generator set, found greedily by differential classes.
struct GeneratorSearch {
    std::vector<RatFunc> generators;
    std::uint32_t minimal_count = 0;
};
GeneratorSearch minimal_generators(const IntermediateField& top, const IntermediateField& base);

}  // namespace insep

#endif
