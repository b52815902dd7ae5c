#ifndef INSEP_LINALG_HPP
#define INSEP_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "insep/ratfunc.hpp"

namespace insep {

// Sparse vector over the rational function field: (column, value) pairs with
// strictly increasing columns and nonzero values.
using SparseRow = std::vector<std::pair<std::uint32_t, RatFunc>>;

SparseRow row_add_scaled(const SparseRow& a, const RatFunc& c, const SparseRow& b);  // a + c*b
SparseRow row_scaled(const SparseRow& r, const RatFunc& c);
RatFunc row_get(const SparseRow& r, std::uint32_t col, std::uint32_t p, std::uint32_t nvars);
SparseRow dense_to_sparse(const std::vector<RatFunc>& v);
std::vector<RatFunc> sparse_to_dense(const SparseRow& r, std::uint32_t n, std::uint32_t p,
                                     std::uint32_t nvars);

struct InsertResult {
    bool added = false;
    SparseRow stored;                    // the new basis row as stored (empty when !added)
    std::optional<SparseRow> relation;   // tracking only: null combination over inserted rows
};

// Row space kept in fully reduced row echelon form, so equal spaces have
// identical row lists.  With tracking enabled, every stored row remembers its
// expression over the originally inserted rows, dependent inserts report the
// linear relation they satisfy, and members can be expressed over the
// original insertions.
class RowSpace {
public:
    RowSpace(std::uint32_t p, std::uint32_t nvars, std::uint32_t ncols, bool track = false);

    InsertResult insert(const SparseRow& r);

    std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }
    std::uint32_t ncols() const { return ncols_; }
    std::uint32_t inserted_count() const { return ninserted_; }
    std::uint32_t prime() const { return p_; }
    std::uint32_t ambient_nvars() const { return nv_; }
    const std::vector<SparseRow>& rows() const { return rows_; }
    std::vector<std::uint32_t> pivot_cols() const;

    SparseRow reduce(const SparseRow& r) const;
    bool contains(const SparseRow& r) const { return reduce(r).empty(); }
    // Coefficients over the ORIGINAL inserted rows (requires tracking).
    std::optional<std::vector<RatFunc>> express(const SparseRow& r) const;
    bool same_space(const RowSpace& o) const;

private:
    std::uint32_t p_, nv_, ncols_, ninserted_ = 0;
    bool track_;
    std::vector<SparseRow> rows_;    // pivot columns strictly increasing
    std::vector<SparseRow> combos_;  // parallel to rows_ when tracking
};

// Basis of the intersection of the two row spans (Zassenhaus).
std::vector<SparseRow> intersect_spaces(const std::vector<SparseRow>& a,
                                        const std::vector<SparseRow>& b, std::uint32_t ncols,
                                        std::uint32_t p, std::uint32_t nvars);

// Dense matrices for the small presentation-level computations.
using DVec = std::vector<RatFunc>;
using DMat = std::vector<DVec>;

DMat dmat_zero(std::size_t rows, std::size_t cols, std::uint32_t p, std::uint32_t nvars);
DMat dmat_identity(std::size_t n, std::uint32_t p, std::uint32_t nvars);
DMat dmat_mul(const DMat& a, const DMat& b);
DVec vec_mat(const DVec& v, const DMat& m);  // row vector times matrix
bool dmat_is_zero(const DMat& a);
std::uint32_t dmat_rank(const DMat& a, std::uint32_t ncols, std::uint32_t p, std::uint32_t nvars);
// Rows v with v*A = 0.
std::vector<DVec> dmat_left_nullspace(const DMat& a, std::uint32_t ncols, std::uint32_t p,
                                      std::uint32_t nvars);
// Vectors v with A*v = 0.
std::vector<DVec> dmat_right_nullspace(const DMat& a, std::uint32_t ncols, std::uint32_t p,
                                       std::uint32_t nvars);

}  // namespace insep

#endif
