#include "insep/linalg.hpp"

#include <algorithm>

namespace insep {

SparseRow row_add_scaled(const SparseRow& a, const RatFunc& c, const SparseRow& b) {
    if (c.is_zero() || b.empty()) return a;
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            RatFunc v = c * b[j].second;
            if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            RatFunc v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

SparseRow row_scaled(const SparseRow& r, const RatFunc& c) {
    if (c.is_zero()) return {};
    SparseRow out;
    out.reserve(r.size());
    for (const auto& [col, v] : r) out.emplace_back(col, c * v);
    return out;
}

RatFunc row_get(const SparseRow& r, std::uint32_t col, std::uint32_t p, std::uint32_t nvars) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, std::uint32_t c) { return e.first < c; });
    if (it != r.end() && it->first == col) return it->second;
    return RatFunc(p, nvars);
}

SparseRow dense_to_sparse(const std::vector<RatFunc>& v) {
    SparseRow r;
    for (std::uint32_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) r.emplace_back(j, v[j]);
    return r;
}

std::vector<RatFunc> sparse_to_dense(const SparseRow& r, std::uint32_t n, std::uint32_t p,
                                     std::uint32_t nvars) {
    std::vector<RatFunc> v(n, RatFunc(p, nvars));
    for (const auto& [col, val] : r) v.at(col) = val;
    return v;
}

RowSpace::RowSpace(std::uint32_t p, std::uint32_t nvars, std::uint32_t ncols, bool track)
    : p_(p), nv_(nvars), ncols_(ncols), track_(track) {}

InsertResult RowSpace::insert(const SparseRow& r) {
    SparseRow cur = r;
    SparseRow combo;
    std::uint32_t my_index = ninserted_++;
    if (track_) combo.emplace_back(my_index, RatFunc::constant(p_, nv_, 1));

    // Reduce against each stored row in pivot order.
    for (std::size_t i = 0; i < rows_.size() && !cur.empty(); ++i) {
        std::uint32_t piv = rows_[i].front().first;
        if (cur.front().first > piv) continue;
        RatFunc c = row_get(cur, piv, p_, nv_);
        if (c.is_zero()) continue;
        RatFunc nc = -c;
        cur = row_add_scaled(cur, nc, rows_[i]);
        if (track_) combo = row_add_scaled(combo, nc, combos_[i]);
    }

    InsertResult res;
    if (cur.empty()) {
        if (track_) res.relation = std::move(combo);
        return res;
    }

    // Normalize the pivot entry to 1.
    RatFunc inv = cur.front().second.inverse();
    if (!inv.is_one()) {
        cur = row_scaled(cur, inv);
        if (track_) combo = row_scaled(combo, inv);
    }

    // Back-eliminate the new pivot from the stored rows.
    std::uint32_t piv = cur.front().first;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        RatFunc c = row_get(rows_[i], piv, p_, nv_);
        if (c.is_zero()) continue;
        RatFunc nc = -c;
        rows_[i] = row_add_scaled(rows_[i], nc, cur);
        if (track_) combos_[i] = row_add_scaled(combos_[i], nc, combo);
    }

    auto pos = std::lower_bound(rows_.begin(), rows_.end(), piv,
                                [](const SparseRow& row, std::uint32_t c) {
                                    return row.front().first < c;
                                });
    std::size_t idx = static_cast<std::size_t>(pos - rows_.begin());
    rows_.insert(pos, cur);
    if (track_) combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(idx), combo);

    res.added = true;
    res.stored = std::move(cur);
    return res;
}

std::vector<std::uint32_t> RowSpace::pivot_cols() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row.front().first);
    return out;
}

SparseRow RowSpace::reduce(const SparseRow& r) const {
    SparseRow cur = r;
    for (std::size_t i = 0; i < rows_.size() && !cur.empty(); ++i) {
        std::uint32_t piv = rows_[i].front().first;
        if (cur.front().first > piv) continue;
        RatFunc c = row_get(cur, piv, p_, nv_);
        if (!c.is_zero()) cur = row_add_scaled(cur, -c, rows_[i]);
    }
    return cur;
}

std::optional<std::vector<RatFunc>> RowSpace::express(const SparseRow& r) const {
    if (!track_) throw Error("express requires a tracked row space");
    SparseRow cur = r;
    SparseRow acc;  // coefficients against original insertions
    for (std::size_t i = 0; i < rows_.size() && !cur.empty(); ++i) {
        std::uint32_t piv = rows_[i].front().first;
        if (cur.front().first > piv) continue;
        RatFunc c = row_get(cur, piv, p_, nv_);
        if (c.is_zero()) continue;
        cur = row_add_scaled(cur, -c, rows_[i]);
        acc = row_add_scaled(acc, c, combos_[i]);
    }
    if (!cur.empty()) return std::nullopt;
    return sparse_to_dense(acc, ninserted_, p_, nv_);
}

bool RowSpace::same_space(const RowSpace& o) const {
    return ncols_ == o.ncols_ && rows_ == o.rows_;
}

std::vector<SparseRow> intersect_spaces(const std::vector<SparseRow>& a,
                                        const std::vector<SparseRow>& b, std::uint32_t ncols,
                                        std::uint32_t p, std::uint32_t nvars) {
    // Zassenhaus: rows (u|u) for the first space, (v|0) for the second; in
    // reduced form the rows with pivot in the right half carry a basis of the
    // intersection there.
    RowSpace z(p, nvars, 2 * ncols);
    for (const auto& u : a) {
        SparseRow w = u;
        for (const auto& [col, val] : u) w.emplace_back(col + ncols, val);
        z.insert(w);
    }
    for (const auto& v : b) z.insert(v);
    std::vector<SparseRow> out;
    for (const auto& row : z.rows()) {
        if (row.front().first < ncols) continue;
        SparseRow r;
        for (const auto& [col, val] : row) r.emplace_back(col - ncols, val);
        out.push_back(std::move(r));
    }
    return out;
}

DMat dmat_zero(std::size_t rows, std::size_t cols, std::uint32_t p, std::uint32_t nvars) {
    return DMat(rows, DVec(cols, RatFunc(p, nvars)));
}

DMat dmat_identity(std::size_t n, std::uint32_t p, std::uint32_t nvars) {
    DMat m = dmat_zero(n, n, p, nvars);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = RatFunc::constant(p, nvars, 1);
    return m;
}

DMat dmat_mul(const DMat& a, const DMat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    std::uint32_t p = b[0][0].prime(), nv = b[0][0].nvars();
    DMat out = dmat_zero(n, m, p, nv);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw DimensionMismatch("matrix product shape");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b[t][j].is_zero()) continue;
                out[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    return out;
}

DVec vec_mat(const DVec& v, const DMat& m) {
    if (m.empty()) return {};
    if (v.size() != m.size()) throw DimensionMismatch("vector-matrix shape");
    std::size_t cols = m[0].size();
    std::uint32_t p = m[0][0].prime(), nv = m[0][0].nvars();
    DVec out(cols, RatFunc(p, nv));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols; ++j)
            if (!m[i][j].is_zero()) out[j] += v[i] * m[i][j];
    }
    return out;
}

bool dmat_is_zero(const DMat& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

std::uint32_t dmat_rank(const DMat& a, std::uint32_t ncols, std::uint32_t p, std::uint32_t nvars) {
    RowSpace s(p, nvars, ncols);
    for (const auto& row : a) s.insert(dense_to_sparse(row));
    return s.rank();
}

std::vector<DVec> dmat_left_nullspace(const DMat& a, std::uint32_t ncols, std::uint32_t p,
                                      std::uint32_t nvars) {
    RowSpace s(p, nvars, ncols, true);
    std::vector<DVec> out;
    for (const auto& row : a) {
        auto res = s.insert(dense_to_sparse(row));
        if (!res.added)
            out.push_back(sparse_to_dense(*res.relation, static_cast<std::uint32_t>(a.size()), p,
                                          nvars));
    }
    return out;
}

std::vector<DVec> dmat_right_nullspace(const DMat& a, std::uint32_t ncols, std::uint32_t p,
                                       std::uint32_t nvars) {
    // Relations among the columns of a.
    RowSpace s(p, nvars, static_cast<std::uint32_t>(a.size()), true);
    std::vector<DVec> out;
    for (std::uint32_t j = 0; j < ncols; ++j) {
        SparseRow col;
        for (std::uint32_t i = 0; i < a.size(); ++i)
            if (!a[i][j].is_zero()) col.emplace_back(i, a[i][j]);
        auto res = s.insert(col);
        if (!res.added) out.push_back(sparse_to_dense(*res.relation, ncols, p, nvars));
    }
    return out;
}

}  // namespace insep
