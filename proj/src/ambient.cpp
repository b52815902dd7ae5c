#include "insep/ambient.hpp"

#include <algorithm>

namespace insep {

namespace {
constexpr std::uint64_t kMaxAmbientDim = 1u << 17;
}

AmbientField::AmbientField(std::uint32_t p, std::uint32_t nvars, std::uint32_t e,
                           std::vector<std::string> names)
    : p_(p), n_(nvars), e_(e), names_(std::move(names)) {
    if (!fp::is_prime(p)) throw ConfigError("p must be prime");
    if (nvars == 0 || nvars > kMaxVars) throw ConfigError("between 1 and 4 variables required");
    if (e == 0) throw ConfigError("the Frobenius exponent e must be positive");
    q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > kMaxExp) throw ConfigError("p^e too large");
    }
    std::uint64_t dim = 1;
    for (std::uint32_t j = 0; j < nvars; ++j) {
        dim *= q_;
        if (dim > kMaxAmbientDim) throw ConfigError("ambient module dimension too large");
    }
    if (names_.empty()) {
        const char* defaults[] = {"x", "y", "z", "w"};
        for (std::uint32_t j = 0; j < nvars; ++j) names_.emplace_back(defaults[j]);
    }
    if (names_.size() != nvars) throw ConfigError("one name per variable required");

    basis_.reserve(dim);
    std::vector<std::uint32_t> a(nvars, 0);
    while (true) {
        Packed m = 0;
        for (std::uint32_t j = 0; j < nvars; ++j) m = packed_set(m, j, a[j]);
        basis_.push_back(m);
        std::uint32_t j = nvars;
        while (j > 0) {
            --j;
            if (++a[j] < q_) break;
            a[j] = 0;
            if (j == 0) goto done;
        }
        if (nvars == 0) break;
    }
done:
    // Total degree ascending; within a degree, earlier variables dominate
    // (descending packed order), giving 1, x, y, x^2, x*y, y^2, ...
    std::sort(basis_.begin(), basis_.end(), [](Packed l, Packed r) {
        std::uint32_t dl = packed_degree(l), dr = packed_degree(r);
        if (dl != dr) return dl < dr;
        return l > r;
    });
    for (std::uint32_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::uint32_t AmbientField::index_of(Packed a) const {
    auto it = index_.find(a);
    if (it == index_.end()) throw Error("exponent vector outside the basis range");
    return it->second;
}

RatFunc AmbientField::monomial_of(std::uint32_t idx) const {
    return RatFunc::monomial(p_, n_, basis_.at(idx));
}

SparseRow AmbientField::descend(const RatFunc& f) const {
    DescentMap d = frobenius_descent(f, e_);
    std::vector<std::pair<std::uint32_t, RatFunc>> entries;
    entries.reserve(d.size());
    for (auto& [a, c] : d) entries.emplace_back(index_of(a), std::move(c));
    std::sort(entries.begin(), entries.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return entries;
}

RatFunc AmbientField::reconstruct(const SparseRow& coords) const {
    RatFunc acc = zero();
    for (const auto& [idx, c] : coords)
        acc += c.pow_frobenius(e_) * monomial_of(idx);
    return acc;
}

SparseRow AmbientField::coord_mul(const SparseRow& a, const SparseRow& b) const {
    // (c^q x^A)(d^q x^B) = (c d x^t)^q x^r with A+B = q t + r componentwise.
    std::map<std::uint32_t, RatFunc> acc;
    for (const auto& [ia, ca] : a) {
        Packed A = basis_[ia];
        for (const auto& [ib, cb] : b) {
            Packed B = basis_[ib];
            Packed rem = 0, quo = 0;
            for (std::uint32_t j = 0; j < n_; ++j) {
                std::uint64_t s = static_cast<std::uint64_t>(packed_get(A, j)) + packed_get(B, j);
                rem = packed_set(rem, j, static_cast<std::uint32_t>(s % q_));
                quo = packed_set(quo, j, static_cast<std::uint32_t>(s / q_));
            }
            RatFunc v = ca * cb;
            if (quo != 0) v *= RatFunc::monomial(p_, n_, quo);
            auto [it, inserted] = acc.try_emplace(index_of(rem), v);
            if (!inserted) it->second += v;
        }
    }
    SparseRow out;
    for (auto& [idx, v] : acc)
        if (!v.is_zero()) out.emplace_back(idx, std::move(v));
    return out;
}

SparseRow AmbientField::coord_frobenius(const SparseRow& u, std::uint32_t k) const {
    // (c^q x^a)^(p^k) = (c^(p^k) x^t)^q x^r with a p^k = q t + r.
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < k; ++i) pk *= p_;
    std::map<std::uint32_t, RatFunc> acc;
    for (const auto& [ia, ca] : u) {
        Packed A = basis_[ia];
        Packed rem = 0, quo = 0;
        for (std::uint32_t j = 0; j < n_; ++j) {
            std::uint64_t s = packed_get(A, j) * pk;
            rem = packed_set(rem, j, static_cast<std::uint32_t>(s % q_));
            std::uint64_t t = s / q_;
            if (t > kMaxExp) throw Error("monomial exponent overflow");
            quo = packed_set(quo, j, static_cast<std::uint32_t>(t));
        }
        RatFunc v = ca.pow_frobenius(k);
        if (quo != 0) v *= RatFunc::monomial(p_, n_, quo);
        auto [it, inserted] = acc.try_emplace(index_of(rem), v);
        if (!inserted) it->second += v;
    }
    SparseRow out;
    for (auto& [idx, v] : acc)
        if (!v.is_zero()) out.emplace_back(idx, std::move(v));
    return out;
}

}  // namespace insep
