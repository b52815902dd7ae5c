#ifndef INSEP_AMBIENT_HPP
#define INSEP_AMBIENT_HPP

#include <map>
#include <string>
#include <vector>

#include "insep/linalg.hpp"
#include "insep/ratfunc.hpp"

namespace insep {

// The ambient rational function field A = F_p(x_1..x_N) viewed as a free
// module over its subfield A^(p^e), with basis the monomials x^a for
// a in [0,p^e)^N.  Coordinates are stored as p^e-th roots: an element is
// sum_a (c_a)^(p^e) x^a and we keep the c_a; because Frobenius is a field
// isomorphism, linear algebra over A^(p^e) becomes plain rational-function
// linear algebra on the roots.
class AmbientField {
public:
    AmbientField(std::uint32_t p, std::uint32_t nvars, std::uint32_t e,
                 std::vector<std::string> names = {});

    std::uint32_t prime() const { return p_; }
    std::uint32_t nvars() const { return n_; }
    std::uint32_t exponent() const { return e_; }
    std::uint64_t power() const { return q_; }            // p^e
    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    // Basis exponent vectors ordered by total degree, ties broken so that
    // earlier variables dominate (1, x, y, x^2, x*y, y^2, ...).
    const std::vector<Packed>& basis() const { return basis_; }
    std::uint32_t index_of(Packed a) const;
    RatFunc monomial_of(std::uint32_t idx) const;
    RatFunc variable(std::uint32_t var) const { return RatFunc::variable(p_, n_, var); }
    RatFunc constant(std::uint64_t c) const { return RatFunc::constant(p_, n_, c); }
    RatFunc zero() const { return RatFunc(p_, n_); }

    SparseRow descend(const RatFunc& f) const;            // root coordinates
    RatFunc reconstruct(const SparseRow& coords) const;

    // Coordinate-space products and Frobenius powers, computed without
    // reconstructing the underlying elements.
    SparseRow coord_mul(const SparseRow& a, const SparseRow& b) const;
    SparseRow coord_frobenius(const SparseRow& u, std::uint32_t k) const;

    std::vector<std::string> default_names() const { return names_; }

private:
    std::uint32_t p_, n_, e_;
    std::uint64_t q_;
    std::vector<std::string> names_;
    std::vector<Packed> basis_;
    std::map<Packed, std::uint32_t> index_;
};

}  // namespace insep

#endif
