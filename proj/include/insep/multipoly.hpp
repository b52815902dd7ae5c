#ifndef INSEP_MULTIPOLY_HPP
#define INSEP_MULTIPOLY_HPP

#include <cstdint>
#include <utility>
#include <string>
#include <vector>

#include "insep/fp.hpp"

namespace insep {

// Exponent vectors are packed into a uint64, 16 bits per variable, variable 0
// in the highest slot.  Plain integer comparison of packed keys is therefore
// lexicographic with x1 most significant.
using Packed = std::uint64_t;

constexpr std::uint32_t kMaxVars = 4;
constexpr std::uint32_t kMaxExp = 0xFFFF;

inline std::uint32_t packed_get(Packed m, std::uint32_t var) {
    return static_cast<std::uint32_t>((m >> (16 * (kMaxVars - 1 - var))) & 0xFFFF);
}

inline Packed packed_set(Packed m, std::uint32_t var, std::uint32_t e) {
    int sh = 16 * (kMaxVars - 1 - var);
    m &= ~(static_cast<Packed>(0xFFFF) << sh);
    m |= static_cast<Packed>(e & 0xFFFF) << sh;
    return m;
}

inline std::uint32_t packed_degree(Packed m) {
    return static_cast<std::uint32_t>((m & 0xFFFF) + ((m >> 16) & 0xFFFF) + ((m >> 32) & 0xFFFF) +
                                      ((m >> 48) & 0xFFFF));
}

Packed packed_mul(Packed a, Packed b);                 // adds exponents, checks overflow
bool packed_divides(Packed a, Packed b);               // a | b componentwise
Packed packed_div(Packed b, Packed a);                 // b - a, requires divisibility

// Graded lexicographic order: total degree first, then lex with x1 > ... > xN.
struct GrlexLess {
    bool operator()(Packed a, Packed b) const {
        std::uint32_t da = packed_degree(a), db = packed_degree(b);
        return da != db ? da < db : a < b;
    }
};

// Sparse multivariate polynomial over F_p.  Terms are kept in a flat vector
// in ascending graded-lex order; coefficients are nonzero least residues.
class MultiPoly {
public:
    using Term = std::pair<Packed, std::uint32_t>;
    using TermMap = std::vector<Term>;

    MultiPoly(std::uint32_t p, std::uint32_t nvars);
    static MultiPoly constant(std::uint32_t p, std::uint32_t nvars, std::uint64_t c);
    static MultiPoly monomial(std::uint32_t p, std::uint32_t nvars, Packed m, std::uint64_t c = 1);
    static MultiPoly variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t var);

    std::uint32_t prime() const { return p_; }
    std::uint32_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::uint32_t constant_value() const;  // value at the zero monomial (0 if absent)

    Packed leading_monomial() const;       // grlex-largest; requires nonzero
    std::uint32_t leading_coeff() const;
    std::uint32_t total_degree() const;    // 0 for the zero polynomial
    std::uint32_t degree_in(std::uint32_t var) const;

    void add_term(Packed m, std::uint64_t c);  // accumulates mod p, drops zeros

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(std::uint32_t c) const;
    MultiPoly monic() const;               // divide by the leading coefficient
    MultiPoly partial(std::uint32_t var) const;
    MultiPoly pow(std::uint64_t n) const;
    MultiPoly pow_frobenius(std::uint32_t k) const;  // f^(p^k): scale exponents, keep coeffs

    // Helpers for gcd computation, viewing the polynomial in one variable.
    MultiPoly coeff_in(std::uint32_t var, std::uint32_t k) const;  // coefficient of var^k
    MultiPoly lead_coeff_in(std::uint32_t var) const;
    MultiPoly shifted(std::uint32_t var, std::uint32_t k) const;   // multiply by var^k

    std::string to_string(const std::vector<std::string>& vars) const;
    std::string key() const;  // canonical serialization, independent of variable names

private:
    std::uint32_t p_;
    std::uint32_t nvars_;
    TermMap terms_;
};

void check_compatible(const MultiPoly& a, const MultiPoly& b);

MultiPoly div_exact(const MultiPoly& f, const MultiPoly& g);  // throws Error if not exact
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);        // monic normalized
MultiPoly content_in(const MultiPoly& f, std::uint32_t var);
MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, std::uint32_t var);

}  // namespace insep

#endif
