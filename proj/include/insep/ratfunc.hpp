#ifndef INSEP_RATFUNC_HPP
#define INSEP_RATFUNC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "insep/multipoly.hpp"

namespace insep {

// Element of F_p(x_1..x_N) kept in canonical form: numerator and denominator
// coprime, denominator monic under graded-lex order.
class RatFunc {
public:
    RatFunc(std::uint32_t p, std::uint32_t nvars);                   // zero
    explicit RatFunc(MultiPoly num);
    RatFunc(MultiPoly num, MultiPoly den);                           // normalizes

    static RatFunc constant(std::uint32_t p, std::uint32_t nvars, std::uint64_t c);
    static RatFunc variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t var);
    static RatFunc monomial(std::uint32_t p, std::uint32_t nvars, Packed m, std::uint64_t c = 1);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    std::uint32_t prime() const { return num_.prime(); }
    std::uint32_t nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws DivisionByZero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;
    RatFunc pow(std::uint64_t n) const;
    RatFunc pow_frobenius(std::uint32_t k) const;  // f^(p^k), exact in characteristic p
    RatFunc partial(std::uint32_t var) const;      // quotient rule, canonical result

    std::string to_string(const std::vector<std::string>& vars) const;
    std::string key() const { return num_.key() + "/" + den_.key(); }

private:
    struct Canonical {};  // tag: caller guarantees coprime parts, monic denominator
    RatFunc(MultiPoly num, MultiPoly den, Canonical)
        : num_(std::move(num)), den_(std::move(den)) {}

    MultiPoly num_, den_;
    void normalize();
};

// Coordinates of f in the free module decomposition A = sum_a A^(p^e) x^a,
// with a ranging over [0,p^e)^N.  Values are stored as p^e-th roots: the map
// sends a to c_a where f = sum_a (c_a)^(p^e) x^a.
using DescentMap = std::map<Packed, RatFunc>;

DescentMap frobenius_descent(const RatFunc& f, std::uint32_t e);
RatFunc descent_assemble(const DescentMap& coords, std::uint32_t p, std::uint32_t nvars,
                         std::uint32_t e);

// If f = g^(p^e) for some g, returns g; otherwise nullopt.
std::optional<RatFunc> is_pe_power(const RatFunc& f, std::uint32_t e);

}  // namespace insep

#endif
