#ifndef INSEP_PRESPOLY_HPP
#define INSEP_PRESPOLY_HPP

#include <map>
#include <vector>

#include "insep/ratfunc.hpp"

namespace insep {

// Polynomial in presentation variables X_1..X_n whose coefficients live in
// the ambient rational function field.  Exponents are kept as plain vectors;
// presentation degrees stay tiny.
class PresPoly {
public:
    using Expo = std::vector<std::uint16_t>;

    PresPoly(std::uint32_t nvars, std::uint32_t p, std::uint32_t ambient_nvars);
    static PresPoly constant(std::uint32_t nvars, RatFunc c);
    static PresPoly variable(std::uint32_t nvars, std::uint32_t var, std::uint32_t p,
                             std::uint32_t ambient_nvars);
    static PresPoly monomial(std::uint32_t nvars, Expo e, RatFunc c);

    std::uint32_t nvars() const { return nvars_; }
    std::uint32_t prime() const { return p_; }
    std::uint32_t ambient_nvars() const { return an_; }
    const std::map<Expo, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Expo& e, const RatFunc& c);
    PresPoly operator+(const PresPoly& o) const;
    PresPoly operator-(const PresPoly& o) const;
    PresPoly operator*(const PresPoly& o) const;
    PresPoly operator-() const;
    PresPoly scaled(const RatFunc& c) const;
    bool operator==(const PresPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    PresPoly partial(std::uint32_t var) const;
    RatFunc eval(const std::vector<RatFunc>& vals) const;
    PresPoly substitute(const std::vector<PresPoly>& images) const;
    // Applies Frobenius p^k to the whole polynomial: coefficients are raised
    // and exponents scaled, exact in characteristic p.
    PresPoly frobenius(std::uint32_t k) const;
    PresPoly pow(std::uint64_t n) const;

    std::uint32_t degree_in(std::uint32_t var) const;

private:
    std::uint32_t nvars_, p_, an_;
    std::map<Expo, RatFunc> terms_;
};

// Relation X_i^(p^(e_i)) - tail_i(X_1..X_(i-1)) of a triangular presentation.
struct Relation {
    std::uint32_t pe;   // p^(e_i)
    PresPoly tail;      // involves variables strictly below i
};

// Division of g by the triangular relation set: g = sum_i q_i * rel_i + rem,
// the remainder having X_i-degree below p^(e_i) for all i.  Returns rem and,
// if quotients is non-null, the q_i.
PresPoly triangular_reduce(PresPoly g, const std::vector<Relation>& rels,
                           std::vector<PresPoly>* quotients = nullptr);

}  // namespace insep

#endif
