#include "insep/ratfunc.hpp"

#include <sstream>

namespace insep {

RatFunc::RatFunc(std::uint32_t p, std::uint32_t nvars)
    : num_(p, nvars), den_(MultiPoly::constant(p, nvars, 1)) {}

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.prime(), num_.nvars(), 1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    check_compatible(num_, den_);
    normalize();
}

RatFunc RatFunc::constant(std::uint32_t p, std::uint32_t nvars, std::uint64_t c) {
    return RatFunc(MultiPoly::constant(p, nvars, c));
}

RatFunc RatFunc::variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t var) {
    return RatFunc(MultiPoly::variable(p, nvars, var));
}

RatFunc RatFunc::monomial(std::uint32_t p, std::uint32_t nvars, Packed m, std::uint64_t c) {
    return RatFunc(MultiPoly::monomial(p, nvars, m, c));
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.prime(), num_.nvars(), 1);
        return;
    }
    MultiPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
    std::uint32_t lc = den_.leading_coeff();
    if (lc != 1) {
        std::uint32_t inv = fp::inv(lc, den_.prime());
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    check_compatible(num_, o.num_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one())
        return RatFunc(num_ + o.num_, den_, Canonical{});
    // With both operands canonical, any common factor of the combined
    // numerator and denominator divides g = gcd of the denominators, so one
    // small gcd finishes the reduction.
    MultiPoly g = gcd(den_, o.den_);
    MultiPoly b1 = g.is_one() ? den_ : div_exact(den_, g);
    MultiPoly d1 = g.is_one() ? o.den_ : div_exact(o.den_, g);
    MultiPoly t = num_ * d1 + o.num_ * b1;
    if (t.is_zero()) return RatFunc(prime(), nvars());
    MultiPoly h = gcd(t, g);
    if (!h.is_one()) {
        t = div_exact(t, h);
        g = div_exact(g, h);
    }
    return RatFunc(std::move(t), g * b1 * d1, Canonical{});
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    check_compatible(num_, o.num_);
    if (is_zero() || o.is_zero()) return RatFunc(prime(), nvars());
    if (den_.is_one() && o.den_.is_one())
        return RatFunc(num_ * o.num_, den_, Canonical{});
    // Cross-cancel: with both operands canonical the two cross gcds remove
    // every common factor of the product.
    MultiPoly g1 = gcd(num_, o.den_);
    MultiPoly g2 = gcd(o.num_, den_);
    MultiPoly n = (g1.is_one() ? num_ : div_exact(num_, g1)) *
                  (g2.is_one() ? o.num_ : div_exact(o.num_, g2));
    MultiPoly d = (g2.is_one() ? den_ : div_exact(den_, g2)) *
                  (g1.is_one() ? o.den_ : div_exact(o.den_, g1));
    return RatFunc(std::move(n), std::move(d), Canonical{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    MultiPoly n = den_, d = num_;
    std::uint32_t lc = d.leading_coeff();
    if (lc != 1) {
        std::uint32_t iv = fp::inv(lc, d.prime());
        n = n.scaled(iv);
        d = d.scaled(iv);
    }
    return RatFunc(std::move(n), std::move(d), Canonical{});
}

RatFunc RatFunc::pow(std::uint64_t n) const {
    if (n == 0) return constant(prime(), nvars(), 1);
    if (is_zero()) return *this;
    // Powers of a canonical fraction are canonical: coprimality and the monic
    // denominator survive.
    return RatFunc(num_.pow(n), den_.pow(n), Canonical{});
}

RatFunc RatFunc::pow_frobenius(std::uint32_t k) const {
    RatFunc r = *this;
    r.num_ = r.num_.pow_frobenius(k);
    r.den_ = r.den_.pow_frobenius(k);
    // Coprimality and monic leading coefficient survive the Frobenius.
    return r;
}

RatFunc RatFunc::partial(std::uint32_t var) const {
    MultiPoly dd = den_.partial(var);
    if (dd.is_zero()) return RatFunc(num_.partial(var), den_);
    return RatFunc(num_.partial(var) * den_ - num_ * dd, den_ * den_);
}

std::string RatFunc::to_string(const std::vector<std::string>& vars) const {
    std::string n = num_.to_string(vars);
    if (den_.is_one()) return n;
    std::string d = den_.to_string(vars);
    std::ostringstream out;
    // Parenthesize so that the output re-parses as (num)/(den): the numerator
    // needs parens when it is a sum, the denominator unless it is a single
    // monomial factor like x or x^2.
    if (num_.term_count() > 1)
        out << "(" << n << ")";
    else
        out << n;
    out << "/";
    bool bare = den_.term_count() == 1 && den_.leading_coeff() == 1;
    if (bare) {
        std::uint32_t nz = 0;
        for (std::uint32_t j = 0; j < den_.nvars(); ++j)
            if (packed_get(den_.leading_monomial(), j) > 0) ++nz;
        bare = nz == 1;
    }
    if (bare)
        out << d;
    else
        out << "(" << d << ")";
    return out.str();
}

DescentMap frobenius_descent(const RatFunc& f, std::uint32_t e) {
    std::uint32_t p = f.prime(), n = f.nvars();
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;

    // f = g / den^(p^e) with g = num * den^(p^e - 1); split g monomialwise.
    MultiPoly g = f.num() * f.den().pow(q - 1);
    std::map<Packed, MultiPoly> buckets;
    for (const auto& [m, c] : g.terms()) {
        Packed rem = 0, quo = 0;
        for (std::uint32_t j = 0; j < kMaxVars; ++j) {
            std::uint32_t ej = packed_get(m, j);
            rem = packed_set(rem, j, static_cast<std::uint32_t>(ej % q));
            quo = packed_set(quo, j, static_cast<std::uint32_t>(ej / q));
        }
        auto [it, inserted] = buckets.try_emplace(rem, MultiPoly(p, n));
        it->second.add_term(quo, c);  // c^(1/p^e) = c in F_p
    }
    DescentMap out;
    for (auto& [a, poly] : buckets) {
        RatFunc c(std::move(poly), f.den());
        if (!c.is_zero()) out.emplace(a, std::move(c));
    }
    return out;
}

RatFunc descent_assemble(const DescentMap& coords, std::uint32_t p, std::uint32_t nvars,
                         std::uint32_t e) {
    RatFunc acc(p, nvars);
    for (const auto& [a, c] : coords)
        acc += c.pow_frobenius(e) * RatFunc::monomial(p, nvars, a);
    return acc;
}

std::optional<RatFunc> is_pe_power(const RatFunc& f, std::uint32_t e) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= f.prime();
    auto root = [&](const MultiPoly& g) -> std::optional<MultiPoly> {
        MultiPoly r(g.prime(), g.nvars());
        for (const auto& [m, c] : g.terms()) {
            Packed rm = 0;
            for (std::uint32_t j = 0; j < kMaxVars; ++j) {
                std::uint32_t ej = packed_get(m, j);
                if (ej % q != 0) return std::nullopt;
                rm = packed_set(rm, j, static_cast<std::uint32_t>(ej / q));
            }
            r.add_term(rm, c);  // Frobenius fixes F_p, so c^(1/p^e) = c
        }
        return r;
    };
    // The canonical form of g^(p^e) is num^(p^e)/den^(p^e) of the canonical
    // form of g, so it suffices to take componentwise roots.
    auto rn = root(f.num());
    if (!rn) return std::nullopt;
    auto rd = root(f.den());
    if (!rd) return std::nullopt;
    return RatFunc(std::move(*rn), std::move(*rd));
}

}  // namespace insep
