#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "insep/ratfunc.hpp"
#include "insep/rng.hpp"

using namespace insep;

namespace {

MultiPoly var_pow(std::uint32_t p, std::uint32_t n, std::uint32_t var, std::uint32_t e,
                  std::uint64_t c = 1) {
    return MultiPoly::monomial(p, n, packed_set(0, var, e), c);
}

MultiPoly random_poly(Rng& rng, std::uint32_t p, std::uint32_t nvars, bool nonzero) {
    MultiPoly f(p, nvars);
    std::uint64_t nterms = 1 + rng.below(4);
    for (std::uint64_t t = 0; t < nterms; ++t) {
        Packed m = 0;
        for (std::uint32_t j = 0; j < nvars; ++j)
            m = packed_set(m, j, static_cast<std::uint32_t>(rng.below(4)));
        f.add_term(m, 1 + rng.below(p - 1));
    }
    if (nonzero && f.is_zero()) f.add_term(0, 1);
    return f;
}

RatFunc random_ratfunc(Rng& rng, std::uint32_t p, std::uint32_t nvars) {
    return RatFunc(random_poly(rng, p, nvars, false), random_poly(rng, p, nvars, true));
}

}  // namespace

TEST_CASE("normalization reduces the gcd and makes the denominator monic") {
    // (x^2+x)*y / (x+1) over F_2 reduces to x*y.
    std::uint32_t p = 2, n = 2;
    MultiPoly num = (var_pow(p, n, 0, 2) + var_pow(p, n, 0, 1)) * var_pow(p, n, 1, 1);
    MultiPoly den = var_pow(p, n, 0, 1) + MultiPoly::constant(p, n, 1);
    RatFunc r(num, den);
    CHECK(r.num() == var_pow(p, n, 0, 1) * var_pow(p, n, 1, 1));
    CHECK(r.den().is_one());
    // Cross-multiplication oracle: num * r.den == r.num * den.
    CHECK(num * r.den() == r.num() * den);
}

TEST_CASE("normalization cancels a shared linear factor over F_3") {
    // x^2+2 = (x+1)(x+2) over F_3, so (x^2+2)/(x+2) = x+1.
    std::uint32_t p = 3, n = 1;
    MultiPoly num = var_pow(p, n, 0, 2) + MultiPoly::constant(p, n, 2);
    MultiPoly den = var_pow(p, n, 0, 1) + MultiPoly::constant(p, n, 2);
    RatFunc r(num, den);
    CHECK(r.num() == var_pow(p, n, 0, 1) + MultiPoly::constant(p, n, 1));
    CHECK(r.den().is_one());
    CHECK(num * r.den() == r.num() * den);
}

TEST_CASE("denominator is made monic") {
    // x/(2x+1) over F_3 becomes 2x/(x+2).
    std::uint32_t p = 3, n = 1;
    RatFunc r(var_pow(p, n, 0, 1), var_pow(p, n, 0, 1, 2) + MultiPoly::constant(p, n, 1));
    CHECK(r.den().leading_coeff() == 1);
    CHECK(r.num() == var_pow(p, n, 0, 1, 2));
    CHECK(r.den() == var_pow(p, n, 0, 1) + MultiPoly::constant(p, n, 2));
}

TEST_CASE("a denominator that vanishes mod p is rejected") {
    // Over F_2 the fraction 2x/2 has zero denominator.
    std::uint32_t p = 2, n = 1;
    CHECK_THROWS_AS(RatFunc(var_pow(p, n, 0, 1, 2), MultiPoly::constant(p, n, 2)),
                    DivisionByZero);
}

TEST_CASE("partial derivative of p-th powers vanishes") {
    std::uint32_t p = 2, n = 1;
    RatFunc f(var_pow(p, n, 0, 2));
    CHECK(f.partial(0).is_zero());
}

TEST_CASE("partial derivative of a polynomial") {
    // d/dx (x^3 y + x) = 3x^2 y + 1 = x^2 y + 1 over F_2.
    std::uint32_t p = 2, n = 2;
    RatFunc f(var_pow(p, n, 0, 3) * var_pow(p, n, 1, 1) + var_pow(p, n, 0, 1));
    RatFunc expected(var_pow(p, n, 0, 2) * var_pow(p, n, 1, 1) + MultiPoly::constant(p, n, 1));
    CHECK(f.partial(0) == expected);
}

TEST_CASE("partial derivative uses the quotient rule") {
    // d/dx 1/(x+1) = -1/(x+1)^2; oracle: 0 = d(1) = f'*(x+1) + f.
    std::uint32_t p = 3, n = 1;
    MultiPoly xp1 = var_pow(p, n, 0, 1) + MultiPoly::constant(p, n, 1);
    RatFunc f(MultiPoly::constant(p, n, 1), xp1);
    RatFunc fx = f.partial(0);
    CHECK((fx * RatFunc(xp1) + f).is_zero());
    CHECK(fx == RatFunc(MultiPoly::constant(p, n, 2), xp1 * xp1));
}

TEST_CASE("descent splits a polynomial of p^e-th powers") {
    // x^4 + y^4 = (x+y)^4 over F_2 at e = 2: single coordinate at a = 0.
    std::uint32_t p = 2, n = 2;
    RatFunc f(var_pow(p, n, 0, 4) + var_pow(p, n, 1, 4));
    DescentMap d = frobenius_descent(f, 2);
    REQUIRE(d.size() == 1);
    CHECK(d.count(0) == 1);
    CHECK(d.at(0) == RatFunc(var_pow(p, n, 0, 1) + var_pow(p, n, 1, 1)));
    CHECK(descent_assemble(d, p, n, 2) == f);
}

TEST_CASE("descent of a pure power lands at the zero index") {
    std::uint32_t p = 3, n = 1;
    RatFunc f(var_pow(p, n, 0, 3));
    DescentMap d = frobenius_descent(f, 1);
    REQUIRE(d.size() == 1);
    CHECK(d.at(0) == RatFunc::variable(p, n, 0));
}

TEST_CASE("descent of 1/(x+1) over F_2 at e = 1") {
    // 1/(x+1) = (1/(x+1))^2 * 1 + (1/(x+1))^2 * x.
    std::uint32_t p = 2, n = 1;
    MultiPoly xp1 = var_pow(p, n, 0, 1) + MultiPoly::constant(p, n, 1);
    RatFunc f(MultiPoly::constant(p, n, 1), xp1);
    DescentMap d = frobenius_descent(f, 1);
    REQUIRE(d.size() == 2);
    CHECK(d.at(0) == f);
    CHECK(d.at(packed_set(0, 0, 1)) == f);
    CHECK(descent_assemble(d, p, n, 1) == f);
}

TEST_CASE("p^e-th root extraction") {
    std::uint32_t p = 2;
    CHECK(is_pe_power(RatFunc(var_pow(p, 1, 0, 4)), 2) == RatFunc::variable(p, 1, 0));
    CHECK(!is_pe_power(RatFunc(var_pow(p, 1, 0, 3)), 1).has_value());

    // (x^2+y^2)/z^2 = ((x+y)/z)^2 over F_2.
    std::uint32_t n = 3;
    RatFunc f(var_pow(p, n, 0, 2) + var_pow(p, n, 1, 2), var_pow(p, n, 2, 2));
    auto root = is_pe_power(f, 1);
    REQUIRE(root.has_value());
    CHECK(*root == RatFunc(var_pow(p, n, 0, 1) + var_pow(p, n, 1, 1), var_pow(p, n, 2, 1)));
    CHECK(root->pow(2) == f);
    CHECK(!is_pe_power(RatFunc(var_pow(p, n, 0, 1) + var_pow(p, n, 1, 1), var_pow(p, n, 2, 1)), 1)
               .has_value());
}

TEST_CASE("property: canonical form is idempotent") {
    std::uint32_t primes[] = {2, 3, 5};
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        Rng rng = Rng::for_trial(17, trial);
        std::uint32_t p = primes[rng.below(3)];
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(3));
        RatFunc f = random_ratfunc(rng, p, n);
        RatFunc again(f.num(), f.den());
        CHECK(again == f);
        CHECK(gcd(f.num(), f.den()).is_one());
        CHECK((f.is_zero() || f.den().leading_coeff() == 1));
    }
}

TEST_CASE("property: derivative of a p-th power vanishes") {
    std::uint32_t primes[] = {2, 3, 5};
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        Rng rng = Rng::for_trial(23, trial);
        std::uint32_t p = primes[rng.below(3)];
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(3));
        RatFunc f = random_ratfunc(rng, p, n).pow(p);
        for (std::uint32_t var = 0; var < n; ++var) CHECK(f.partial(var).is_zero());
    }
}

TEST_CASE("property: Leibniz rule") {
    std::uint32_t primes[] = {2, 3, 5};
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        Rng rng = Rng::for_trial(31, trial);
        std::uint32_t p = primes[rng.below(3)];
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(2));
        RatFunc f = random_ratfunc(rng, p, n);
        RatFunc g = random_ratfunc(rng, p, n);
        for (std::uint32_t var = 0; var < n; ++var)
            CHECK((f * g).partial(var) == f.partial(var) * g + f * g.partial(var));
    }
}

TEST_CASE("property: descent round trip") {
    std::uint32_t primes[] = {2, 3};
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        Rng rng = Rng::for_trial(41, trial);
        std::uint32_t p = primes[rng.below(2)];
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(2));
        std::uint32_t e = 1 + static_cast<std::uint32_t>(rng.below(2));
        RatFunc f = random_ratfunc(rng, p, n);
        DescentMap d = frobenius_descent(f, e);
        CHECK(descent_assemble(d, p, n, e) == f);
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) q *= p;
        for (const auto& [a, c] : d) {
            (void)c;
            for (std::uint32_t j = 0; j < n; ++j) CHECK(packed_get(a, j) < q);
        }
    }
}
