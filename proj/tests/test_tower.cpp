#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "insep/rng.hpp"
#include "insep/tower.hpp"

using namespace insep;

namespace {

std::shared_ptr<const AmbientField> amb(std::uint32_t p, std::uint32_t n, std::uint32_t e) {
    return std::make_shared<AmbientField>(p, n, e);
}

RatFunc rpoly(Rng& rng, std::uint32_t p, std::uint32_t nvars) {
    MultiPoly f(p, nvars);
    std::uint64_t nterms = 1 + rng.below(3);
    for (std::uint64_t t = 0; t < nterms; ++t) {
        Packed m = 0;
        for (std::uint32_t j = 0; j < nvars; ++j)
            m = packed_set(m, j, static_cast<std::uint32_t>(rng.below(3)));
        f.add_term(m, 1 + rng.below(p - 1));
    }
    return RatFunc(f);
}

}  // namespace

TEST_CASE("closure of a single product generator") {
    auto A = amb(2, 2, 1);
    RatFunc xy = A->variable(0) * A->variable(1);
    auto K = IntermediateField::closure(A, {xy});
    CHECK(K.dim() == 2);
    CHECK(K.contains(xy));
    CHECK(K.contains(xy * xy));  // lands in the base span
    CHECK(!K.contains(A->variable(0)));
    CHECK(K.basis_elements()[0].is_one());
    CHECK(K.basis_elements()[1] == xy);
}

TEST_CASE("symmetric generators produce the whole field") {
    // Over F_2(x,y) with e = 1: the closure of {x+y, xy} contains x itself,
    // via x = (x/(x+y))^2 (x+y) + (1/(x+y))^2 (x+y)xy.
    auto A = amb(2, 2, 1);
    RatFunc x = A->variable(0), y = A->variable(1);
    auto K = IntermediateField::closure(A, {x + y, x * y});
    CHECK(K.dim() == 4);
    CHECK(K.contains(x));
    auto F = IntermediateField::full_field(A);
    CHECK(K.same_field(F));
}

TEST_CASE("degrees and exponents in a one-variable tower") {
    auto A = amb(2, 1, 2);
    RatFunc x = A->variable(0);
    auto base = IntermediateField::base_field(A);
    auto K = IntermediateField::closure(A, {x * x});
    auto F = IntermediateField::full_field(A);
    CHECK(base.dim() == 1);
    CHECK(K.dim() == 2);
    CHECK(F.dim() == 4);
    CHECK(degree_over(F, K) == 2);
    CHECK(degree_over(K, base) == 2);
    CHECK(K.subfield_of(F));
    CHECK(!F.subfield_of(K));
    // A^2 = A^4(x^2) exactly, so the Frobenius image of F lands in K at one.
    CHECK(tower_exponent(F, K) == 1);
    CHECK(tower_exponent(F, base) == 2);
    CHECK(tower_exponent(K, K) == 0);
}

TEST_CASE("intersection and compositum") {
    auto A = amb(2, 2, 1);
    RatFunc x = A->variable(0), y = A->variable(1);
    auto Kx = IntermediateField::closure(A, {x});
    auto Ky = IntermediateField::closure(A, {y});
    auto C = intersect_fields(Kx, Ky);
    CHECK(C.dim() == 1);
    auto J = compositum(Kx, Ky);
    CHECK(J.dim() == 4);
    CHECK(J.same_field(IntermediateField::full_field(A)));

    auto A1 = amb(2, 1, 2);
    RatFunc t = A1->variable(0);
    auto K2 = IntermediateField::closure(A1, {t * t});
    auto K3 = IntermediateField::closure(A1, {t * t * t});
    CHECK(K3.dim() == 4);  // x^3 has exponent 2, and x^6, x^9 reach x^2, x
    CHECK(intersect_fields(K3, K2).same_field(K2));
    CHECK(compositum(K2, K3).dim() == 4);
}

TEST_CASE("power compositum collects Frobenius powers of the source") {
    auto A = amb(2, 1, 2);
    RatFunc x = A->variable(0);
    auto base = IntermediateField::base_field(A);
    auto F = IntermediateField::full_field(A);
    auto P = power_compositum(base, F, 1);  // A^4 together with x^2
    CHECK(P.dim() == 2);
    CHECK(P.contains(x * x));
    CHECK(!P.contains(x));
}

TEST_CASE("triangular presentation with a dependent pair of generators") {
    // K = closure{x^3, y^3 + x} over A^9 in F_3(x,y); adjoining x then y gives
    // relations X_1^3 = x^3 and X_2^3 = (y^3 + x) - X_1.
    auto A = amb(3, 2, 2);
    RatFunc x = A->variable(0), y = A->variable(1);
    RatFunc g1 = x.pow(3), g2 = y.pow(3) + x;
    auto K = IntermediateField::closure(A, {g1, g2});
    CHECK(K.dim() == 9);
    Presentation pres(K, {x, y});
    REQUIRE(pres.ngens() == 2);
    CHECK(pres.stages()[0].ei == 1);
    CHECK(pres.stages()[1].ei == 1);
    CHECK(pres.degree() == 9);
    CHECK(degree_over(pres.top(), K) == 9);

    // First tail: the constant x^3.
    PresPoly t0 = pres.stages()[0].tail;
    REQUIRE(t0.terms().size() == 1);
    CHECK(t0.terms().begin()->first == PresPoly::Expo({0, 0}));
    CHECK(t0.terms().begin()->second == g1);

    // Second tail: (y^3 + x) - X_1.
    PresPoly t1 = pres.stages()[1].tail;
    REQUIRE(t1.terms().size() == 2);
    CHECK(t1.eval({x, y}) == y.pow(3));
    CHECK(t1.terms().at(PresPoly::Expo({0, 0})) == g2);
    CHECK(t1.terms().at(PresPoly::Expo({1, 0})) == -RatFunc::constant(3, 2, 1));

    const DMat& J = pres.jacobian();
    CHECK(J[0][0].is_zero());
    CHECK(J[0][1].is_zero());
    CHECK(J[1][1].is_zero());
    CHECK(J[1][0] == RatFunc::constant(3, 2, 1));
}

TEST_CASE("expression round trip through a presentation") {
    auto A = amb(3, 2, 2);
    RatFunc x = A->variable(0), y = A->variable(1);
    auto K = IntermediateField::closure(A, {x.pow(3), y.pow(3) + x});
    Presentation pres(K, {x, y});
    std::vector<RatFunc> u = pres.gen_values();

    RatFunc one = A->constant(1);
    std::vector<RatFunc> samples = {
        x * y,
        (x + y).pow(2),
        one / (x + y),
        x.pow(7) * y.pow(5) / (x * x + y + one),
        y.pow(3) + x,
    };
    for (const auto& f : samples) {
        PresPoly psi = pres.express(f);
        CHECK(psi.eval(u) == f);
        for (const auto& [e, c] : psi.terms()) {
            (void)c;
            CHECK(e[0] < 3);
            CHECK(e[1] < 3);
        }
    }
    // Coefficients of the expression lie in K.
    PresPoly psi = pres.express(x * y);
    for (const auto& [e, c] : psi.terms()) {
        (void)e;
        CHECK(K.contains(c));
    }
}

TEST_CASE("expressing a foreign element fails") {
    auto A = amb(2, 2, 1);
    RatFunc x = A->variable(0), y = A->variable(1);
    auto K = IntermediateField::closure(A, {x});
    Presentation pres(IntermediateField::base_field(A), {x});
    CHECK_THROWS_AS(pres.express(y), NotInField);
}

TEST_CASE("redundant generators are dropped from presentations") {
    auto A = amb(2, 1, 2);
    RatFunc x = A->variable(0);
    Presentation pres(IntermediateField::base_field(A), {x, x * x, x * x * x});
    CHECK(pres.ngens() == 1);
    CHECK(pres.stages()[0].ei == 2);
    CHECK(pres.degree() == 4);
}

TEST_CASE("minimal generators of one-variable extensions") {
    // x itself is reached before x^2, so the minimal count is 1 even though
    // the differential of x^2 vanishes.
    auto A = amb(2, 1, 2);
    RatFunc x = A->variable(0);
    auto base = IntermediateField::base_field(A);
    auto F = IntermediateField::full_field(A);
    auto res = minimal_generators(F, base);
    CHECK(res.minimal_count == 1);
    REQUIRE(res.generators.size() == 1);
    CHECK(res.generators[0] == x);
}

TEST_CASE("minimal generators of the full bivariate field") {
    auto A = amb(2, 2, 1);
    auto base = IntermediateField::base_field(A);
    auto F = IntermediateField::full_field(A);
    auto res = minimal_generators(F, base);
    CHECK(res.minimal_count == 2);
    auto rebuilt = IntermediateField::closure(A, res.generators);
    CHECK(rebuilt.same_field(F));
}

TEST_CASE("linear disjointness of coordinate subfields") {
    auto A = amb(2, 2, 1);
    RatFunc x = A->variable(0), y = A->variable(1);
    auto Kx = IntermediateField::closure(A, {x});
    auto Ky = IntermediateField::closure(A, {y});
    auto res = linear_disjointness(Kx, Ky);
    CHECK(res.disjoint);
    CHECK(res.coefficients.empty());
    CHECK(res.elements.size() == 2);  // a basis of Kx over the intersection

    // A field is disjoint from itself over itself.
    auto self = linear_disjointness(Kx, Kx);
    CHECK(self.disjoint);
    CHECK(self.elements.size() == 1);
}

TEST_CASE("property: closure is order independent") {
    std::uint32_t primes[] = {2, 3};
    for (std::uint64_t trial = 0; trial < 15; ++trial) {
        Rng rng = Rng::for_trial(59, trial);
        std::uint32_t p = primes[rng.below(2)];
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(2));
        std::uint32_t e = 1 + static_cast<std::uint32_t>(rng.below(2));
        auto A = amb(p, n, e);
        std::vector<RatFunc> gens;
        for (int i = 0; i < 2; ++i) gens.push_back(rpoly(rng, p, n));
        auto K1 = IntermediateField::closure(A, gens);
        std::reverse(gens.begin(), gens.end());
        auto K2 = IntermediateField::closure(A, gens);
        CHECK(K1.same_field(K2));
        CHECK(K1.dim() == K2.dim());
        // Dimensions over the base divide the ambient dimension.
        CHECK(A->dim() % K1.dim() == 0);
    }
}

TEST_CASE("property: presentation degree matches the module dimension") {
    std::uint32_t primes[] = {2, 3};
    for (std::uint64_t trial = 0; trial < 12; ++trial) {
        Rng rng = Rng::for_trial(61, trial);
        std::uint32_t p = primes[rng.below(2)];
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(2));
        std::uint32_t e = 1 + static_cast<std::uint32_t>(rng.below(2));
        auto A = amb(p, n, e);
        auto base = IntermediateField::closure(A, {rpoly(rng, p, n)});
        std::vector<RatFunc> gens;
        for (int i = 0; i < 2; ++i) gens.push_back(rpoly(rng, p, n));
        Presentation pres(base, gens);
        CHECK(pres.degree() == degree_over(pres.top(), base));
        // Jacobian is strictly lower triangular.
        const DMat& J = pres.jacobian();
        for (std::uint32_t i = 0; i < pres.ngens(); ++i)
            for (std::uint32_t j = i; j < pres.ngens(); ++j) CHECK(J[i][j].is_zero());
        // Expression round trip on the generators' squares.
        std::vector<RatFunc> u = pres.gen_values();
        for (const auto& g : u) CHECK(pres.express(g * g).eval(u) == g * g);
    }
}

TEST_CASE("property: minimal generator search rebuilds the field") {
    std::uint32_t primes[] = {2, 3};
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        Rng rng = Rng::for_trial(67, trial);
        std::uint32_t p = primes[rng.below(2)];
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(2));
        std::uint32_t e = 1 + static_cast<std::uint32_t>(rng.below(2));
        auto A = amb(p, n, e);
        auto base = IntermediateField::base_field(A);
        auto top = IntermediateField::closure(A, {rpoly(rng, p, n), rpoly(rng, p, n)});
        if (top.same_field(base)) continue;
        auto res = minimal_generators(top, base);
        CHECK(res.minimal_count >= 1);
        CHECK(res.minimal_count <= 2 * n);
        auto rebuilt = IntermediateField::closure(A, res.generators);
        CHECK(rebuilt.same_field(top));
    }
}
