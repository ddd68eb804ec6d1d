#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "polyring.hpp"

using namespace planar2;

namespace {

Poly random_poly(const Field& f, std::mt19937_64& rng, size_t max_deg) {
    std::vector<uint64_t> c(rng() % (max_deg + 1) + 1);
    for (auto& x : c) x = rng() % f.order();
    return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("normalization and degree") {
    const Field f(4);
    CHECK(Poly(f, {1, 2, 0, 0}).degree() == std::optional<size_t>{1});
    CHECK(Poly(f, {0, 0}).is_zero());
    CHECK_FALSE(Poly(f, {0, 0}).degree().has_value());
    CHECK(Poly(f).is_zero());
    CHECK(Poly(f, {5}).degree() == std::optional<size_t>{0});
    CHECK_THROWS_AS(Poly(f, {16}), Error);
}

TEST_CASE("from_roots expands x(x+1)(x+b)") {
    const Field f(4);
    for (uint64_t b = 0; b < f.order(); ++b) {
        const uint64_t roots[] = {0, 1, b};
        const Poly p = Poly::from_roots(f, roots);
        CHECK(p == Poly(f, {0, b, b ^ 1, 1}));  // x^3 + (b+1)x^2 + bx
        CHECK(p.eval(0) == 0);
        CHECK(p.eval(1) == 0);
        CHECK(p.eval(b) == 0);
    }
    CHECK(Poly::from_roots(f, {}) == Poly(f, {1}));  // empty product
}

TEST_CASE("evaluation is a ring homomorphism") {
    const Field f(4);
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        const Poly a = random_poly(f, rng, 6);
        const Poly b = random_poly(f, rng, 6);
        const uint64_t x = rng() % f.order();
        CHECK((a * b).eval(x) == f.mul(a.eval(x), b.eval(x)));
        CHECK((a + b).eval(x) == (a.eval(x) ^ b.eval(x)));
    }
}

TEST_CASE("the cubic evaluates to b^2+b+1 at 1") {
    const Field f(4);
    for (uint64_t b = 0; b < f.order(); ++b) {
        const uint64_t bb = f.mul(b, b) ^ b;
        const Poly g(f, {1, 1, bb, 1});  // x^3 + (b^2+b)x^2 + x + 1
        CHECK(g.eval(1) == (bb ^ 1));
    }
}

TEST_CASE("substituting x^3") {
    const Field f(2);
    CHECK(Poly(f, {1, 1}).compose_xcube() == Poly(f, {1, 0, 0, 1}));  // x+1 -> x^3+1
    CHECK(Poly(f).compose_xcube().is_zero());
    const Field f16(4);
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 100; ++iter) {
        const Poly p = random_poly(f16, rng, 4);
        const uint64_t x = rng() % 16;
        CHECK(p.compose_xcube().eval(x) == p.eval(f16.pow(x, 3)));
    }
}

TEST_CASE("minimal polynomials over subfields") {
    SUBCASE("over the field itself: X + x") {
        const Field f(4);
        for (uint64_t x = 0; x < f.order(); ++x) {
            CHECK(Poly::min_poly_over_subfield(f, x, 4) == Poly(f, {x, 1}));
        }
    }
    SUBCASE("of zero: X") {
        const Field f(6);
        CHECK(Poly::min_poly_over_subfield(f, 0, 2) == Poly(f, {0, 1}));
    }
    SUBCASE("degree divides r/m and the element is a root") {
        const Field f(6);
        for (uint32_t m : {1u, 2u, 3u}) {
            for (uint64_t x = 0; x < f.order(); ++x) {
                const Poly p = Poly::min_poly_over_subfield(f, x, m);
                CHECK((6 / m) % *p.degree() == 0);
                CHECK(p.eval(x) == 0);
                for (uint64_t c : p.coeffs()) CHECK(f.in_subfield(c, m));
            }
        }
    }
    SUBCASE("order-21 elements outside GF(4) give cubics with constant term 1") {
        const Field f(6);
        const uint64_t q = f.order();
        int seen = 0;
        for (uint64_t U = 1; U < q; ++U) {
            if (f.pow(U, 21) != 1 || f.in_subfield(U, 2)) continue;
            const Poly F = Poly::min_poly_over_subfield(f, U, 2);
            CHECK(F.degree() == std::optional<size_t>{3});
            CHECK(F.coeff(3) == 1);
            CHECK(F.coeff(0) == 1);  // U^(Q^2+Q+1) = 1
            ++seen;
        }
        CHECK(seen == 18);  // 21 subgroup members minus {1, omega, omega^2}
    }
    SUBCASE("m must divide r") {
        const Field f(6);
        CHECK_THROWS_AS(Poly::min_poly_over_subfield(f, 1, 4), Error);
    }
}

TEST_CASE("operations reject mixed field contexts") {
    const Field f1(4);
    const Field f2(4);
    const Poly a(f1, {1, 1});
    const Poly b(f2, {1, 1});
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
    CHECK_THROWS_AS((void)(a == b), Error);
}
