#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "planarity.hpp"

using namespace planar2;

namespace {

std::vector<uint64_t> monomial_table(const Field& f, uint64_t t, uint64_t a) {
    std::vector<uint64_t> table(f.order());
    for (uint64_t c = 0; c < f.order(); ++c) {
        table[c] = f.mul(a, f.pow(c, static_cast<int64_t>(t)));
    }
    return table;
}

MonomialSpec spec_of(const Field& f, uint64_t t, uint64_t a) {
    MonomialSpec s;
    s.r = f.degree();
    s.t = t;
    s.a_enc = a;
    return s;
}

// Bijectivity of c -> (c+1)^t + c^t + c*s by direct value collection,
// independent of the occupancy and matrix paths.
bool shifted_map_bijective(const Field& f, uint64_t t, uint64_t s) {
    std::set<uint64_t> seen;
    for (uint64_t c = 0; c < f.order(); ++c) {
        seen.insert(f.pow(c ^ 1, static_cast<int64_t>(t)) ^ f.pow(c, static_cast<int64_t>(t)) ^
                    f.mul(c, s));
    }
    return seen.size() == f.order();
}

}  // namespace

TEST_CASE("linear and Frobenius-power monomials are planar") {
    for (uint32_t r : {2u, 3u, 4u}) {
        const Field f(r);
        for (uint64_t a = 1; a < f.order(); ++a) {
            CHECK(check_table(f, monomial_table(f, 1, a)).planar);
            CHECK(check_table(f, monomial_table(f, 2, a)).planar);
        }
    }
}

TEST_CASE("c^3 on GF(4) is not planar and the witness re-verifies") {
    const Field f(2);
    const auto table = monomial_table(f, 3, 1);
    const Verdict v = check_table(f, table);
    REQUIRE_FALSE(v.planar);
    REQUIRE(v.witness.has_value());
    CHECK(v.method == Method::definition);
    CHECK(reverify_witness(f, *v.witness, 3, 1, table));
    // direct re-check of the collision
    const Witness& w = *v.witness;
    const uint64_t v1 = table[w.c1 ^ w.d] ^ table[w.c1] ^ f.mul(w.d, w.c1);
    const uint64_t v2 = table[w.c2 ^ w.d] ^ table[w.c2] ^ f.mul(w.d, w.c2);
    CHECK(v1 == v2);
    CHECK(w.c1 != w.c2);
}

TEST_CASE("table checker rejects wrong lengths and bad entries") {
    const Field f(2);
    CHECK_THROWS_AS(check_table(f, std::vector<uint64_t>{0, 1, 2}), Error);
    CHECK_THROWS_AS(check_table(f, std::vector<uint64_t>{0, 1, 2, 4}), Error);
}

TEST_CASE("degree-5 monomials on GF(16) are planar exactly for cubes") {
    const Field f(4);
    uint64_t planar_count = 0;
    for (uint64_t a = 1; a < 16; ++a) {
        const bool planar = check_monomial(f, spec_of(f, 5, a)).planar;
        CHECK(planar == f.is_kth_power(a, 3));
        planar_count += planar;
    }
    CHECK(planar_count == 5);
}

TEST_CASE("degree-10 monomials on GF(16) are never planar: gcd(t-2, q-1) = 1") {
    const Field f(4);
    for (uint64_t a = 1; a < 16; ++a) {
        const Verdict v = check_monomial(f, spec_of(f, 10, a));
        CHECK_FALSE(v.planar);
        CHECK(reverify_witness(f, *v.witness, 10, a));
    }
}

TEST_CASE("degree-20 monomials on GF(64): planar iff cube but not 9th power") {
    const Field f(6);
    uint64_t planar_count = 0;
    for (uint64_t a = 1; a < 64; ++a) {
        const bool planar = check_monomial(f, spec_of(f, 20, a)).planar;
        CHECK(planar == (f.is_kth_power(a, 3) && !f.is_kth_power(a, 9)));
        planar_count += planar;
    }
    CHECK(planar_count == 14);
}

TEST_CASE("powers of 2 are planar for every coefficient up to r = 10") {
    for (uint32_t r = 2; r <= 10; ++r) {
        const Field f(r);
        for (uint32_t k = 0; k < r; ++k) {
            for (uint64_t a = 1; a < f.order(); ++a) {
                CAPTURE(r);
                CAPTURE(k);
                CAPTURE(a);
                CHECK(check_monomial(f, spec_of(f, uint64_t{1} << k, a)).planar);
            }
        }
    }
}

TEST_CASE("exponents agree mod q-1") {
    std::mt19937_64 rng(5);
    for (uint32_t r : {4u, 6u}) {
        const Field f(r);
        const uint64_t q = f.order();
        for (int iter = 0; iter < 60; ++iter) {
            const uint64_t t = rng() % (q - 1) + 1;
            const uint64_t a = rng() % (q - 1) + 1;
            const bool v1 = check_monomial(f, spec_of(f, t, a)).planar;
            const bool v2 = check_monomial(f, spec_of(f, t + (q - 1), a)).planar;
            CHECK(v1 == v2);
        }
    }
}

TEST_CASE("degree q-1 monomials are not planar") {
    const Field f(3);
    for (uint64_t a = 1; a < 8; ++a) {
        CHECK_FALSE(check_monomial(f, spec_of(f, 7, a)).planar);
    }
}

TEST_CASE("quadratic checker on GF(4): (0,1) is never planar") {
    const Field f(2);
    for (uint64_t a = 1; a < 4; ++a) {
        const Verdict v = check_quadratic(f, 0, 1, a);
        CHECK_FALSE(v.planar);
        CHECK(reverify_witness(f, *v.witness, 3, a));
    }
}

TEST_CASE("quadratic checker on GF(64): (2,4) has exactly 14 planar coefficients") {
    const Field f(6);
    uint64_t planar_count = 0;
    for (uint64_t a = 1; a < 64; ++a) planar_count += check_quadratic(f, 2, 4, a).planar;
    CHECK(planar_count == 14);
}

TEST_CASE("a coefficient whose inverse is an image value is never planar") {
    for (uint32_t r : {4u, 6u}) {
        const Field f(r);
        for (uint32_t i = 0; i + 1 < r; ++i) {
            for (uint32_t j = i + 1; j < r; ++j) {
                for (uint64_t x0 = 1; x0 < f.order(); ++x0) {
                    const uint64_t s = f.pow(x0, (int64_t{1} << i) - 1) ^
                                       f.pow(x0, (int64_t{1} << j) - 1);
                    if (s == 0) continue;
                    const Verdict v = check_quadratic(f, i, j, f.inv(s));
                    CHECK_FALSE(v.planar);
                }
            }
        }
    }
}

TEST_CASE("linearized map rank tests") {
    const Field f(6);
    SUBCASE("s = 0 is never bijective; 1 is in the kernel") {
        for (uint32_t i = 0; i < 5; ++i) {
            for (uint32_t j = i + 1; j < 6; ++j) {
                const LinearCheck lc = linearized_bijective(f, i, j, 0);
                CHECK_FALSE(lc.bijective);
                CHECK(lc.kernel_enc != 0);
                const uint64_t img = f.frobenius(lc.kernel_enc, i) ^ f.frobenius(lc.kernel_enc, j);
                CHECK(img == 0);
            }
        }
    }
    SUBCASE("s an image value of the gap map kills bijectivity") {
        for (uint64_t x0 = 1; x0 < 64; ++x0) {
            const uint64_t s = f.pow(x0, 3) ^ f.pow(x0, 15);  // i=2, j=4
            if (s == 0) continue;
            const LinearCheck lc = linearized_bijective(f, 2, 4, s);
            CHECK_FALSE(lc.bijective);
            // the returned kernel element really maps to zero
            const uint64_t img =
                f.frobenius(lc.kernel_enc, 2) ^ f.frobenius(lc.kernel_enc, 4) ^
                f.mul(s, lc.kernel_enc);
            CHECK(img == 0);
            CHECK(lc.kernel_enc != 0);
        }
    }
    SUBCASE("kernel witnesses re-verify through the witness checker") {
        const LinearCheck lc = linearized_bijective(f, 2, 4, f.pow(2, 3) ^ f.pow(2, 15));
        Witness w;
        w.kind = Method::matrix_rank;
        w.s = f.pow(2, 3) ^ f.pow(2, 15);
        w.kernel = lc.kernel_enc;
        // legality of s: a = inv(s) puts s in its own coset
        CHECK(reverify_witness(f, w, 20, f.inv(w.s)));
    }
}

TEST_CASE("method agreement: definition == lemma mono == lemma mono2, exhaustively") {
    for (uint32_t r = 2; r <= 6; ++r) {
        const Field f(r);
        for (uint32_t i = 0; i + 1 < r; ++i) {
            for (uint32_t j = i + 1; j < r; ++j) {
                const uint64_t t = (uint64_t{1} << i) + (uint64_t{1} << j);
                for (uint64_t a = 1; a < f.order(); ++a) {
                    CAPTURE(r);
                    CAPTURE(i);
                    CAPTURE(j);
                    CAPTURE(a);
                    const bool by_def = check_table(f, monomial_table(f, t, a)).planar;
                    const bool by_mono = check_monomial(f, spec_of(f, t, a)).planar;
                    const bool by_quad = check_quadratic(f, i, j, a).planar;
                    CHECK(by_def == by_mono);
                    CHECK(by_def == by_quad);
                }
            }
        }
    }
}

TEST_CASE("per-shift agreement: occupancy bijectivity == matrix rank") {
    for (uint32_t r = 2; r <= 6; ++r) {
        const Field f(r);
        for (uint32_t i = 0; i + 1 < r; ++i) {
            for (uint32_t j = i + 1; j < r; ++j) {
                const uint64_t t = (uint64_t{1} << i) + (uint64_t{1} << j);
                for (uint64_t s = 0; s < f.order(); ++s) {
                    CHECK(shifted_map_bijective(f, t, s) ==
                          linearized_bijective(f, i, j, s).bijective);
                }
            }
        }
    }
}

TEST_CASE("verdicts are constant on cosets of the coefficient") {
    std::mt19937_64 rng(17);
    for (uint32_t r : {4u, 5u, 6u}) {
        const Field f(r);
        const uint64_t q = f.order();
        for (int iter = 0; iter < 40; ++iter) {
            const uint64_t t = rng() % (q - 2) + 2;
            const uint64_t a = rng() % (q - 1) + 1;
            const uint64_t tm2 = t == 2 ? q - 1 : t - 2;
            const uint64_t g = std::gcd(tm2, q - 1);
            const bool base = check_monomial(f, spec_of(f, t, a)).planar;
            for (int k = 0; k < 5; ++k) {
                const uint64_t w = rng() % (q - 1) + 1;
                const uint64_t a2 = f.mul(a, f.pow(w, static_cast<int64_t>(g)));
                CHECK(check_monomial(f, spec_of(f, t, a2)).planar == base);
            }
        }
    }
}

TEST_CASE("all non-planar quadratic witnesses re-verify") {
    for (uint32_t r : {4u, 5u}) {
        const Field f(r);
        for (uint32_t i = 0; i + 1 < r; ++i) {
            for (uint32_t j = i + 1; j < r; ++j) {
                const uint64_t t = (uint64_t{1} << i) + (uint64_t{1} << j);
                for (uint64_t a = 1; a < f.order(); ++a) {
                    const Verdict v = check_quadratic(f, i, j, a);
                    if (!v.planar) {
                        CHECK(v.witness.has_value());
                        CHECK(reverify_witness(f, *v.witness, t, a));
                    } else {
                        CHECK_FALSE(v.witness.has_value());
                    }
                }
            }
        }
    }
}

TEST_CASE("general-exponent witnesses re-verify") {
    const Field f(4);
    for (uint64_t t = 2; t < 16; ++t) {
        for (uint64_t a = 1; a < 16; ++a) {
            const Verdict v = check_monomial(f, spec_of(f, t, a));
            if (!v.planar) {
                REQUIRE(v.witness.has_value());
                CHECK(reverify_witness(f, *v.witness, t, a));
            }
        }
    }
}

TEST_CASE("the t = 2 coset collapses to a single shift") {
    const Field f(4);
    for (uint64_t a = 1; a < 16; ++a) {
        CHECK(check_monomial(f, spec_of(f, 2, a)).planar);
    }
}

TEST_CASE("spec validation errors") {
    const Field f(4);
    CHECK_THROWS_AS(check_monomial(f, spec_of(f, 5, 0)), Error);
    CHECK_THROWS_AS(check_monomial(f, spec_of(f, 0, 1)), Error);
    CHECK_THROWS_AS(check_monomial(f, spec_of(f, 5, 16)), Error);
    MonomialSpec bad = spec_of(f, 5, 1);
    bad.r = 6;
    CHECK_THROWS_AS(check_monomial(f, bad), Error);
    MonomialSpec bad_split = spec_of(f, 5, 1);
    bad_split.split = std::make_pair(1u, 2u);  // 2^1 + 2^2 != 5
    CHECK_THROWS_AS(check_monomial(f, bad_split), Error);
    CHECK_THROWS_AS(check_quadratic(f, 2, 2, 1), Error);
    CHECK_THROWS_AS(check_quadratic(f, 0, 4, 1), Error);
    CHECK_THROWS_AS(check_quadratic(f, 0, 2, 0), Error);
    CHECK_THROWS_AS(linearized_bijective(f, 3, 1, 1), Error);
}
