#ifndef PLANAR2_PLANARITY_HPP
#define PLANAR2_PLANARITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gf2r.hpp"
#include "util.hpp"

namespace planar2 {

// F is planar when c -> F(c+d) + F(c) + d*c is a bijection for every d != 0.
// Three deciders are implemented: the definition on a full function table,
// the coset-reduced check on the shifted difference map c -> (c+1)^t + c^t + c*s
// with s ranging over a^-1 * (F_q^*)^gcd(t-2, q-1), and the image-set
// disjointness test for exponents 2^i + 2^j. Affine difference maps are
// decided by GF(2)-matrix rank instead of value enumeration.

enum class Method { definition, lemma_mono, lemma_mono2, matrix_rank };

const char* method_name(Method m);

struct Witness {
    Method kind = Method::definition;
    // definition:   d, c1, c2 with colliding difference-map values
    // lemma_mono:   s, c1, c2 with colliding shifted-map values
    // lemma_mono2:  s in both sets, preimage x with G(x) == s
    // matrix_rank:  s, nonzero kernel element of the linear part
    uint64_t d = 0;
    uint64_t s = 0;
    uint64_t c1 = 0;
    uint64_t c2 = 0;
    uint64_t preimage = 0;
    uint64_t kernel = 0;
};

struct Verdict {
    bool planar = false;
    Method method = Method::definition;
    std::optional<Witness> witness;  // present iff !planar
};

struct MonomialSpec {
    uint32_t r = 0;
    uint64_t t = 0;       // positive; reduced mod q-1 into [1, q-1] before checking
    uint64_t a_enc = 0;   // nonzero coefficient
    std::optional<std::pair<uint32_t, uint32_t>> split;  // (i, j) with t == 2^i + 2^j
};

// Definition check over a full value table (table[c] = F(c), q entries).
// Witness is the first collision in (d, then c) encoding order.
Verdict check_table(const Field& f, std::span<const uint64_t> table);

// Coset-reduced monomial check; needs the field's dlog table.
Verdict check_monomial(const Field& f, const MonomialSpec& spec);

// Image-set disjointness check for t = 2^i + 2^j (0 <= i < j < r).
Verdict check_quadratic(const Field& f, uint32_t i, uint32_t j, uint64_t a_enc);

struct LinearCheck {
    bool bijective = false;
    uint64_t kernel_enc = 0;  // nonzero element mapping to 0, valid iff !bijective
};

// Rank test for the GF(2)-linear map c -> c^(2^i) + c^(2^j) + s*c.
LinearCheck linearized_bijective(const Field& f, uint32_t i, uint32_t j, uint64_t s_enc);

// Image of x -> x^(2^i - 1) + x^(2^j - 1) over nonzero x, classified into
// cosets of (F_q^*)^g with g = gcd(2^i + 2^j - 2, q-1). Shared by the
// quadratic checker, the searches and the theorem verifiers.
struct GapImage {
    uint32_t i = 0;
    uint32_t j = 0;
    uint64_t g = 1;
    std::vector<uint8_t> coset_hit;        // size g, indexed by dlog(value) mod g
    std::vector<uint64_t> coset_value;     // witness value per hit coset
    std::vector<uint64_t> coset_preimage;  // smallest-encoding preimage per hit coset
};

GapImage compute_gap_image(const Field& f, uint32_t i, uint32_t j);

// Coset of a^-1 in F_q^* / (F_q^*)^g, as an index usable with GapImage.
inline uint64_t inverse_coset_index(const Field& f, uint64_t a_enc, uint64_t g) {
    return (f.order() - 1 - f.dlog(a_enc)) % g;
}

// Reduces an exponent into [1, q-1]; monomial maps agree mod q-1 on F_q^*.
uint64_t normalize_exponent(const Field& f, uint64_t t);

// Re-checks a witness by direct field arithmetic. The table argument is only
// needed for definition witnesses. Returns true when the witness is valid
// evidence of non-planarity for the given parameters.
bool reverify_witness(const Field& f, const Witness& w, uint64_t t, uint64_t a_enc,
                      std::span<const uint64_t> table = {});

}  // namespace planar2

#endif
