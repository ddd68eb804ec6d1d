#include "planarity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace planar2 {

const char* method_name(Method m) {
    switch (m) {
        case Method::definition: return "definition";
        case Method::lemma_mono: return "lemma_mono";
        case Method::lemma_mono2: return "lemma_mono2";
        case Method::matrix_rank: return "matrix_rank";
    }
    return "?";
}

uint64_t normalize_exponent(const Field& f, uint64_t t) {
    if (t == 0) throw_usage("monomial exponent must be positive");
    const uint64_t m = f.order() - 1;
    if (m <= 1) return 1;
    const uint64_t tr = t % m;
    return tr == 0 ? m : tr;
}

Verdict check_table(const Field& f, std::span<const uint64_t> table) {
    const uint64_t q = f.order();
    if (table.size() != q) throw_usage("function table must have exactly q entries");
    for (uint64_t v : table) {
        if (v >= q) throw_usage("function table entry out of range");
    }

    // stamp/who give O(1) per-d reset of the occupancy map
    std::vector<uint64_t> stamp(q, 0);
    std::vector<uint32_t> who(q, 0);
    for (uint64_t d = 1; d < q; ++d) {
        for (uint64_t c = 0; c < q; ++c) {
            const uint64_t v = table[c ^ d] ^ table[c] ^ f.mul(d, c);
            if (stamp[v] == d) {
                Witness w;
                w.kind = Method::definition;
                w.d = d;
                w.c1 = who[v];
                w.c2 = c;
                return {false, Method::definition, w};
            }
            stamp[v] = d;
            who[v] = static_cast<uint32_t>(c);
        }
    }
    return {true, Method::definition, std::nullopt};
}

namespace {

// Rank test for c -> XOR_k c^(2^frob_powers[k]) + s*c via Gaussian
// elimination over GF(2), tracking basis combinations so a kernel element
// falls out on failure (the combination mask is the element encoding).
LinearCheck frobenius_terms_bijective(const Field& f, std::span<const uint32_t> frob_powers,
                                      uint64_t s) {
    const uint32_t r = f.degree();
    std::vector<uint64_t> pivot_val(r, 0), pivot_mask(r, 0);
    std::vector<int> pivot_bit;
    pivot_bit.reserve(r);

    for (uint32_t b = 0; b < r; ++b) {
        const uint64_t e = uint64_t{1} << b;
        uint64_t v = f.mul(s, e);
        for (uint32_t k : frob_powers) v ^= f.frobenius(e, k);
        uint64_t mask = e;
        for (size_t p = 0; p < pivot_bit.size(); ++p) {
            if ((v >> pivot_bit[p]) & 1) {
                v ^= pivot_val[p];
                mask ^= pivot_mask[p];
            }
        }
        if (v == 0) return {false, mask};
        const size_t p = pivot_bit.size();
        pivot_val[p] = v;
        pivot_mask[p] = mask;
        pivot_bit.push_back(std::bit_width(v) - 1);
    }
    return {true, 0};
}

// The shift values s = a^-1 * b^(t-2) over b != 0 form the coset
// a^-1 * (F_q^*)^gcd(t-2, q-1), except that t = 2 collapses it to {a^-1}.
std::vector<uint64_t> shift_coset(const Field& f, uint64_t t, uint64_t a_enc, uint64_t* g_out) {
    const uint64_t q = f.order();
    std::vector<uint64_t> shifts;
    if (t == 2) {
        if (g_out) *g_out = 0;
        shifts.push_back(f.inv(a_enc));
        return shifts;
    }
    const uint64_t tm2 = t == 1 ? q - 2 : t - 2;
    const uint64_t g = std::gcd(tm2, q - 1);
    if (g_out) *g_out = g;
    const uint64_t base = (q - 1 - f.dlog(a_enc)) % (q - 1);
    shifts.reserve((q - 1) / g);
    for (uint64_t k = 0; k < (q - 1) / g; ++k) shifts.push_back(f.exp(base + g * k));
    std::sort(shifts.begin(), shifts.end());
    return shifts;
}

}  // namespace

Verdict check_monomial(const Field& f, const MonomialSpec& spec) {
    const uint64_t q = f.order();
    if (spec.r != f.degree()) throw_usage("monomial spec degree does not match the field");
    if (spec.a_enc == 0 || spec.a_enc >= q) throw_usage("coefficient must be a nonzero field element");
    const uint64_t t = normalize_exponent(f, spec.t);
    if (spec.split) {
        const auto [i, j] = *spec.split;
        if (i >= j || j >= f.degree() || (uint64_t{1} << i) + (uint64_t{1} << j) != spec.t) {
            throw_usage("split (i, j) does not match the exponent");
        }
    }

    const std::vector<uint64_t> shifts = shift_coset(f, t, spec.a_enc, nullptr);

    if (std::popcount(t) <= 2) {
        // affine difference map: decide each shift by matrix rank
        std::vector<uint32_t> terms;
        if (std::popcount(t) == 2) {
            for (uint32_t b = 0; b < 64; ++b) {
                if ((t >> b) & 1) terms.push_back(b);
            }
        }
        for (uint64_t s : shifts) {
            const LinearCheck lc = frobenius_terms_bijective(f, terms, s);
            if (!lc.bijective) {
                Witness w;
                w.kind = Method::matrix_rank;
                w.s = s;
                w.kernel = lc.kernel_enc;
                return {false, Method::matrix_rank, w};
            }
        }
        return {true, Method::matrix_rank, std::nullopt};
    }

    // general exponent: occupancy check of c -> (c+1)^t + c^t + c*s
    std::vector<uint64_t> powt(q);
    for (uint64_t c = 0; c < q; ++c) powt[c] = f.pow(c, static_cast<int64_t>(t));
    std::vector<uint64_t> stamp(q, 0);
    std::vector<uint32_t> who(q, 0);
    uint64_t epoch = 0;
    for (uint64_t s : shifts) {
        ++epoch;
        for (uint64_t c = 0; c < q; ++c) {
            const uint64_t v = powt[c ^ 1] ^ powt[c] ^ f.mul(c, s);
            if (stamp[v] == epoch) {
                Witness w;
                w.kind = Method::lemma_mono;
                w.s = s;
                w.c1 = who[v];
                w.c2 = c;
                return {false, Method::lemma_mono, w};
            }
            stamp[v] = epoch;
            who[v] = static_cast<uint32_t>(c);
        }
    }
    return {true, Method::lemma_mono, std::nullopt};
}

GapImage compute_gap_image(const Field& f, uint32_t i, uint32_t j) {
    if (i >= j || j >= f.degree()) throw_usage("need 0 <= i < j < r");
    const uint64_t q = f.order();
    const uint64_t t = (uint64_t{1} << i) + (uint64_t{1} << j);
    GapImage gi;
    gi.i = i;
    gi.j = j;
    gi.g = std::gcd(t - 2, q - 1);
    gi.coset_hit.assign(gi.g, 0);
    gi.coset_value.assign(gi.g, 0);
    gi.coset_preimage.assign(gi.g, 0);

    const uint64_t e1 = (uint64_t{1} << i) - 1;
    const uint64_t e2 = (uint64_t{1} << j) - 1;
    uint64_t remaining = gi.g;
    for (uint64_t x = 1; x < q && remaining > 0; ++x) {
        const uint64_t n = f.dlog(x);
        const uint64_t v = (e1 == 0 ? 1 : f.exp(n * e1)) ^ f.exp(n * e2);
        if (v == 0) continue;
        const uint64_t m = f.dlog(v) % gi.g;
        if (!gi.coset_hit[m]) {
            gi.coset_hit[m] = 1;
            gi.coset_value[m] = v;
            gi.coset_preimage[m] = x;
            --remaining;
        }
    }
    return gi;
}

Verdict check_quadratic(const Field& f, uint32_t i, uint32_t j, uint64_t a_enc) {
    if (a_enc == 0 || a_enc >= f.order()) throw_usage("coefficient must be a nonzero field element");
    const GapImage gi = compute_gap_image(f, i, j);
    const uint64_t m = inverse_coset_index(f, a_enc, gi.g);
    if (!gi.coset_hit[m]) return {true, Method::lemma_mono2, std::nullopt};
    Witness w;
    w.kind = Method::lemma_mono2;
    w.s = gi.coset_value[m];
    w.preimage = gi.coset_preimage[m];
    return {false, Method::lemma_mono2, w};
}

LinearCheck linearized_bijective(const Field& f, uint32_t i, uint32_t j, uint64_t s_enc) {
    if (i >= j || j >= f.degree()) throw_usage("need 0 <= i < j < r");
    if (s_enc >= f.order()) throw_usage("element encoding out of range for this field");
    const uint32_t terms[2] = {i, j};
    return frobenius_terms_bijective(f, terms, s_enc);
}

bool reverify_witness(const Field& f, const Witness& w, uint64_t t, uint64_t a_enc,
                      std::span<const uint64_t> table) {
    const uint64_t q = f.order();
    const uint64_t tn = normalize_exponent(f, t);

    // For coset-based witnesses, s must really be a legal shift value,
    // i.e. an element of a^-1 * (F_q^*)^(t-2).
    auto shift_is_legal = [&](uint64_t s) {
        if (s == 0 || a_enc == 0) return false;
        if (tn == 2) return s == f.inv(a_enc);
        const uint64_t tm2 = tn == 1 ? q - 2 : tn - 2;
        return f.is_kth_power(f.mul(a_enc, s), tm2);
    };

    switch (w.kind) {
        case Method::definition: {
            if (table.size() != q || w.d == 0 || w.c1 == w.c2) return false;
            const uint64_t v1 = table[w.c1 ^ w.d] ^ table[w.c1] ^ f.mul(w.d, w.c1);
            const uint64_t v2 = table[w.c2 ^ w.d] ^ table[w.c2] ^ f.mul(w.d, w.c2);
            return v1 == v2;
        }
        case Method::lemma_mono: {
            if (w.c1 == w.c2 || !shift_is_legal(w.s)) return false;
            auto phi = [&](uint64_t c) {
                return f.pow(c ^ 1, static_cast<int64_t>(tn)) ^ f.pow(c, static_cast<int64_t>(tn)) ^
                       f.mul(c, w.s);
            };
            return phi(w.c1) == phi(w.c2);
        }
        case Method::lemma_mono2: {
            if (w.preimage == 0 || !shift_is_legal(w.s)) return false;
            if (std::popcount(tn) != 2) return false;
            const uint32_t i = static_cast<uint32_t>(std::countr_zero(tn));
            const uint32_t j = static_cast<uint32_t>(std::bit_width(tn) - 1);
            const uint64_t g = f.pow(w.preimage, static_cast<int64_t>((uint64_t{1} << i) - 1)) ^
                               f.pow(w.preimage, static_cast<int64_t>((uint64_t{1} << j) - 1));
            return g == w.s;
        }
        case Method::matrix_rank: {
            if (w.kernel == 0 || w.kernel >= q || !shift_is_legal(w.s)) return false;
            uint64_t v = f.mul(w.s, w.kernel);
            if (std::popcount(tn) == 2) {
                const uint32_t i = static_cast<uint32_t>(std::countr_zero(tn));
                const uint32_t j = static_cast<uint32_t>(std::bit_width(tn) - 1);
                v ^= f.frobenius(w.kernel, i) ^ f.frobenius(w.kernel, j);
            } else if (std::popcount(tn) != 1) {
                return false;
            }
            return v == 0;
        }
    }
    return false;
}

}  // namespace planar2
