#ifndef PLANAR2_GF2R_HPP
#define PLANAR2_GF2R_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "error.hpp"

namespace planar2 {

struct FieldDesc {
    uint32_t r = 0;
    uint64_t modulus = 0;
    uint64_t generator = 0;
};

struct FieldOptions {
    uint32_t max_degree = 32;
    // Discrete-log tables are built iff q-1 <= log_table_cap.
    uint64_t log_table_cap = uint64_t{1} << 26;
    // 0 = pick the smallest-encoding primitive element.
    uint64_t generator_enc = 0;
};

// GF(2^r) in the polynomial basis. Elements are r-bit encodings: bit i is
// the coefficient of x^i. The modulus is the irreducible degree-r polynomial
// over GF(2) with the smallest integer encoding and the generator is the
// smallest-encoding element of multiplicative order q-1, so any two fields
// of the same degree are bit-identical.
class Field {
  public:
    explicit Field(uint32_t r, const FieldOptions& opt = {});

    uint32_t degree() const { return r_; }
    uint64_t order() const { return q_; }
    uint64_t modulus() const { return modulus_; }
    uint64_t generator() const { return gen_; }
    bool has_log_table() const { return !log_.empty(); }
    FieldDesc desc() const { return {r_, modulus_, gen_}; }

    uint64_t add(uint64_t x, uint64_t y) const;
    uint64_t mul(uint64_t x, uint64_t y) const;
    uint64_t square(uint64_t x) const { return mul(x, x); }
    uint64_t inv(uint64_t x) const;

    // x^n with the exponent reduced mod q-1 for nonzero x; negative n means
    // inverse powers. 0^0 = 1 and 0^n = 0 for n > 0, so monomial maps are
    // total on the field; 0^n with n < 0 is a domain error.
    uint64_t pow(uint64_t x, int64_t n) const;

    // x^(2^k), k-fold squaring.
    uint64_t frobenius(uint64_t x, uint32_t k) const;

    // trace(x) = sum of x^(2^i) for i in [0, r); always 0 or 1.
    uint64_t trace(uint64_t x) const;

    // partial_trace(x, j) = sum of x^(2^i) for i in [0, j); for x in the
    // order-2^j subfield and j | r this is that subfield's absolute trace.
    uint64_t partial_trace(uint64_t x, uint32_t j) const;

    // True iff x is in the image of y -> y^k on nonzero elements,
    // i.e. x^((q-1)/gcd(k, q-1)) == 1. x must be nonzero.
    bool is_kth_power(uint64_t x, uint64_t k) const;

    // Discrete log base generator; requires the log table.
    uint64_t dlog(uint64_t x) const;

    // generator^n for any n (reduced mod q-1); requires the log table.
    uint64_t exp(uint64_t n) const;

    // Some y with y^k == x, if one exists; requires the log table.
    std::optional<uint64_t> kth_root(uint64_t x, uint64_t k) const;

    // True iff x lies in the order-2^m subfield, i.e. x^(2^m) == x.
    bool in_subfield(uint64_t x, uint32_t m) const;

    // Irreducibility over GF(2) by trial division; poly_enc encodes a monic
    // polynomial with bit i = coefficient of x^i.
    static bool is_irreducible(uint64_t poly_enc);
    static uint64_t smallest_irreducible(uint32_t r);

  private:
    void check(uint64_t x) const {
        if (x >= q_) throw_usage("element encoding out of range for this field");
    }
    uint64_t raw_mul(uint64_t x, uint64_t y) const;
    uint64_t raw_pow(uint64_t x, uint64_t e) const;
    bool has_order_q_minus_1(uint64_t x, const std::vector<uint64_t>& prime_factors) const;

    uint32_t r_;
    uint64_t q_;
    uint64_t modulus_;
    uint64_t gen_;
    std::vector<uint32_t> log_;  // size q, log_[0] unused
    std::vector<uint32_t> exp_;  // size q-1, exp_[n] = generator^n
};

}  // namespace planar2

#endif
