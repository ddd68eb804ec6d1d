#include "gf2r.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "util.hpp"

namespace planar2 {

namespace {

int poly_degree(uint64_t enc) { return enc == 0 ? -1 : std::bit_width(enc) - 1; }

uint64_t poly_mod(uint64_t a, uint64_t m) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
        a ^= m << (da - dm);
    }
    return a;
}

std::vector<uint64_t> prime_factors_of(uint64_t n) {
    std::vector<uint64_t> primes;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

}  // namespace

bool Field::is_irreducible(uint64_t poly_enc) {
    const int deg = poly_degree(poly_enc);
    if (deg < 1) return false;
    if (deg == 1) return true;
    if ((poly_enc & 1) == 0) return false;  // divisible by x
    for (uint64_t d = 4; poly_degree(d) <= deg / 2; ++d) {
        if (poly_mod(poly_enc, d) == 0) return false;
    }
    // degree-1 divisors: x is excluded by the constant term, x+1 by f(1) != 0
    return std::popcount(poly_enc) % 2 == 1;
}

uint64_t Field::smallest_irreducible(uint32_t r) {
    if (r == 1) return 0b11;  // x+1, the GF(2) convention
    for (uint64_t enc = (uint64_t{1} << r) | 1; enc < uint64_t{1} << (r + 1); enc += 2) {
        if (std::popcount(enc) % 2 == 1 && is_irreducible(enc)) return enc;
    }
    throw_usage("no irreducible polynomial found");  // unreachable for r >= 1
}

Field::Field(uint32_t r, const FieldOptions& opt) : r_(r) {
    if (r < 1 || r > opt.max_degree || r > 32) {
        throw_usage("field degree out of range [1, " + std::to_string(std::min(opt.max_degree, 32u)) + "]");
    }
    q_ = uint64_t{1} << r;
    modulus_ = smallest_irreducible(r);

    const auto primes = prime_factors_of(q_ - 1);
    if (opt.generator_enc != 0) {
        if (opt.generator_enc >= q_ || !has_order_q_minus_1(opt.generator_enc, primes)) {
            throw_usage("requested generator does not have order q-1");
        }
        gen_ = opt.generator_enc;
    } else {
        gen_ = 0;
        for (uint64_t cand = q_ == 2 ? 1 : 2; cand < q_; ++cand) {
            if (has_order_q_minus_1(cand, primes)) {
                gen_ = cand;
                break;
            }
        }
    }

    if (q_ - 1 <= opt.log_table_cap && q_ - 1 <= (uint64_t{1} << 31)) {
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        uint64_t acc = 1;
        for (uint64_t n = 0; n < q_ - 1; ++n) {
            exp_[n] = static_cast<uint32_t>(acc);
            log_[acc] = static_cast<uint32_t>(n);
            acc = raw_mul(acc, gen_);
        }
    }
}

bool Field::has_order_q_minus_1(uint64_t x, const std::vector<uint64_t>& prime_factors) const {
    if (x == 0) return false;
    if (raw_pow(x, q_ - 1) != 1) return false;
    for (uint64_t p : prime_factors) {
        if (raw_pow(x, (q_ - 1) / p) == 1) return false;
    }
    return true;
}

uint64_t Field::raw_mul(uint64_t x, uint64_t y) const {
    uint64_t acc = 0;
    while (y != 0) {
        if (y & 1) acc ^= x;
        y >>= 1;
        x <<= 1;
        if (x & q_) x ^= modulus_;
    }
    return acc;
}

uint64_t Field::raw_pow(uint64_t x, uint64_t e) const {
    uint64_t acc = 1;
    while (e != 0) {
        if (e & 1) acc = raw_mul(acc, x);
        x = raw_mul(x, x);
        e >>= 1;
    }
    return acc;
}

uint64_t Field::add(uint64_t x, uint64_t y) const {
    check(x);
    check(y);
    return x ^ y;
}

uint64_t Field::mul(uint64_t x, uint64_t y) const {
    check(x);
    check(y);
    if (x == 0 || y == 0) return 0;
    if (!log_.empty()) {
        uint64_t n = log_[x] + uint64_t{log_[y]};
        if (n >= q_ - 1) n -= q_ - 1;
        return exp_[n];
    }
    return raw_mul(x, y);
}

uint64_t Field::inv(uint64_t x) const {
    check(x);
    if (x == 0) throw_domain("inverse of zero");
    if (!log_.empty()) {
        return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
    }
    return raw_pow(x, q_ - 2);
}

uint64_t Field::pow(uint64_t x, int64_t n) const {
    check(x);
    if (x == 0) {
        if (n == 0) return 1;
        if (n < 0) throw_domain("negative power of zero");
        return 0;
    }
    const int64_t m = static_cast<int64_t>(q_ - 1);
    uint64_t e = static_cast<uint64_t>(((n % m) + m) % m);
    if (!log_.empty()) {
        return exp_[(log_[x] * e) % (q_ - 1)];
    }
    return raw_pow(x, e);
}

uint64_t Field::frobenius(uint64_t x, uint32_t k) const {
    check(x);
    for (uint32_t i = 0; i < k; ++i) x = mul(x, x);
    return x;
}

uint64_t Field::trace(uint64_t x) const { return partial_trace(x, r_); }

uint64_t Field::partial_trace(uint64_t x, uint32_t j) const {
    check(x);
    if (j < 1 || j > r_) throw_usage("partial trace length must be in [1, r]");
    uint64_t acc = x;
    uint64_t y = x;
    for (uint32_t i = 1; i < j; ++i) {
        y = mul(y, y);
        acc ^= y;
    }
    return acc;
}

bool Field::is_kth_power(uint64_t x, uint64_t k) const {
    check(x);
    if (k < 1) throw_usage("power index must be positive");
    if (x == 0) throw_domain("0 is excluded from the multiplicative group");
    const uint64_t g = std::gcd(k, q_ - 1);
    return pow(x, static_cast<int64_t>((q_ - 1) / g)) == 1;
}

uint64_t Field::dlog(uint64_t x) const {
    check(x);
    if (log_.empty()) throw_capability("discrete-log table not built for this field");
    if (x == 0) throw_domain("discrete log of zero");
    return log_[x];
}

uint64_t Field::exp(uint64_t n) const {
    if (exp_.empty()) throw_capability("discrete-log table not built for this field");
    return exp_[n % (q_ - 1)];
}

std::optional<uint64_t> Field::kth_root(uint64_t x, uint64_t k) const {
    if (k < 1) throw_usage("root index must be positive");
    const uint64_t s = dlog(x);
    const uint64_t m = q_ - 1;
    const uint64_t g = std::gcd(k, m);
    if (s % g != 0) return std::nullopt;
    // solve k*n = s (mod m)
    const uint64_t n = ((s / g) % (m / g)) * mod_inverse((k / g) % (m / g), m / g) % (m / g);
    return exp(n);
}

bool Field::in_subfield(uint64_t x, uint32_t m) const {
    check(x);
    if (m < 1 || r_ % m != 0) throw_usage("subfield degree must divide r");
    return frobenius(x, m) == x;
}

}  // namespace planar2
