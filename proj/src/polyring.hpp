#ifndef PLANAR2_POLYRING_HPP
#define PLANAR2_POLYRING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gf2r.hpp"

namespace planar2 {

// Dense univariate polynomial over a Field, normalized so the leading
// coefficient is nonzero; the empty coefficient vector is the zero
// polynomial and has no degree.
class Poly {
  public:
    explicit Poly(const Field& f) : field_(&f) {}
    Poly(const Field& f, std::vector<uint64_t> coeffs);

    // Monic product of (X + root) over the given roots.
    static Poly from_roots(const Field& f, std::span<const uint64_t> roots);

    // Minimal polynomial of x over the order-2^m subfield (m must divide r),
    // i.e. the monic product of (X + c) over the distinct conjugates
    // c = x^(2^(m*i)).
    static Poly min_poly_over_subfield(const Field& f, uint64_t x, uint32_t m);

    const Field& field() const { return *field_; }
    std::optional<size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    uint64_t coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::span<const uint64_t> coeffs() const { return coeffs_; }

    uint64_t eval(uint64_t x) const;

    // f(x^3): stretches the coefficient vector threefold.
    Poly compose_xcube() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

  private:
    void normalize();
    static void require_same_field(const Poly& a, const Poly& b);

    const Field* field_;
    std::vector<uint64_t> coeffs_;
};

}  // namespace planar2

#endif
