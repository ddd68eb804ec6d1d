#include "polyring.hpp"

#include <algorithm>

namespace planar2 {

Poly::Poly(const Field& f, std::vector<uint64_t> coeffs) : field_(&f), coeffs_(std::move(coeffs)) {
    for (uint64_t c : coeffs_) {
        if (c >= f.order()) throw_usage("polynomial coefficient out of range for this field");
    }
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_) throw_usage("polynomials belong to different field contexts");
}

std::optional<size_t> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Poly Poly::from_roots(const Field& f, std::span<const uint64_t> roots) {
    Poly p(f, {1});
    for (uint64_t root : roots) {
        // multiply by (X + root); char 2, so X - root = X + root
        std::vector<uint64_t> next(p.coeffs_.size() + 1, 0);
        for (size_t i = 0; i < p.coeffs_.size(); ++i) {
            next[i + 1] ^= p.coeffs_[i];
            next[i] ^= f.mul(p.coeffs_[i], root);
        }
        p.coeffs_ = std::move(next);
        p.normalize();
    }
    return p;
}

Poly Poly::min_poly_over_subfield(const Field& f, uint64_t x, uint32_t m) {
    if (m < 1 || f.degree() % m != 0) throw_usage("subfield degree must divide r");
    std::vector<uint64_t> conjugates;
    uint64_t y = x;
    do {
        conjugates.push_back(y);
        y = f.frobenius(y, m);
    } while (y != x);
    return from_roots(f, conjugates);
}

uint64_t Poly::eval(uint64_t x) const {
    if (x >= field_->order()) throw_usage("element encoding out of range for this field");
    uint64_t acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = field_->mul(acc, x) ^ coeffs_[i];
    }
    return acc;
}

Poly Poly::compose_xcube() const {
    Poly out(*field_);
    if (coeffs_.empty()) return out;
    out.coeffs_.assign(3 * (coeffs_.size() - 1) + 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[3 * i] = coeffs_[i];
    out.normalize();
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::require_same_field(a, b);
    Poly out(*a.field_);
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] ^= a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] ^= b.coeffs_[i];
    out.normalize();
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::require_same_field(a, b);
    Poly out(*a.field_);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            out.coeffs_[i + j] ^= a.field_->mul(a.coeffs_[i], b.coeffs_[j]);
        }
    }
    out.normalize();
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    Poly::require_same_field(a, b);
    return a.coeffs_ == b.coeffs_;
}

}  // namespace planar2
