#ifndef PLANAR2_UTIL_HPP
#define PLANAR2_UTIL_HPP

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

namespace planar2 {

// Flat bit set sized at runtime. Used for occupancy tests and image sets
// where std::vector<bool> would be too slow to reset.
class BitSet {
  public:
    BitSet() = default;
    explicit BitSet(size_t bits) { resize(bits); }

    void resize(size_t bits) {
        bits_ = bits;
        words_.assign((bits + 63) / 64, 0);
    }

    void reset() { std::memset(words_.data(), 0, words_.size() * sizeof(uint64_t)); }

    bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }

    // Sets bit i and reports whether it was already set.
    bool test_and_set(size_t i) {
        uint64_t& w = words_[i >> 6];
        const uint64_t mask = uint64_t{1} << (i & 63);
        const bool old = w & mask;
        w |= mask;
        return old;
    }

    size_t size() const { return bits_; }

  private:
    size_t bits_ = 0;
    std::vector<uint64_t> words_;
};

// FNV-1a 64-bit, used as a whole-file checksum for progress sidecars.
inline uint64_t fnv1a64(const void* data, size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

// Modular inverse of a mod m for gcd(a, m) == 1, via extended Euclid.
inline uint64_t mod_inverse(uint64_t a, uint64_t m) {
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(m), new_r = static_cast<int64_t>(a % m);
    while (new_r != 0) {
        const int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

}  // namespace planar2

#endif
