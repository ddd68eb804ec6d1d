#ifndef PLANAR2_SEARCH_HPP
#define PLANAR2_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf2r.hpp"

namespace planar2 {

enum class SearchMode { all_degrees, quadratic };

const char* search_mode_name(SearchMode m);

// One exponent's worth of planar coefficients. Coefficients always form a
// union of full cosets of (F_q^*)^g; they are listed exponent-expanded when
// q - 1 <= 2^16 and as coset indices (of dlog(a) mod g) either way.
struct Finding {
    uint64_t t = 0;
    std::optional<std::pair<uint32_t, uint32_t>> ij;
    uint64_t g = 1;
    std::vector<uint64_t> coset_indices;
    std::vector<uint64_t> coefficients;
    uint64_t pair_count = 0;  // number of planar (t, a) pairs, even when not expanded
};

struct SearchResult {
    uint32_t r = 0;
    SearchMode mode = SearchMode::quadratic;
    FieldDesc field;
    std::vector<Finding> findings;  // sorted by (t, i, j)
    uint64_t units_checked = 0;     // exponents (all mode) or (i, j) pairs (quadratic)
    uint64_t planar_pairs = 0;
    uint64_t elapsed_ms = 0;
};

struct SearchOptions {
    unsigned jobs = 1;          // 0 = hardware parallelism
    std::string progress_path;  // empty = no sidecar
    bool resume = false;
    uint64_t max_units = 0;     // stop after this many fresh units (0 = no limit); test hook
};

// Every exponent t in [2, q-1], coefficients reduced to cosets of
// (F_q^*)^gcd(t-2, q-1); exponents that are sums of at most two powers of 2
// go through the linearized fast paths.
SearchResult search_all_degrees(uint32_t r, const SearchOptions& opt = {});

// Every pair 0 <= i < j < r via the image-set coset classification.
SearchResult search_quadratic(uint32_t r, const SearchOptions& opt = {});

// Canonical JSON serialization of the result payload to a file
// (byte-identical across runs and worker counts; elapsed is zeroed).
void emit_result(const SearchResult& result, const std::string& path);

// Progress sidecar, keyed by (r, mode, modulus) and guarded by a whole-file
// checksum. Completed units are skipped on resume; their findings are
// carried in the sidecar so nothing is recomputed.
struct Progress {
    uint32_t r = 0;
    SearchMode mode = SearchMode::quadratic;
    uint64_t modulus = 0;
    std::vector<uint64_t> completed;  // t values, or (i << 8 | j) codes in quadratic mode
    std::vector<Finding> findings;
};

Progress load_progress(const std::string& path);
void save_progress(const Progress& progress, const std::string& path);

}  // namespace planar2

#endif
