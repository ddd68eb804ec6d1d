#ifndef PLANAR2_PARALLEL_HPP
#define PLANAR2_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace planar2 {

inline unsigned resolve_jobs(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(begin, end) over [0, n) split into dynamic chunks. fn must only
// touch shared state through its own synchronization; exceptions from any
// worker are rethrown on the calling thread (first one wins).
template <typename Fn>
void parallel_chunks(uint64_t n, unsigned jobs, Fn&& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || n < 2) {
        if (n > 0) fn(uint64_t{0}, n);
        return;
    }
    const uint64_t chunk = std::max<uint64_t>(1, n / (uint64_t{jobs} * 8));
    std::atomic<uint64_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        for (;;) {
            const uint64_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            const uint64_t end = std::min(n, begin + chunk);
            try {
                fn(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace planar2

#endif
