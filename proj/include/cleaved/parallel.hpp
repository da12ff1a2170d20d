#pragma once

// Minimal fork-join helper. The worker count comes from CLEAVED_THREADS when
// set, otherwise from the hardware.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace cleaved {

inline unsigned worker_count() {
    if (const char* env = std::getenv("CLEAVED_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            // fall through to the hardware default
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous blocks, runs body(begin, end, worker) on each
/// block and returns once all blocks are done. Worker w always receives the
/// w-th block, so callers that merge per-worker results in worker order get
/// deterministic output. Exceptions from any block are rethrown.
template <class Body>
void parallel_blocks(std::size_t n, unsigned workers, Body&& body) {
    workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, n)));
    if (workers == 1) {
        body(std::size_t{0}, n, 0u);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers, end = n * (w + 1) / workers;
        threads.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace cleaved
