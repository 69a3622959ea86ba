// include/qrpat/parallel.hpp

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qrpat {

/// Worker count: QRPAT_THREADS when set to a positive integer, else the
/// hardware concurrency, never more than `cap`.
inline unsigned worker_count(unsigned cap) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QRPAT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) n = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            // ignore malformed values
        }
    }
    return std::max(1u, std::min(n, cap));
}

/// Runs fn(k) for k in [0, count) on up to `threads` workers. Indices are
/// striped across workers; fn must only write state owned by index k.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t k = t; k < count; k += threads) fn(k);
        });
    }
}

}  // namespace qrpat
