#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace qdivisor::cli {

unsigned default_threads();

/// Runs body(first, last) over [lo, hi] split into chunks on `threads`
/// workers. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_chunks(std::uint64_t lo, std::uint64_t hi, unsigned threads, Body&& body,
                     std::uint64_t chunk = 1024) {
    if (lo > hi) return;
    const std::uint64_t span = hi - lo + 1;
    const std::uint64_t chunks = (span + chunk - 1) / chunk;
    threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, chunks));

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
                const std::uint64_t first = lo + c * chunk;
                body(first, std::min(hi, first + chunk - 1));
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = chunks;
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
}

/// Smallest n in [lo, hi] for which ok(n) is false, or nothing.
template <typename Pred>
std::optional<std::uint64_t> first_failure(std::uint64_t lo, std::uint64_t hi, unsigned threads, Pred&& ok) {
    std::atomic<std::uint64_t> smallest{UINT64_MAX};
    parallel_chunks(lo, hi, threads, [&](std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t n = first; n <= last && n < smallest.load(); ++n) {
            if (!ok(n)) {
                std::uint64_t seen = smallest.load();
                while (n < seen && !smallest.compare_exchange_weak(seen, n)) {
                }
                return;
            }
        }
    });
    if (smallest.load() == UINT64_MAX) return std::nullopt;
    return smallest.load();
}

} // namespace qdivisor::cli
