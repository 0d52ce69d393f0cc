#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <thread>
#include <vector>

namespace rehearsal_lab {

/// SplitMix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed of the independent stream for trial `index` under master `seed`.
inline constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    return mix64(mix64(seed) ^ mix64(index + 0x632BE59BD9B4E019ull));
}

inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index)
{
    return std::mt19937_64(substream_seed(seed, index));
}

/// Runs body(i) for i in [0, count) across worker threads. Each index is
/// processed exactly once; results must be written to per-index slots so the
/// caller can reduce them in index order.
template <typename Body>
void parallel_for_index(std::size_t count, Body&& body, unsigned threads = 0)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(threads);
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += threads)
                    body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace rehearsal_lab
