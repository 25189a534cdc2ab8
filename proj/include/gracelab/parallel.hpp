#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace gracelab {

/// GRACELAB_JOBS if set to a positive integer, else the hardware thread count.
inline int default_jobs()
{
    if (const char* env = std::getenv("GRACELAB_JOBS")) {
        try {
            const int jobs = std::stoi(env);
            if (jobs > 0) return jobs;
        } catch (const std::exception&) {
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

/// Splits [0, count) into contiguous chunks, runs `work(begin, end)` for each
/// chunk on up to `jobs` threads, and folds the partial results with
/// `merge(acc, part)` in chunk order. The chunking does not depend on `jobs`,
/// so any order-sensitive merge gives the same result for every job count.
template <typename Result, typename Work, typename Merge>
Result parallel_reduce(std::uint64_t count, int jobs, Work work, Merge merge, std::uint64_t chunks = 64)
{
    chunks = std::max<std::uint64_t>(1, std::min(chunks, count));
    std::vector<Result> parts(static_cast<std::size_t>(chunks));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t begin = count * c / chunks;
        const std::uint64_t end = count * (c + 1) / chunks;
        try {
            parts[static_cast<std::size_t>(c)] = work(begin, end);
        } catch (...) {
            errors[static_cast<std::size_t>(c)] = std::current_exception();
        }
    };
    const auto workers = static_cast<std::uint64_t>(std::max(1, jobs));
    if (workers == 1 || chunks == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < std::min(workers, chunks); ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t c = w; c < chunks; c += workers) run_chunk(c);
            });
        }
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Result acc{};
    for (auto& part : parts) merge(acc, std::move(part));
    return acc;
}

} // namespace gracelab
