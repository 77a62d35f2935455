#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"

namespace domhg {

/// Knobs shared by the enumeration-heavy operations.
struct RunOptions {
    unsigned workers = 1;
    /// Overrides the operation's default size cap.
    std::optional<int> cap;
    /// Re-check every emitted realization against the defining equality.
    bool check_realizations = true;
    /// Largest number of candidate subsets the decomposition search may visit per size.
    std::uint64_t search_budget = 20'000'000;
};

inline unsigned default_workers() noexcept { return std::max(1u, std::thread::hardware_concurrency()); }

/// Effective size limit: the override (or the default), clamped by DOMHG_MAX_N.
inline int effective_cap(int default_cap, const RunOptions& opts) {
    int cap = opts.cap.value_or(default_cap);
    if (const char* env = std::getenv("DOMHG_MAX_N")) {
        char* end = nullptr;
        const long hard = std::strtol(env, &end, 10);
        if (end != env && hard > 0) cap = std::min(cap, static_cast<int>(hard));
    }
    return cap;
}

inline void require_within_cap(int n, int default_cap, const RunOptions& opts, const char* what) {
    const int cap = effective_cap(default_cap, opts);
    if (n > cap)
        fail(ErrorKind::GroundTooLarge, std::string(what) + " on " + std::to_string(n) +
                                            " elements exceeds the cap of " + std::to_string(cap));
}

/// Splits [0, count) into contiguous chunks, one per worker, runs `fn(begin, end)`
/// on each and returns the chunk results in range order. Results are therefore
/// independent of the worker count whenever the caller merges them in order.
template <class Result, class F>
std::vector<Result> parallel_chunks(std::uint64_t count, unsigned workers, F&& fn) {
    workers = std::max(1u, workers);
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, count));
    std::vector<Result> results(static_cast<std::size_t>(chunks));
    auto bounds = [&](std::uint64_t c) { return std::pair{count * c / chunks, count * (c + 1) / chunks}; };
    if (chunks == 1) {
        results[0] = fn(std::uint64_t{0}, count);
        return results;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(chunks));
    for (std::uint64_t c = 0; c < chunks; ++c) {
        threads.emplace_back([&, c] {
            try {
                auto [b, e] = bounds(c);
                results[static_cast<std::size_t>(c)] = fn(b, e);
            } catch (...) {
                errors[static_cast<std::size_t>(c)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace domhg
