#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace gamma0::detail {

// Runs body(i, acc) for every i in [0, n), with index i handled by worker
// i % threads, then folds the per-worker accumulators with +=. Accumulator
// types are integral aggregates, so the result does not depend on `threads`.
template <typename Acc, typename Body>
Acc parallel_strided(std::uint64_t n, unsigned threads, Body body) {
    threads = std::max(1u, threads);
    if (threads == 1 || n < 2) {
        Acc acc{};
        for (std::uint64_t i = 0; i < n; ++i) body(i, acc);
        return acc;
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
    std::vector<Acc> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t i = w; i < n; i += threads) body(i, partial[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Acc acc{};
    for (auto& p : partial) acc += p;
    return acc;
}

}  // namespace gamma0::detail
