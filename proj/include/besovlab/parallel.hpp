#pragma once

#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace besovlab {

// Evaluates f(0..count-1) on a small worker pool and returns the results in
// index order; the first exception (by index) is rethrown. Results are
// bitwise independent of the worker count.
template <typename F>
auto parallel_map(int count, F&& f) {
    using T = decltype(f(0));
    std::vector<std::optional<T>> slots(static_cast<size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
    std::atomic<int> next{0};
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(std::max(count, 1)));

    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                slots[static_cast<size_t>(i)].emplace(f(i));
            } catch (...) {
                errors[static_cast<size_t>(i)] = std::current_exception();
            }
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<T> out;
    out.reserve(static_cast<size_t>(count));
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace besovlab
