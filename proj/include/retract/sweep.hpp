#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace retract {

// Result of one item of a sweep; an exception thrown by the kernel is
// captured as its message.
template <class R>
struct Outcome {
    std::optional<R> value;
    std::string error;
    bool ok() const { return value.has_value(); }
};

namespace detail {
template <class F>
auto run_one(F& f, std::size_t i) -> Outcome<decltype(f(i))> {
    try {
        return {f(i), {}};
    } catch (const std::exception& e) {
        return {std::nullopt, e.what()};
    }
}
}  // namespace detail

// Applies f to 0..count-1 in order on the calling thread.
template <class F>
auto serial_map(std::size_t count, F f) -> std::vector<Outcome<decltype(f(std::size_t{}))>> {
    std::vector<Outcome<decltype(f(std::size_t{}))>> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = detail::run_one(f, i);
    return out;
}

// Same results as serial_map, computed by an OpenMP team. f must be safe
// to call concurrently; results keep index order.
template <class F>
auto parallel_map(std::size_t count, F f, int threads = 0) -> std::vector<Outcome<decltype(f(std::size_t{}))>> {
    std::vector<Outcome<decltype(f(std::size_t{}))>> out(count);
    const long long n = static_cast<long long>(count);
    if (threads <= 0) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = detail::run_one(f, static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = detail::run_one(f, static_cast<std::size_t>(i));
    }
    return out;
}

}  // namespace retract
