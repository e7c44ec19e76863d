#pragma once

// Data-parallel search over a flat index space. Every kernel that uses this
// has a serial path kept as the reference the parallel path is tested
// against; both return the failure with the smallest index.

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace opint {

enum class Exec { Serial, Parallel };

struct Failure {
    std::size_t index;
    std::string message;
};

inline int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// `check(i)` returns a message when instance i fails. Exceptions thrown by
/// `check` are reported as failures of that instance.
template <class Check>
std::optional<Failure> find_first_failure(std::size_t count, Check&& check, Exec exec) {
    auto guarded = [&](std::size_t i) -> std::optional<std::string> {
        try {
            return check(i);
        } catch (const std::exception& e) {
            return std::string("exception: ") + e.what();
        }
    };
    if (exec == Exec::Serial || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            if (auto msg = guarded(i)) return Failure{i, std::move(*msg)};
        return std::nullopt;
    }
    std::atomic<std::size_t> best{count};
    std::optional<Failure> found;
    const auto n = static_cast<long long>(count);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long s = 0; s < n; ++s) {
        const auto i = static_cast<std::size_t>(s);
        if (i >= best.load(std::memory_order_relaxed)) continue;
        if (auto msg = guarded(i)) {
#if defined(_OPENMP)
#pragma omp critical(opint_first_failure)
#endif
            {
                if (i < best.load()) {
                    best.store(i);
                    found = Failure{i, std::move(*msg)};
                }
            }
        }
    }
    return found;
}

} // namespace opint
