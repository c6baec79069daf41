#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spectable {

/// Serial reference path or the OpenMP kernel. Both produce identical
/// results; the parallel path only changes evaluation order of independent
/// items, never the order of exact reductions.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, n). In parallel mode an exception from any
/// iteration is rethrown after the loop completes.
template <class Body>
void for_each_index(std::size_t n, Execution ex, Body&& body) {
#ifdef _OPENMP
    std::exception_ptr error;
    if (ex == Execution::parallel && n > 1) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(spectable_error)
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        return;
    }
#endif
    (void)ex;
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace spectable
