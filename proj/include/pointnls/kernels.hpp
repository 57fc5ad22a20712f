#pragma once

#include <cstddef>
#include <vector>

#include "pointnls/types.hpp"

// Data-parallel building blocks. Every kernel has a plain serial loop (the
// reference) and an OpenMP version. The parallel reductions accumulate into
// fixed-size chunks and add the chunk partials in index order, so the result
// is bit-identical for any thread count (it differs from the serial
// left-to-right sum only by the chunked association).

namespace pointnls::kernels {

enum class Exec { serial, par };

inline constexpr std::size_t kChunk = 4096;

template <class F>
Complex indexed_sum_serial(std::size_t n, F&& term) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += term(i);
    return acc;
}

template <class F>
Complex indexed_sum_par(std::size_t n, F&& term) {
    if (n < 2 * kChunk) return indexed_sum_serial(n, term);
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<Complex> partial(nchunks);
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
        Complex acc{0.0, 0.0};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<std::size_t>(c)] = acc;
    }
    Complex acc{0.0, 0.0};
    for (const Complex& p : partial) acc += p;
    return acc;
}

template <class F>
Complex indexed_sum(std::size_t n, F&& term, Exec exec) {
    return exec == Exec::serial ? indexed_sum_serial(n, term) : indexed_sum_par(n, term);
}

// elementwise in-place map; trivially deterministic under any schedule
template <class F>
void for_each_index(std::size_t n, F&& body, Exec exec) {
    if (exec == Exec::serial || n < 2 * kChunk) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) body(static_cast<std::size_t>(i));
}

} // namespace pointnls::kernels
