#pragma once

// Data-parallel inner loops. Each kernel has a serial reference implementation with the
// same signature; the parallel versions use OpenMP when the library is built with it and
// must return identical results.

#include "awg/geometry.hpp"

#include <vector>

namespace awg::kernels {

using Series = std::vector<BigInt>;

/// Coefficients 0..degree of a * b (inputs may be shorter; missing terms are zero).
Series truncated_multiply_serial(const Series& a, const Series& b, std::size_t degree);
Series truncated_multiply_parallel(const Series& a, const Series& b, std::size_t degree);

/// Nonnegative integer points a in the box 0 <= a_i <= box[i] with
/// a^T gram a + 2 linear . a <= limit. Gram and linear must be entrywise nonnegative.
struct QuadraticBox {
    int rank = 0;
    std::vector<long> gram;    // rank x rank, row-major
    std::vector<long> linear;  // rank
    long limit = 0;
    std::vector<long> box;     // inclusive upper bounds
};

/// Points in lexicographic order.
std::vector<std::vector<long>> box_scan_serial(const QuadraticBox& q);
std::vector<std::vector<long>> box_scan_parallel(const QuadraticBox& q);

/// Number of OpenMP threads the parallel kernels use (1 without OpenMP).
int max_threads();

}  // namespace awg::kernels
