#include "awg/kernels.hpp"

#ifdef AWG_HAVE_OPENMP
#include <omp.h>
#endif

namespace awg::kernels {

int max_threads() {
#ifdef AWG_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Series truncated_multiply_serial(const Series& a, const Series& b, std::size_t degree) {
    Series c(degree + 1, BigInt(0));
    for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Series truncated_multiply_parallel(const Series& a, const Series& b, std::size_t degree) {
    Series c(degree + 1, BigInt(0));
    const auto n = static_cast<long>(degree);
    // One output coefficient per iteration; higher k do more work, hence dynamic.
#pragma omp parallel for schedule(dynamic, 4)
    for (long k = 0; k <= n; ++k) {
        BigInt acc = 0;
        const auto ku = static_cast<std::size_t>(k);
        for (std::size_t i = 0; i <= ku && i < a.size(); ++i) {
            const std::size_t j = ku - i;
            if (j < b.size()) acc += a[i] * b[j];
        }
        c[ku] = std::move(acc);
    }
    return c;
}

namespace {

std::size_t box_volume(const QuadraticBox& q) {
    std::size_t v = 1;
    for (long b : q.box) v *= static_cast<std::size_t>(b + 1);
    return v;
}

// Decodes a linear index so that increasing indices are lexicographic in the point.
void decode(const QuadraticBox& q, std::size_t index, std::vector<long>& point) {
    for (int i = q.rank - 1; i >= 0; --i) {
        const auto span = static_cast<std::size_t>(q.box[static_cast<std::size_t>(i)] + 1);
        point[static_cast<std::size_t>(i)] = static_cast<long>(index % span);
        index /= span;
    }
}

bool inside(const QuadraticBox& q, const std::vector<long>& a) {
    long value = 0;
    const auto r = static_cast<std::size_t>(q.rank);
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        value += 2 * q.linear[i] * a[i];
        for (std::size_t j = 0; j < r; ++j) value += q.gram[i * r + j] * a[i] * a[j];
    }
    return value <= q.limit;
}

}  // namespace

std::vector<std::vector<long>> box_scan_serial(const QuadraticBox& q) {
    std::vector<std::vector<long>> out;
    std::vector<long> point(static_cast<std::size_t>(q.rank));
    const std::size_t volume = box_volume(q);
    for (std::size_t idx = 0; idx < volume; ++idx) {
        decode(q, idx, point);
        if (inside(q, point)) out.push_back(point);
    }
    return out;
}

std::vector<std::vector<long>> box_scan_parallel(const QuadraticBox& q) {
    const std::size_t volume = box_volume(q);
    std::vector<char> hit(volume, 0);
    const auto n = static_cast<long>(volume);
#pragma omp parallel
    {
        std::vector<long> point(static_cast<std::size_t>(q.rank));
#pragma omp for schedule(static)
        for (long idx = 0; idx < n; ++idx) {
            decode(q, static_cast<std::size_t>(idx), point);
            hit[static_cast<std::size_t>(idx)] = inside(q, point) ? 1 : 0;
        }
    }
    std::vector<std::vector<long>> out;
    std::vector<long> point(static_cast<std::size_t>(q.rank));
    for (std::size_t idx = 0; idx < volume; ++idx) {
        if (!hit[idx]) continue;
        decode(q, idx, point);
        out.push_back(point);
    }
    return out;
}

}  // namespace awg::kernels
