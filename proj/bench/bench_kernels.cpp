// Serial vs parallel timings for the two data-parallel kernels.
//
//   awg_bench [--repeat R]

#include "awg/kernels.hpp"
#include "awg/kostant.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace awg;
using namespace awg::kernels;

namespace {

double best_of(int repeat, const std::function<void()>& body) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        const auto start = std::chrono::steady_clock::now();
        body();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool same) {
    std::printf("%-34s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
                serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs parallel kernel benchmark"};
    int repeat = 3;
    app.add_option("--repeat", repeat, "Timed repetitions per kernel (best is reported)")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", max_threads());
    bool ok = true;

    for (std::size_t degree : {500UL, 2000UL}) {
        // (prod (1 - x^m))^52 has coefficients of a few hundred digits at these degrees.
        const Series a = euler_power(52, static_cast<long>(degree), false);
        const Series b = euler_power(14, static_cast<long>(degree), false);
        Series s, p;
        const double ts = best_of(repeat, [&] { s = truncated_multiply_serial(a, b, degree); });
        const double tp = best_of(repeat, [&] { p = truncated_multiply_parallel(a, b, degree); });
        char name[64];
        std::snprintf(name, sizeof name, "truncated_multiply N=%zu", degree);
        report(name, ts, tp, s == p);
        ok = ok && s == p;
    }

    for (long limit : {2000L, 8000L}) {
        QuadraticBox q;
        q.rank = 4;
        q.gram = {4, 2, 1, 0, 2, 4, 2, 1, 1, 2, 4, 2, 0, 1, 2, 4};
        q.linear = {3, 5, 6, 6};
        q.limit = limit;
        for (int i = 0; i < 4; ++i) {
            long m = 0;
            while (4 * (m + 1) * (m + 1) + 2 * q.linear[static_cast<std::size_t>(i)] * (m + 1) <= limit) ++m;
            q.box.push_back(m);
        }
        std::vector<std::vector<long>> s, p;
        const double ts = best_of(repeat, [&] { s = box_scan_serial(q); });
        const double tp = best_of(repeat, [&] { p = box_scan_parallel(q); });
        char name[64];
        std::snprintf(name, sizeof name, "box_scan rank 4 limit=%ld", limit);
        report(name, ts, tp, s == p);
        ok = ok && s == p;
    }
    return ok ? 0 : 1;
}
