#include "awg/kernels.hpp"

#include <doctest.h>

#include <random>

using namespace awg;
using namespace awg::kernels;

namespace {

Series random_series(std::mt19937_64& rng, std::size_t len) {
    std::uniform_int_distribution<long> coef(-1000, 1000);
    Series s(len);
    for (auto& c : s) c = coef(rng);
    return s;
}

std::vector<std::vector<long>> brute_force(const QuadraticBox& q) {
    std::vector<std::vector<long>> out;
    std::vector<long> a(static_cast<std::size_t>(q.rank), 0);
    while (true) {
        long value = 0;
        for (int i = 0; i < q.rank; ++i) {
            value += 2 * q.linear[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)];
            for (int j = 0; j < q.rank; ++j)
                value += a[static_cast<std::size_t>(i)] * q.gram[static_cast<std::size_t>(i * q.rank + j)] * a[static_cast<std::size_t>(j)];
        }
        if (value <= q.limit) out.push_back(a);
        std::size_t i = a.size();
        while (i > 0 && a[i - 1] == q.box[i - 1]) a[--i] = 0;
        if (i == 0) break;
        ++a[i - 1];
    }
    return out;
}

}  // namespace

TEST_CASE("truncated multiply") {
    Series a{1, 1}, b{1, -1};
    CHECK(truncated_multiply_serial(a, b, 3) == Series{1, 0, -1, 0});
    CHECK(truncated_multiply_parallel(a, b, 0) == Series{1});
    CHECK(truncated_multiply_serial({}, b, 2) == Series{0, 0, 0});

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> len(0, 40);
        auto x = random_series(rng, len(rng)), y = random_series(rng, len(rng));
        const std::size_t degree = len(rng);
        auto serial = truncated_multiply_serial(x, y, degree);
        CHECK(serial == truncated_multiply_parallel(x, y, degree));
        // schoolbook reference
        Series ref(degree + 1, BigInt(0));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size() && i + j <= degree; ++j) ref[i + j] += x[i] * y[j];
        CHECK(serial == ref);
    }
}

TEST_CASE("quadratic box scan") {
    CHECK(max_threads() >= 1);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> rank(1, 3);
        std::uniform_int_distribution<long> g(0, 4), l(0, 5), lim(0, 80), bx(0, 7);
        QuadraticBox q;
        q.rank = rank(rng);
        const auto r = static_cast<std::size_t>(q.rank);
        q.gram.assign(r * r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j) q.gram[i * r + j] = q.gram[j * r + i] = g(rng) + (i == j);
        q.linear.resize(r);
        for (auto& x : q.linear) x = l(rng);
        q.box.resize(r);
        for (auto& x : q.box) x = bx(rng);
        q.limit = lim(rng);
        auto serial = box_scan_serial(q);
        CHECK(serial == box_scan_parallel(q));
        CHECK(serial == brute_force(q));
    }
}
