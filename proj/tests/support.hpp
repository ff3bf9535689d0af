#pragma once

// Shared generators and oracles for the test binaries.

#include "awg/affine_weyl.hpp"

#include <random>
#include <utility>
#include <vector>

namespace awg::testing {

struct TypeRank {
    RootType type;
    int rank;
};

/// Every supported (type, rank) with rank <= max_rank.
inline std::vector<TypeRank> systems_up_to(int max_rank) {
    std::vector<TypeRank> out;
    for (int r = 1; r <= max_rank; ++r) out.push_back({RootType::A, r});
    for (int r = 2; r <= max_rank; ++r) out.push_back({RootType::B, r});
    for (int r = 2; r <= max_rank; ++r) out.push_back({RootType::C, r});
    for (int r = 3; r <= max_rank; ++r) out.push_back({RootType::D, r});
    if (max_rank >= 2) out.push_back({RootType::G, 2});
    return out;
}

inline std::vector<int> random_word(std::mt19937_64& rng, int generators, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(0, generators - 1);
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (int& g : w) g = gen(rng);
    return w;
}

/// a / b in lowest terms.
inline Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

inline Rational random_rational(std::mt19937_64& rng, long range = 6) {
    std::uniform_int_distribution<long> num(-range, range), den(1, 4);
    return frac(num(rng), den(rng));
}

inline AmbientVector random_vector(std::mt19937_64& rng, std::size_t dim, long range = 6) {
    AmbientVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = random_rational(rng, range);
    return v;
}

/// prod_{m=1}^{N} (1 - x^m)^d mod x^{N+1}, one factor at a time.
inline std::vector<BigInt> naive_euler_power(long d, long n) {
    std::vector<BigInt> c(static_cast<std::size_t>(n + 1), BigInt(0));
    c[0] = 1;
    for (long m = 1; m <= n; ++m)
        for (long rep = 0; rep < d; ++rep)
            for (long k = n; k >= m; --k) c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - m)];
    return c;
}

}  // namespace awg::testing
