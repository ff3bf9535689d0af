#include "awg/zperm.hpp"
#include "golden.hpp"
#include "perm_support.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace awg;
using namespace awg::testing;

namespace {

AffineElement gen(const AffineContext& ctx, int i) { return generators(ctx)[static_cast<std::size_t>(i)]; }

int permutation_sign(std::vector<long> p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

}  // namespace

TEST_CASE("windows and apply") {
    auto a3 = family_context(PermFamily::A, 3);
    auto s0 = star(a3, gen(a3, 0));
    CHECK(s0.window() == std::vector<long>{0, 2, 4});
    CHECK(s0.apply(0) == 1);
    CHECK(s0.apply(7) == 6);
    CHECK(s0.apply(9) == 10);
    CHECK(s0.apply(-2) == -3);
    CHECK(compose(s0, s0) == PeriodicPermutation::identity(PermFamily::A, 3));
    CHECK(star(a3, identity_element(a3)) == PeriodicPermutation::identity(PermFamily::A, 3));

    auto s1 = star(a3, gen(a3, 1));
    CHECK(s1.window() == std::vector<long>{2, 1, 3});

    auto c2 = family_context(PermFamily::C, 2);
    CHECK(star(c2, gen(c2, 0)).apply(-2) == -3);

    auto g2 = family_context(PermFamily::G, 2);
    auto gs0 = star(g2, gen(g2, 0));
    CHECK(gs0.apply(1) == 6);
    CHECK(gs0.apply(2) == 7);
    CHECK(gs0.apply(3) == 13);

    auto id = PeriodicPermutation::identity(PermFamily::B, 3);
    for (long z = -20; z <= 20; ++z) CHECK(id.apply(z) == z);
    CHECK_THROWS_AS(PeriodicPermutation(PermFamily::A, 3, {1, 4, 3}), NotAPermutation);
    CHECK_THROWS_AS(PeriodicPermutation(PermFamily::A, 3, {1, 2}), NotAPermutation);
    CHECK_THROWS_AS(compose(id, PeriodicPermutation::identity(PermFamily::C, 3)), Error);
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(3);
    for (auto [family, n] : families_up_to(3)) {
        auto ctx = family_context(family, n);
        const int g = static_cast<int>(generators(ctx).size());
        for (int trial = 0; trial < 20; ++trial) {
            auto f = star(ctx, element_from_word(ctx, random_word(rng, g, 12)));
            CHECK(compose(f, inverse(f)) == PeriodicPermutation::identity(family, n));
            CHECK(compose(inverse(f), f) == PeriodicPermutation::identity(family, n));
        }
    }
}

TEST_CASE("membership examples") {
    CHECK(check_membership(PeriodicPermutation::identity(PermFamily::A, 3)));
    auto shift = check_membership(PeriodicPermutation(PermFamily::A, 3, {2, 3, 4}));
    CHECK_FALSE(shift.member);
    CHECK(shift.reason.find("(2)") != std::string::npos);
    for (int n = 2; n <= 5; ++n) {
        std::vector<long> minus;
        for (long i = -n; i <= n; ++i) minus.push_back(-i);
        CHECK(check_membership(PeriodicPermutation(PermFamily::C, n, minus)));
    }
    // antisymmetry broken at 1
    CHECK_FALSE(check_membership(PeriodicPermutation(PermFamily::C, 2, {-2, -1, 0, 6, 2})));
    // B2 sign change of e_1 together with a translation by p in the first coordinate
    auto b = PeriodicPermutation(PermFamily::B, 2, {-2, -4, 0, 4, 2});
    CHECK_FALSE(check_membership(b));
    CHECK(check_membership(PeriodicPermutation(PermFamily::CAlt, 2, {2, 1, 0, -1, -2, 3})));
    CHECK_FALSE(check_membership(PeriodicPermutation(PermFamily::CAlt, 2, {-2, -1, 0, 1, 2, -3})));
}

TEST_CASE("B parity variants") {
    for (int n = 2; n <= 4; ++n) {
        auto id = PeriodicPermutation::identity(PermFamily::B, n);
        for (auto v : {BParity::sum, BParity::residues, BParity::count_above}) CHECK(check_membership_B_alt(id, v));
    }
    auto b2 = family_context(PermFamily::B, 2);
    auto s0 = star(b2, gen(b2, 0));
    for (auto v : {BParity::sum, BParity::residues, BParity::count_above}) CHECK(check_membership_B_alt(s0, v));
    CHECK_THROWS_AS(check_membership_B_alt(PeriodicPermutation::identity(PermFamily::C, 2), BParity::sum), Error);
}

TEST_CASE("unstar examples") {
    auto a3 = family_context(PermFamily::A, 3);
    CHECK(unstar(a3, PeriodicPermutation::identity(PermFamily::A, 3)) == identity_element(a3));
    CHECK(unstar(a3, PeriodicPermutation(PermFamily::A, 3, {0, 2, 4})) == gen(a3, 0));
    CHECK_THROWS_AS(unstar(a3, PeriodicPermutation(PermFamily::A, 3, {2, 3, 4})), NotInOrbit);
    CHECK_THROWS_AS(unstar(a3, PeriodicPermutation::identity(PermFamily::A, 4)), Error);
}

TEST_CASE("alternative C representation") {
    for (int n = 2; n <= 4; ++n) {
        auto ctx = permutation_alt_context_C(n);
        CHECK(star_alt_C(n, identity_element(ctx)) == PeriodicPermutation::identity(PermFamily::CAlt, n));
        auto s0 = star_alt_C(n, gen(ctx, 0));
        CHECK(s0.apply(n) == n + 2);
        CHECK(s0.apply(n + 1) == n + 1);
        CHECK(s0.apply(-(n + 1)) == -(n + 1));
        for (long j = 1; j < n; ++j) CHECK(s0.apply(j) == j);
        // s_i acts the same way on [-n, n] in both representations
        auto plain = family_context(PermFamily::C, n);
        for (int i = 1; i <= n; ++i)
            for (long z = -n; z <= n; ++z) CHECK(star_alt_C(n, gen(ctx, i)).apply(z) == star(plain, gen(plain, i)).apply(z));
    }
}

TEST_CASE("type A length from the window") {
    for (int n = 2; n <= 4; ++n) {
        auto ctx = family_context(PermFamily::A, n);
        CHECK(length_from_zperm_A(PeriodicPermutation::identity(PermFamily::A, n)) == 0);
        CHECK(length_from_zperm_A(star(ctx, gen(ctx, 0))) == 1);
        for (const auto& [mu, entry] : bfs_enumerate(ctx, 10))
            CHECK(length_from_zperm_A(star(ctx, element_from_word(ctx, entry.word))) == entry.length);
    }
}

TEST_CASE("homomorphism, membership and round trip") {
    std::mt19937_64 rng(2024);
    for (auto [family, n] : families_up_to(4)) {
        auto ctx = family_context(family, n);
        CAPTURE(family_name(family));
        CAPTURE(n);
        const int g = static_cast<int>(generators(ctx).size());
        for (int trial = 0; trial < 60; ++trial) {
            auto w = element_from_word(ctx, random_word(rng, g, 16));
            auto u = element_from_word(ctx, random_word(rng, g, 16));
            auto fw = star(ctx, w);
            CHECK(star(ctx, compose(ctx, w, u)) == compose(fw, star(ctx, u)));
            CHECK(check_membership(fw).member);
            CHECK(unstar(ctx, fw) == w);
            auto tweaked = perturb(rng, fw);
            CHECK(check_membership(tweaked).member == geometric_member(ctx, tweaked));
        }
    }
}

TEST_CASE("star is injective on a ball") {
    for (auto [family, n] : families_up_to(3)) {
        auto ctx = family_context(family, n);
        std::set<std::vector<long>> windows;
        auto ball = bfs_enumerate(ctx, 6);
        for (const auto& [mu, entry] : ball) windows.insert(star(ctx, element_from_word(ctx, entry.word)).window());
        CHECK(windows.size() == ball.size());
    }
}

TEST_CASE("G2 parity from the absolute permutation") {
    auto ctx = family_context(PermFamily::G, 2);
    // All words in s_1, s_2 of length <= 6 cover the dihedral group of order 12.
    std::set<std::vector<long>> seen;
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 0; len <= 6; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& word : frontier) {
            auto w = element_from_word(ctx, word);
            auto f = star(ctx, w);
            if (!seen.insert(f.window()).second) continue;
            std::vector<long> abs_perm{std::labs(f.apply(1)), std::labs(f.apply(2)), std::labs(f.apply(3))};
            CHECK(permutation_sign(abs_perm) == (finite_length(ctx.rs, w.linear) % 2 ? -1 : 1));
            for (int s : {1, 2}) {
                auto longer = word;
                longer.push_back(s);
                next.push_back(longer);
            }
        }
        frontier = std::move(next);
    }
    CHECK(seen.size() == 12);
}

TEST_CASE("serialization") {
    for (const auto& golden : golden_windows()) {
        auto ctx = family_context(golden.family, golden.n);
        auto f = star(ctx, gen(ctx, golden.generator));
        CAPTURE(golden.text);
        CHECK(serialize(f) == golden.text);
        CHECK(parse_window(golden.text) == f);
    }
    std::mt19937_64 rng(5);
    for (auto [family, n] : families_up_to(4)) {
        auto ctx = family_context(family, n);
        auto f = star(ctx, element_from_word(ctx, random_word(rng, static_cast<int>(generators(ctx).size()), 10)));
        CHECK(parse_window("# comment\n\n" + serialize(f)) == f);
    }
    CHECK(one_line(PeriodicPermutation(PermFamily::A, 3, {0, 2, 4})) == "1 -> 0, 2 -> 2, 3 -> 4");
    CHECK_THROWS_AS(parse_window("A 3 3\n1 -> 0\n2 -> 2\n"), NotAPermutation);
    CHECK_THROWS_AS(parse_window("A 3 4\n1 -> 0\n2 -> 2\n3 -> 4\n"), NotAPermutation);
    CHECK_THROWS_AS(parse_window("1 -> 0\n"), NotAPermutation);
    CHECK_THROWS_AS(parse_window("A 3 3\n1 => 0\n2 -> 2\n3 -> 4\n"), NotAPermutation);
    CHECK(parse_family("calt") == PermFamily::CAlt);
    CHECK_THROWS_AS(parse_family("E"), UnsupportedRootSystem);
}
