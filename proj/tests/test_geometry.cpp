#include "awg/lattice.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace awg;
using awg::testing::random_vector;

TEST_CASE("rationals stay reduced and print as p/q") {
    Rational x(6, 4);
    x.canonicalize();
    CHECK(to_string(x) == "3/2");
    CHECK(to_string(Rational(-4)) == "-4");
    CHECK(parse_rational("-10/4") == Rational(-5, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("floor helpers round toward minus infinity") {
    CHECK(mod_floor(-7L, 3L) == 2);
    CHECK(mod_floor(7L, 3L) == 1);
    CHECK(floor_div(-7L, 3L) == -3);
    CHECK(floor_div(6L, 3L) == 2);
    CHECK(floor_of(Rational(-1, 2)) == -1);
    CHECK(mod_floor(BigInt(-1), BigInt(5)) == 4);
}

TEST_CASE("dot_standard") {
    CHECK(dot_standard({1, 0, -1}, {1, 0, -1}) == 2);
    CHECK(dot_standard({-1, -1, 2}, {-1, -1, 2}) == 6);
    auto c2 = build(RootType::C, 2);
    CHECK(c2.rho == AmbientVector{2, 1});
    CHECK(c2.highest_root == AmbientVector{2, 0});
    CHECK(dot_standard(c2.rho, c2.highest_root) == 4);
    CHECK_THROWS_AS(dot_standard({1, 2}, {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("dot_standard is symmetric and bilinear") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto x = random_vector(rng, 4), y = random_vector(rng, 4), z = random_vector(rng, 4);
        Rational a = awg::testing::random_rational(rng);
        CHECK(dot_standard(x, y) == dot_standard(y, x));
        CHECK(dot_standard(a * x + y, z) == a * dot_standard(x, z) + dot_standard(y, z));
    }
}

TEST_CASE("dot_killing normalizes theta to 1/h") {
    for (auto [t, r] : awg::testing::systems_up_to(6)) {
        auto rs = build(t, r);
        CAPTURE(rs.name());
        CHECK(dot_killing(rs, rs.highest_root, rs.highest_root) == Rational(1, rs.dual_coxeter));
        CHECK(dot_killing(rs, AmbientVector(rs.dim), rs.rho) == 0);
    }
    auto a2 = build(RootType::A, 2);
    AmbientVector lambda{2, -1, -1};
    CHECK(dot_killing(a2, lambda + Rational(2) * a2.rho, lambda) == 2);
}

TEST_CASE("lattice membership examples") {
    auto d4 = build(RootType::D, 4);
    CHECK(lattice_contains(d4, LatticeId::root(), {1, 1, 0, 0}));
    CHECK_FALSE(lattice_contains(d4, LatticeId::root(), {1, 0, 0, 0}));
    auto g2 = build(RootType::G, 2);
    CHECK(half_coroot_lattice(g2) == LatticeId::scaled_coroot(12));
    CHECK(lattice_contains(g2, half_coroot_lattice(g2), {12, -12, 0}));
    CHECK(lattice_contains(g2, half_coroot_lattice(g2), {-8, 4, 4}));  // 12 * 3 theta / <theta, theta>
    CHECK_FALSE(lattice_contains(g2, half_coroot_lattice(g2), {6, -6, 0}));
    for (auto [t, r] : awg::testing::systems_up_to(4)) {
        auto rs = build(t, r);
        for (auto l : {LatticeId::root(), LatticeId::weight(), LatticeId::coroot(), LatticeId::scaled_coroot(5)})
            CHECK(lattice_contains(rs, l, AmbientVector(rs.dim)));
    }
}

namespace {

// Membership decided by solving for coordinates in a Z-basis, independent of the congruences.
bool in_span_of_basis(const std::vector<AmbientVector>& basis, const AmbientVector& v) {
    auto coeffs = solve_in_span(basis, v);
    if (!coeffs) return false;
    for (const auto& c : *coeffs)
        if (!is_integer(c)) return false;
    return true;
}

}  // namespace

TEST_CASE("lattice congruences agree with basis coordinates") {
    std::mt19937_64 rng(5);
    for (auto [t, r] : awg::testing::systems_up_to(4)) {
        auto rs = build(t, r);
        CAPTURE(rs.name());
        for (auto l : {LatticeId::root(), LatticeId::weight(), LatticeId::coroot(), LatticeId::scaled_coroot(3)}) {
            CAPTURE(l.name());
            auto basis = lattice_basis(rs, l);
            auto weights = lattice_basis(rs, LatticeId::weight());
            std::uniform_int_distribution<long> small(-3, 3);
            for (int trial = 0; trial < 200; ++trial) {
                // Half-integral combinations of fundamental weights hit both members and non-members.
                AmbientVector v(rs.dim);
                for (const auto& w : weights) v += awg::testing::frac(small(rng), 2) * w;
                CHECK(lattice_contains(rs, l, v) == in_span_of_basis(basis, v));
            }
        }
    }
}

TEST_CASE("lattices are subgroups") {
    std::mt19937_64 rng(9);
    for (auto [t, r] : awg::testing::systems_up_to(4)) {
        auto rs = build(t, r);
        for (auto l : {LatticeId::root(), LatticeId::weight(), LatticeId::coroot(), half_coroot_lattice(rs)}) {
            auto basis = lattice_basis(rs, l);
            std::uniform_int_distribution<long> small(-4, 4);
            for (int trial = 0; trial < 50; ++trial) {
                AmbientVector x(rs.dim), y(rs.dim);
                for (const auto& b : basis) {
                    x += Rational(small(rng)) * b;
                    y += Rational(small(rng)) * b;
                }
                CHECK(lattice_contains(rs, l, x + y));
                CHECK(lattice_contains(rs, l, -x));
            }
        }
    }
}
