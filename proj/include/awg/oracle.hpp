#pragma once

// Cross-checks of the closed-form alcove formulas against breadth-first enumeration.

#include "awg/affine_weyl.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace awg {

struct OracleReport {
    long points = 0;  // orbit points in the BFS ball
    long checks = 0;
    long discrepancies = 0;
    long sampled_in_ball = 0;  // random samples that landed in the ball
    std::map<std::string, long> checks_by_kind;
    std::vector<std::string> failures;  // first few discrepancies, for diagnostics
    bool ok() const { return discrepancies == 0; }
    friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// For every point of the ball of radius max_len:
///   length      length_from_point equals the BFS depth
///   word        the BFS word has that length and reaches the point
///   alcove      the gallery of the word crosses |alcove_form(alpha)| walls of each root, none twice
///   parity      parity of the element equals the depth mod 2
///   walk        the descent walk returns an element of the same length reaching the point
///   orbit       in_orbit (and orbit_contains for preset lattices) accepts the point
/// plus `samples` random points of base + L, where membership in the ball must agree
/// with in_orbit and length_from_point (ball_agreement).
OracleReport run_oracle(const AffineContext& ctx, long max_len, std::uint64_t seed, long samples = 2000);

}  // namespace awg
