#pragma once

// Families, perturbations and a geometric membership oracle for the permutation tests.

#include "awg/zperm.hpp"

#include <random>
#include <utility>
#include <vector>

namespace awg::testing {

/// (family, n) for every permutation family with rank <= max_rank.
inline std::vector<std::pair<PermFamily, int>> families_up_to(int max_rank) {
    std::vector<std::pair<PermFamily, int>> out;
    for (int r = 1; r <= max_rank; ++r) out.push_back({PermFamily::A, r + 1});
    for (int r = 2; r <= max_rank; ++r) out.push_back({PermFamily::B, r});
    for (int r = 2; r <= max_rank; ++r) out.push_back({PermFamily::C, r});
    for (int r = 2; r <= max_rank; ++r) out.push_back({PermFamily::CAlt, r});
    for (int r = 3; r <= max_rank; ++r) out.push_back({PermFamily::D, r});
    if (max_rank >= 2) out.push_back({PermFamily::G, 2});
    return out;
}

inline bool antisymmetric_family(PermFamily f) { return f != PermFamily::A; }

/// Adds k p to one window entry (and -k p to its mirror for the antisymmetric families),
/// so the result is still a periodic permutation.
inline PeriodicPermutation perturb(std::mt19937_64& rng, const PeriodicPermutation& f) {
    std::vector<long> w = f.window();
    std::uniform_int_distribution<long> idx(f.lo(), f.hi());
    std::uniform_int_distribution<int> mag(1, 2), sgn(0, 1);
    const long i = idx(rng);
    const long shift = (sgn(rng) ? 1 : -1) * mag(rng) * f.period();
    w[static_cast<std::size_t>(i - f.lo())] += shift;
    if (antisymmetric_family(f.family()) && i != 0 && -i >= f.lo() && -i <= f.hi())
        w[static_cast<std::size_t>(-i - f.lo())] -= shift;
    return PeriodicPermutation(f.family(), f.n(), std::move(w));
}

/// Membership decided geometrically: the coordinate vector must lie in the orbit of the
/// base point, and the element reaching it must reproduce the whole window.
inline bool geometric_member(const AffineContext& ctx, const PeriodicPermutation& f) {
    AmbientVector mu(ctx.rs.dim);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        long v = f.apply(static_cast<long>(i) + 1);
        if (f.family() == PermFamily::G) v *= ctx.rs.epsilon[i];
        mu[i] = v;
    }
    if (!in_orbit(ctx, mu)) return false;
    return star(ctx, element_from_point(ctx, mu)) == f;
}

}  // namespace awg::testing
