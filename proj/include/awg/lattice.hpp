#pragma once

// Killing-normalized inner product and lattice membership by coordinate congruences.

#include "awg/root_data.hpp"

#include <string>
#include <vector>

namespace awg {

/// Q (root lattice), P (weight lattice), Q* = sum Z 2a/<a,a> (standard coroot lattice),
/// or k Q* for an integer k > 0.
struct LatticeId {
    enum class Kind { root, weight, standard_coroot, scaled_coroot };
    Kind kind = Kind::root;
    long scale = 1;

    static LatticeId root() { return {Kind::root, 1}; }
    static LatticeId weight() { return {Kind::weight, 1}; }
    static LatticeId coroot() { return {Kind::standard_coroot, 1}; }
    static LatticeId scaled_coroot(long k);

    std::string name() const;
    friend bool operator==(const LatticeId&, const LatticeId&) = default;
};

/// 1/2 Q^vee in Killing scale, i.e. (c/2) Q* in standard coordinates.
LatticeId half_coroot_lattice(const RootSystemData& rs);

/// (x, y) = <x, y> / c, so that (theta, theta) = 1 / h^vee.
Rational dot_killing(const RootSystemData& rs, const AmbientVector& x, const AmbientVector& y);

bool lattice_contains(const RootSystemData& rs, const LatticeId& lattice, const AmbientVector& v);

/// A Z-basis of the lattice (simple roots, fundamental weights or scaled simple coroots).
std::vector<AmbientVector> lattice_basis(const RootSystemData& rs, const LatticeId& lattice);

}  // namespace awg
