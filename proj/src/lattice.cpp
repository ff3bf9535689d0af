#include "awg/lattice.hpp"

namespace awg {

LatticeId LatticeId::scaled_coroot(long k) {
    if (k <= 0) throw Error("scaled coroot lattice needs a positive scale");
    return {Kind::scaled_coroot, k};
}

std::string LatticeId::name() const {
    switch (kind) {
        case Kind::root: return "Q";
        case Kind::weight: return "P";
        case Kind::standard_coroot: return "Q*";
        case Kind::scaled_coroot: return std::to_string(scale) + "Q*";
    }
    return "?";
}

LatticeId half_coroot_lattice(const RootSystemData& rs) { return LatticeId::scaled_coroot(rs.norm_constant / 2); }

Rational dot_killing(const RootSystemData& rs, const AmbientVector& x, const AmbientVector& y) {
    if (x.size() != rs.dim || y.size() != rs.dim) throw DimensionMismatch("vector not in the ambient space of " + rs.name());
    return dot_standard(x, y) / rs.norm_constant;
}

namespace {

Rational coord_sum(const AmbientVector& v) {
    Rational s = 0;
    for (const auto& c : v.coords()) s += c;
    return s;
}

bool all_integral_even_sum(const AmbientVector& v) {
    if (!v.is_integral()) return false;
    return mod_floor(coord_sum(v).get_num(), BigInt(2)) == 0;
}

// All coordinates integral, or all in 1/2 + Z.
bool integral_or_all_half(const AmbientVector& v) {
    if (v.is_integral()) return true;
    for (const auto& c : v.coords())
        if (c.get_den() != 2) return false;
    return true;
}

bool contains_coroot(const RootSystemData& rs, const AmbientVector& v) {
    switch (rs.type) {
        case RootType::A: return v.is_integral() && coord_sum(v) == 0;
        case RootType::B:
        case RootType::D: return all_integral_even_sum(v);
        case RootType::C: return v.is_integral();
        case RootType::G: {
            if (coord_sum(v) != 0) return false;
            AmbientVector y = Rational(3) * v;
            if (!y.is_integral()) return false;
            BigInt r0 = mod_floor(y[0].get_num(), BigInt(3));
            return mod_floor(y[1].get_num(), BigInt(3)) == r0 && mod_floor(y[2].get_num(), BigInt(3)) == r0;
        }
    }
    return false;
}

bool contains_root(const RootSystemData& rs, const AmbientVector& v) {
    switch (rs.type) {
        case RootType::A:
        case RootType::G: return v.is_integral() && coord_sum(v) == 0;
        case RootType::B: return v.is_integral();
        case RootType::C:
        case RootType::D: return all_integral_even_sum(v);
    }
    return false;
}

bool contains_weight(const RootSystemData& rs, const AmbientVector& v) {
    switch (rs.type) {
        case RootType::A: {
            if (coord_sum(v) != 0) return false;
            for (std::size_t i = 1; i < v.size(); ++i)
                if (!is_integer(v[i] - v[0])) return false;
            return true;
        }
        case RootType::B:
        case RootType::D: return integral_or_all_half(v);
        case RootType::C: return v.is_integral();
        case RootType::G: return v.is_integral() && coord_sum(v) == 0;
    }
    return false;
}

}  // namespace

bool lattice_contains(const RootSystemData& rs, const LatticeId& lattice, const AmbientVector& v) {
    if (v.size() != rs.dim) throw DimensionMismatch("vector not in the ambient space of " + rs.name());
    switch (lattice.kind) {
        case LatticeId::Kind::root: return contains_root(rs, v);
        case LatticeId::Kind::weight: return contains_weight(rs, v);
        case LatticeId::Kind::standard_coroot: return contains_coroot(rs, v);
        case LatticeId::Kind::scaled_coroot: return contains_coroot(rs, v * Rational(1, lattice.scale));
    }
    return false;
}

std::vector<AmbientVector> lattice_basis(const RootSystemData& rs, const LatticeId& lattice) {
    switch (lattice.kind) {
        case LatticeId::Kind::root: return rs.simple_roots;
        case LatticeId::Kind::weight: return rs.fundamental_weights;
        case LatticeId::Kind::standard_coroot:
        case LatticeId::Kind::scaled_coroot: {
            std::vector<AmbientVector> out;
            for (const auto& a : rs.simple_roots) out.push_back(Rational(lattice.scale) * standard_coroot(a));
            return out;
        }
    }
    return {};
}

}  // namespace awg
