#pragma once

// Affine Weyl groups W_q = T x| W acting on the ambient space.
//
// All hyperplane arithmetic happens in standard coordinates with an integer modulus M:
// the reflecting hyperplanes are <x, alpha> = k M, the translation lattice is M Q*, and
// s_0 = t_{M theta*} s_theta with theta* = 2 theta / <theta, theta>.
//
// Words are read left to right as products: (i_1, ..., i_k) is s_{i_1} s_{i_2} ... s_{i_k}.

#include "awg/lattice.hpp"
#include "awg/root_data.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace awg {

class LatticeViolation : public Error {
public:
    using Error::Error;
};

class NotInOrbit : public Error {
public:
    using Error::Error;
};

class NotRegular : public Error {
public:
    using Error::Error;
};

/// A finite Weyl group element stored as a signed permutation of the canonical basis:
/// v(e_i) = sign_i e_{target_i}. For G2 the sign is uniform, which agrees with the
/// group action on the plane x_1 + x_2 + x_3 = 0.
class FiniteWeylElement {
public:
    FiniteWeylElement() = default;
    static FiniteWeylElement identity(std::size_t dim);
    /// images[i] = +/-(j + 1) encodes v(e_i) = +/- e_j.
    static FiniteWeylElement from_images(std::vector<int> images);

    std::size_t dim() const { return images_.size(); }
    std::span<const int> images() const { return images_; }
    std::size_t target(std::size_t i) const { return static_cast<std::size_t>(std::abs(images_[i])) - 1; }
    int sign(std::size_t i) const { return images_[i] < 0 ? -1 : 1; }
    int negative_count() const;

    AmbientVector apply(const AmbientVector& x) const;
    /// (*this) after `other`: x -> this(other(x)).
    FiniteWeylElement after(const FiniteWeylElement& other) const;
    FiniteWeylElement inverse() const;

    friend bool operator==(const FiniteWeylElement&, const FiniteWeylElement&) = default;

private:
    std::vector<int> images_;
};

/// Whether a signed permutation lies in the Weyl group of rs (even sign changes for D,
/// uniform sign for G2, no signs for A).
bool is_weyl_element(const RootSystemData& rs, const FiniteWeylElement& v);

/// The reflection s_alpha as a signed permutation.
FiniteWeylElement reflection_element(const RootSystemData& rs, const AmbientVector& alpha);

/// The unique v in W with v(source) = target, when source is W-regular; nullopt if none.
std::optional<FiniteWeylElement> weyl_element_mapping(const RootSystemData& rs, const AmbientVector& source,
                                                      const AmbientVector& target);

/// Coxeter length in W: the number of positive roots sent to negative roots.
long finite_length(const RootSystemData& rs, const FiniteWeylElement& v);

enum class Preset { custom, kostant_half, permutation, permutation_alt };

struct AffineContext {
    RootSystemData rs;
    long modulus = 0;  // M
    AmbientVector base;
    long period = 0;  // generator of the coordinate subgroup {<eta, e_i> : eta in M Q*}
    Preset preset = Preset::custom;
    /// Window size n used by the permutation presets (for type A this is rank + 1).
    int window_n = 0;
};

/// Validates that base is M-regular and lies in the fundamental alcove.
AffineContext make_context(RootSystemData rs, long modulus, AmbientVector base, Preset preset = Preset::custom);

/// Bourbaki ordering, q = 1/2 in Killing scale (M = c/2), base rho.
AffineContext kostant_context(RootType type, int rank);

/// Contexts of the permutation-of-Z representations: reversed ordering and base sum i e_i
/// with M = p = n (A_{n-1}) or 2n+1 (B_n, C_n, D_n); for G2 base rho, M = 24, p = 8.
/// For type A the argument is the window size n, the root system being A_{n-1}.
AffineContext permutation_context(RootType type, int n);

/// C_n with M = p = 2n + 2 (the alternative representation).
AffineContext permutation_alt_context_C(int n);

struct AffineElement {
    AmbientVector translation;
    FiniteWeylElement linear;

    friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

AffineElement identity_element(const AffineContext& ctx);
AmbientVector act(const AffineContext& ctx, const AffineElement& w, const AmbientVector& x);
/// w u = t_{eta + w(tau)} (w u); throws LatticeViolation when a translation leaves M Q*.
AffineElement compose(const AffineContext& ctx, const AffineElement& w, const AffineElement& u);
AffineElement inverse(const AffineContext& ctx, const AffineElement& w);

/// s_0, s_1, ..., s_n (index 0 is the affine reflection).
std::vector<AffineElement> generators(const AffineContext& ctx);
AffineElement element_from_word(const AffineContext& ctx, std::span<const int> word);

bool is_regular(const AffineContext& ctx, const AmbientVector& x);
/// floor(<mu, alpha> / M) for each positive root, in rs.positive_roots order.
std::vector<long> alcove_form(const AffineContext& ctx, const AmbientVector& mu);
long length_from_point(const AffineContext& ctx, const AmbientVector& mu);
int parity(const AffineContext& ctx, const AffineElement& w);

/// mu in lambda + L and mu regular.
bool orbit_contains(const AffineContext& ctx, const AmbientVector& lambda, const LatticeId& lattice,
                    const AmbientVector& mu);
/// A lattice L with (base + L) stable and meeting the fundamental alcove only in base,
/// when one is known for the preset.
std::optional<LatticeId> preset_lattice(const AffineContext& ctx);
/// Orbit membership through preset_lattice when available, else through the descent walk.
bool in_orbit(const AffineContext& ctx, const AmbientVector& mu);

struct DescentWalk {
    AffineElement element;
    std::vector<int> word;
};
/// Greedy descent to the fundamental alcove (lowest generator index first).
DescentWalk descent_walk(const AffineContext& ctx, const AmbientVector& mu);
AffineElement element_from_point(const AffineContext& ctx, const AmbientVector& mu);

struct BfsEntry {
    long length = 0;
    std::vector<int> word;
};
using BfsMap = std::map<AmbientVector, BfsEntry>;
/// Every orbit point reachable with at most max_len generators, with its BFS depth and a
/// reduced word.
BfsMap bfs_enumerate(const AffineContext& ctx, long max_len);

/// Hyperplanes crossed by the gallery of `word`, counted per positive root.
struct Crossings {
    std::vector<long> per_root;
    bool repeated = false;  // some hyperplane crossed more than once
};
Crossings gallery_crossings(const AffineContext& ctx, std::span<const int> word);

}  // namespace awg
