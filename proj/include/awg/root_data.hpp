#pragma once

// Bourbaki-coordinate realizations of the root systems A_n, B_n, C_n, D_n and G2.
//
// Two basis orderings are supported. `bourbaki` is the usual one (e.g. theta = e_1 + e_2
// for B_n). `reversed` reverses the canonical basis of R^N and relabels the simple roots
// accordingly, so that for C_n we get alpha_1 = 2e_1, alpha_i = e_i - e_{i-1}, theta = 2e_n.
// G2 lives in the plane x_1 + x_2 + x_3 = 0 of R^3 and only has the bourbaki ordering.

#include "awg/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace awg {

enum class RootType { A, B, C, D, G };
enum class Ordering { bourbaki, reversed };

class UnsupportedRootSystem : public Error {
public:
    using Error::Error;
};

char type_letter(RootType t);
/// Accepts "A".."D", "G" (case-insensitive). Throws UnsupportedRootSystem otherwise.
RootType parse_root_type(std::string_view s);

struct RootSystemData {
    RootType type{};
    int rank = 0;
    std::size_t dim = 0;  // ambient dimension N
    Ordering ordering = Ordering::bourbaki;

    std::vector<AmbientVector> simple_roots;  // alpha_1 .. alpha_n
    std::vector<AmbientVector> positive_roots;
    AmbientVector highest_root;
    AmbientVector rho;
    std::vector<AmbientVector> fundamental_weights;  // omega_1 .. omega_n
    std::vector<long> marks;                         // theta^vee = sum m_i alpha_i^vee
    long dual_coxeter = 0;
    long norm_constant = 0;  // c = <theta, theta> h^vee
    std::vector<int> epsilon;  // G2 only: (-1, -1, +1)

    std::string name() const;  // e.g. "C2"
    /// dim g = rank + number of roots.
    long lie_algebra_dim() const { return rank + 2 * static_cast<long>(positive_roots.size()); }
    bool is_positive_root(const AmbientVector& v) const;
    bool is_root(const AmbientVector& v) const;
};

/// 2 alpha / <alpha, alpha>, the coroot in standard coordinates.
AmbientVector standard_coroot(const AmbientVector& alpha);

/// Reflection of x in the hyperplane orthogonal to alpha.
AmbientVector reflect(const AmbientVector& alpha, const AmbientVector& x);

RootSystemData build(RootType type, int rank, Ordering ordering = Ordering::bourbaki);

/// Reverses the order of the coordinates (the conversion between the two orderings).
AmbientVector reverse_coordinates(const AmbientVector& v);

/// Type A only: lambda - <lambda, e_N> (1, ..., 1). The last coordinate of the result is 0.
AmbientVector bar_map_A(const RootSystemData& rs, const AmbientVector& lambda);

/// <lambda, alpha_i^*> for each simple root.
std::vector<Rational> dynkin_labels(const RootSystemData& rs, const AmbientVector& lambda);
/// sum labels_i omega_i.
AmbientVector weight_from_labels(const RootSystemData& rs, const std::vector<long>& labels);
/// True iff lambda lies in the span of the roots and all Dynkin labels are nonnegative integers.
bool is_dominant_weight(const RootSystemData& rs, const AmbientVector& lambda);

/// The interval (lower, upper] of values q for which C_q meets the weight lattice only in rho,
/// both in Killing scale and multiplied by c (standard-modulus scale).
struct WeightInterval {
    Rational lower;
    Rational upper;
    Rational lower_standard;
    Rational upper_standard;
    long min_mark = 0;
};
WeightInterval unique_weight_interval(const RootSystemData& rs);

}  // namespace awg
