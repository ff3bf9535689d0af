#pragma once

// Dominant weights with nonzero coefficient in the expansion
//
//   (prod_{m >= 1} (1 - x^m))^{dim g} = sum_lambda chi_lambda(a) dim(V_lambda) x^{(lambda + 2 rho, lambda)},
//
// their signs, and coefficient-exact verification of the expansion.
//
// Everything here works in the bourbaki ordering. A dominant weight lambda is in P_alc
// iff <lambda + rho, alpha> is never a multiple of c/2 for alpha > 0, i.e. lambda + rho
// is regular for the Killing-scale modulus q = 1/2.

#include "awg/affine_weyl.hpp"
#include "awg/kernels.hpp"

#include <optional>
#include <vector>

namespace awg {

class NotDominant : public Error {
public:
    using Error::Error;
};

class NotInPalc : public Error {
public:
    using Error::Error;
};

using SeriesCoefficients = std::vector<BigInt>;

/// Output of the per-type division algorithm: mu = tau + v(rho) with tau in 1/2 Q^vee.
struct Decomposition {
    AmbientVector tau;
    FiniteWeylElement v;
    AmbientVector v_rho;
    /// chi_lambda(a) read off v by the type's permutation-sign rule.
    int sign = 1;
};

struct PalcRecord {
    AmbientVector lambda;
    std::vector<long> labels;  // Dynkin labels of lambda
    AmbientVector mu;          // lambda + rho
    AmbientVector tau;
    FiniteWeylElement v;
    int sign = 1;
    long exponent = 0;
    BigInt dim;
    friend bool operator==(const PalcRecord&, const PalcRecord&) = default;
};

/// Generic test. Throws NotDominant for non-dominant lambda.
bool is_in_palc(const RootSystemData& rs, const AmbientVector& lambda);
/// Closed-form per-type congruences.
bool is_in_palc_typed(const RootSystemData& rs, const AmbientVector& lambda);

/// Throws NotInOrbit when mu = lambda + rho is not in the orbit of rho.
Decomposition decompose_mu(const RootSystemData& rs, const AmbientVector& mu);

/// chi_lambda(a) through decompose_mu. Throws NotInPalc.
int kostant_sign(const RootSystemData& rs, const AmbientVector& lambda);
/// (-1)^{sum_{alpha > 0} floor(2 (lambda + rho, alpha))}.
int generic_sign(const RootSystemData& rs, const AmbientVector& lambda);

BigInt weyl_dim(const RootSystemData& rs, const AmbientVector& lambda);
/// (lambda + 2 rho, lambda) in Killing scale.
Rational killing_exponent(const RootSystemData& rs, const AmbientVector& lambda);
/// Same, asserted to be a nonnegative integer.
long exponent(const RootSystemData& rs, const AmbientVector& lambda);

/// Dominant weights with (lambda + 2 rho, lambda) <= max_exponent, as Dynkin label vectors.
std::vector<std::vector<long>> dominant_labels_up_to(const RootSystemData& rs, long max_exponent, bool parallel = true);

/// P_alc weights with exponent <= max_exponent, sorted by (exponent, labels).
std::vector<PalcRecord> enumerate_palc(const RootSystemData& rs, long max_exponent);
PalcRecord make_palc_record(const RootSystemData& rs, const AmbientVector& lambda);

/// prod_{m=1}^{degree} (1 - x^m)^d truncated at x^degree.
SeriesCoefficients euler_power(long d, long degree, bool parallel = true);
SeriesCoefficients kostant_series(const RootSystemData& rs, long degree);

struct IdentityReport {
    long lie_dim = 0;
    long degree = 0;
    SeriesCoefficients product_side;
    SeriesCoefficients sum_side;
    std::optional<long> first_mismatch;
    bool equal() const { return !first_mismatch.has_value(); }
    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};
IdentityReport verify_identity(const RootSystemData& rs, long degree);

}  // namespace awg
