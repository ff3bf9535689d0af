#pragma once

// Exact rational scalars and coordinate vectors in the ambient space R^N.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace awg {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Inverse of to_string. Throws Error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);
BigInt floor_of(const Rational& x);
/// Mathematical modulus, result in [0, m).
BigInt mod_floor(const BigInt& a, const BigInt& m);
long mod_floor(long a, long m);
long floor_div(long a, long m);

/// Converts an integral rational to long; throws if it is not integral or does not fit.
long to_long(const Rational& x);
long to_long(const BigInt& x);

class AmbientVector {
public:
    AmbientVector() = default;
    explicit AmbientVector(std::size_t dim) : coords_(dim) {}
    explicit AmbientVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    AmbientVector(std::initializer_list<long> coords);

    static AmbientVector unit(std::size_t dim, std::size_t index);

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }

    bool is_zero() const;
    bool is_integral() const;

    AmbientVector& operator+=(const AmbientVector& other);
    AmbientVector& operator-=(const AmbientVector& other);
    AmbientVector& operator*=(const Rational& s);

    friend AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
    friend AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
    friend AmbientVector operator*(const Rational& s, AmbientVector a) { return a *= s; }
    friend AmbientVector operator*(AmbientVector a, const Rational& s) { return a *= s; }
    AmbientVector operator-() const;

    friend bool operator==(const AmbientVector& a, const AmbientVector& b);
    /// Lexicographic; only meaningful between vectors of equal size.
    friend std::strong_ordering operator<=>(const AmbientVector& a, const AmbientVector& b);

private:
    std::vector<Rational> coords_;
};

/// "(p1, p2, ...)" with exact fractions.
std::string to_string(const AmbientVector& v);
std::ostream& operator<<(std::ostream& os, const AmbientVector& v);

/// Standard inner product of R^N.
Rational dot_standard(const AmbientVector& x, const AmbientVector& y);

/// Coefficients x with sum_k x_k columns[k] = rhs, or nullopt when rhs is not in the
/// span. The columns must be linearly independent (throws Error otherwise).
std::optional<std::vector<Rational>> solve_in_span(std::span<const AmbientVector> columns,
                                                   const AmbientVector& rhs);

/// Rational gcd of the given values (nonnegative); gcd of nothing or all zeros is 0.
Rational rational_gcd(std::span<const Rational> values);

}  // namespace awg
