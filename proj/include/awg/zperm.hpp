#pragma once

// Affine Weyl groups as periodic permutations of Z.
//
// A PeriodicPermutation is stored as its window on a fixed set I of representatives of
// Z / pZ and extended by (i + kp)^f = i^f + kp:
//
//   A (window size n, root system A_{n-1})   I = [1, n]         p = n
//   B, C, D (rank n)                        I = [-n, n]        p = 2n + 1
//   C alternative (rank n)                  I = [-n, n + 1]    p = 2n + 2
//   G2                                      I = [-3, 4]        p = 8
//
// Composition is a right action: compose(f, g) maps z to (z^f)^g, so that
// star(w u) = compose(star(w), star(u)).

#include "awg/affine_weyl.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace awg {

enum class PermFamily { A, B, C, D, G, CAlt };

/// "A", "B", "C", "D", "G", "Calt".
std::string family_name(PermFamily f);
PermFamily parse_family(std::string_view s);

class NotAPermutation : public Error {
public:
    using Error::Error;
};

class PeriodicPermutation {
public:
    /// n is the window size for A and the rank otherwise (2 for G2).
    /// Throws NotAPermutation when the values are not distinct mod p.
    PeriodicPermutation(PermFamily family, int n, std::vector<long> window);
    static PeriodicPermutation identity(PermFamily family, int n);

    PermFamily family() const { return family_; }
    int n() const { return n_; }
    long period() const { return period_; }
    long lo() const { return lo_; }
    long hi() const { return lo_ + period_ - 1; }
    /// Values on lo() .. hi().
    const std::vector<long>& window() const { return window_; }

    long apply(long z) const;
    friend bool operator==(const PeriodicPermutation&, const PeriodicPermutation&) = default;

private:
    PermFamily family_;
    int n_;
    long period_;
    long lo_;
    std::vector<long> window_;
};

long family_period(PermFamily family, int n);
long family_lo(PermFamily family, int n);

/// z -> (z^f)^g.
PeriodicPermutation compose(const PeriodicPermutation& f, const PeriodicPermutation& g);
PeriodicPermutation inverse(const PeriodicPermutation& f);

/// The context whose group the family represents.
AffineContext family_context(PermFamily family, int n);
PermFamily context_family(const AffineContext& ctx);

/// i^{w_*} = <w(base), e_i> (times epsilon_i for G2). Throws for non-permutation contexts.
PeriodicPermutation star(const AffineContext& ctx, const AffineElement& w);
/// The alternative C_n representation w -> w_** (period 2n + 2, +-(n + 1) fixed).
PeriodicPermutation star_alt_C(int n, const AffineElement& w);

struct MembershipResult {
    bool member = true;
    std::string reason;  // first violated condition; empty for members
    explicit operator bool() const { return member; }
};

/// The defining conditions of the family's image in S(Z).
MembershipResult check_membership(const PeriodicPermutation& f);

/// Interchangeable forms of the parity condition for type B.
enum class BParity { sum, residues, count_above };
/// Evaluates one parity form; conditions (1) and (2) are assumed.
bool check_membership_B_alt(const PeriodicPermutation& f, BParity variant);

/// The element w with star(w) = f. Throws NotInOrbit when f is not in the image.
AffineElement unstar(const AffineContext& ctx, const PeriodicPermutation& f);

/// sum_{i<j} |floor((j^f - i^f) / n)|.
long length_from_zperm_A(const PeriodicPermutation& f);

/// Header "type n period", then "i -> i^f" for every representative.
std::string serialize(const PeriodicPermutation& f);
/// Inverse of serialize; blank lines and lines starting with '#' are skipped.
PeriodicPermutation parse_window(std::string_view text);

/// Values on the representatives as "i -> i^f" joined by ", " (no header).
std::string one_line(const PeriodicPermutation& f);

}  // namespace awg
