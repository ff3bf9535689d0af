#include "awg/kostant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace awg {

namespace {

void require_bourbaki(const RootSystemData& rs) {
    if (rs.ordering != Ordering::bourbaki) throw UnsupportedRootSystem("expected the bourbaki ordering");
}

void require_dominant(const RootSystemData& rs, const AmbientVector& lambda) {
    if (!is_dominant_weight(rs, lambda)) throw NotDominant(to_string(lambda) + " is not a dominant weight of " + rs.name());
}

// Sign of a permutation of {0, ..., n-1}.
int permutation_sign(const std::vector<long>& perm) {
    std::vector<bool> visited(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (visited[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(perm[j])) {
            visited[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

bool is_permutation_of_range(const std::vector<long>& values) {
    std::vector<bool> seen(values.size(), false);
    for (long v : values) {
        if (v < 0 || static_cast<std::size_t>(v) >= values.size() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

std::vector<long> integer_coords(const AmbientVector& v, const char* what) {
    std::vector<long> out;
    for (const auto& c : v.coords()) {
        if (!is_integer(c)) throw NotInOrbit(std::string(what) + ": non-integral coordinate in " + to_string(v));
        out.push_back(to_long(c));
    }
    return out;
}

AmbientVector from_longs(const std::vector<long>& xs, const Rational& scale = 1) {
    AmbientVector v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v[i] = Rational(xs[i]) * scale;
    return v;
}

Decomposition finish(const RootSystemData& rs, const AmbientVector& mu, AmbientVector v_rho, int sign) {
    auto v = weyl_element_mapping(rs, rs.rho, v_rho);
    if (!v) throw NotInOrbit(to_string(v_rho) + " is not in the W-orbit of rho");
    Decomposition d{mu - v_rho, *v, std::move(v_rho), sign};
    if (!lattice_contains(rs, half_coroot_lattice(rs), d.tau))
        throw NotInOrbit("translation " + to_string(d.tau) + " is not in 1/2 Q^vee");
    return d;
}

Decomposition decompose_A(const RootSystemData& rs, const AmbientVector& mu) {
    const long n = rs.rank;
    const long m = n + 1;
    auto lam = integer_coords(bar_map_A(rs, mu - rs.rho), "type A");
    long total = std::accumulate(lam.begin(), lam.end(), 0L);
    if (mod_floor(total, m) != 0) throw NotInOrbit("lambda is not in the root lattice");
    std::vector<long> r(static_cast<std::size_t>(m)), q(static_cast<std::size_t>(m));
    for (long i = 1; i <= m; ++i) {
        long value = lam[static_cast<std::size_t>(i - 1)] + (n - i + 1) - total / m;
        r[static_cast<std::size_t>(i - 1)] = m - mod_floor(value, m);  // value = (n - r + 1) + m q
        q[static_cast<std::size_t>(i - 1)] = floor_div(value, m);
    }
    std::vector<long> perm;
    for (long x : r) perm.push_back(x - 1);
    if (!is_permutation_of_range(perm)) throw NotInOrbit("remainders of " + to_string(mu) + " are not distinct");
    AmbientVector v_rho(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < r.size(); ++i) v_rho[i] = Rational(n - 2 * r[i] + 2) / 2;
    return finish(rs, mu, std::move(v_rho), permutation_sign(perm));
}

Decomposition decompose_C(const RootSystemData& rs, const AmbientVector& mu) {
    const long n = rs.rank;
    const long m = 2 * (n + 1);
    auto x = integer_coords(mu, "type C");
    std::vector<long> bar(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        long r = mod_floor(x[i], m);
        if (r == 0 || r == n + 1) throw NotInOrbit(to_string(mu) + " lies on a reflecting hyperplane");
        bar[i] = r <= n ? r : r - m;
    }
    // |sigma|: i -> |bar_{n-i+1}|, as a permutation of {0, ..., n-1}.
    std::vector<long> perm;
    int negatives = 0;
    for (long i = 1; i <= n; ++i) perm.push_back(std::labs(bar[static_cast<std::size_t>(n - i)]) - 1);
    for (long b : bar) negatives += b < 0;
    if (!is_permutation_of_range(perm)) throw NotInOrbit("residues of " + to_string(mu) + " collide");
    int sign = permutation_sign(perm) * (negatives % 2 ? -1 : 1);
    return finish(rs, mu, from_longs(bar), sign);
}

Decomposition decompose_B(const RootSystemData& rs, const AmbientVector& mu) {
    const long n = rs.rank;
    const long m = 2 * (2 * n - 1);
    auto x = integer_coords(Rational(2) * mu, "type B");  // doubled coordinates, all odd
    std::vector<long> bar(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (mod_floor(x[i], 2) != 1) throw NotInOrbit(to_string(mu) + " has a non-half-odd coordinate");
        long r = mod_floor(x[i], m);
        bar[i] = r <= 2 * n - 1 ? r : r - m;
    }
    AmbientVector tilde = from_longs(bar, Rational(1, 2));
    if (!lattice_contains(rs, half_coroot_lattice(rs), mu - tilde)) {
        auto count = std::count(bar.begin(), bar.end(), 2 * n - 1);
        if (count != 1) throw NotInOrbit("no unique remainder 2n-1 to flip for " + to_string(mu));
        *std::find(bar.begin(), bar.end(), 2 * n - 1) = -(2 * n - 1);
    }
    // |sigma| on {1, 3, ..., 2n-1}: i -> |bar_{n-(i-1)/2}|; indexed by k = (i-1)/2.
    std::vector<long> perm;
    int negatives = 0;
    for (long k = 0; k < n; ++k) perm.push_back((std::labs(bar[static_cast<std::size_t>(n - k - 1)]) - 1) / 2);
    for (long b : bar) negatives += b < 0;
    if (!is_permutation_of_range(perm)) throw NotInOrbit("residues of " + to_string(mu) + " collide");
    int sign = permutation_sign(perm) * (negatives % 2 ? -1 : 1);
    return finish(rs, mu, from_longs(bar, Rational(1, 2)), sign);
}

Decomposition decompose_D(const RootSystemData& rs, const AmbientVector& mu) {
    const long n = rs.rank;
    const long m = 2 * n - 2;
    auto x = integer_coords(mu, "type D");
    std::vector<long> bar(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        long r = mod_floor(x[i], m);
        bar[i] = r <= n - 1 ? r : r - m;
    }
    if (!lattice_contains(rs, half_coroot_lattice(rs), mu - from_longs(bar))) {
        auto count = std::count(bar.begin(), bar.end(), n - 1);
        if (count != 1) throw NotInOrbit("no unique remainder n-1 to flip for " + to_string(mu));
        *std::find(bar.begin(), bar.end(), n - 1) = -(n - 1);
    }
    // |sigma| on {0, ..., n-1}: i -> |bar_{n-i}|.
    std::vector<long> perm;
    for (long i = 0; i < n; ++i) perm.push_back(std::labs(bar[static_cast<std::size_t>(n - i - 1)]));
    if (!is_permutation_of_range(perm)) throw NotInOrbit("residues of " + to_string(mu) + " collide");
    return finish(rs, mu, from_longs(bar), permutation_sign(perm));
}

Decomposition decompose_G(const RootSystemData& rs, const AmbientVector& mu) {
    auto x = integer_coords(mu, "type G2");
    if (x[0] + x[1] + x[2] != 0) throw NotInOrbit(to_string(mu) + " is not in the G2 plane");
    std::vector<long> r3(3), r4(3);
    for (std::size_t i = 0; i < 3; ++i) {
        r3[i] = mod_floor(x[i], 3);
        r4[i] = mod_floor(x[i], 4);
    }
    auto twos = std::count(r4.begin(), r4.end(), 2);
    if (twos != 1) throw NotInOrbit("residue pattern mod 4 of " + to_string(mu) + " is neither S1 nor S2");
    const auto k_star = static_cast<std::size_t>(std::find(r4.begin(), r4.end(), 2) - r4.begin());
    std::size_t i_star = 3, j_star = 3;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == k_star) continue;
        (i_star == 3 ? i_star : j_star) = i;
    }
    if (r4[i_star] != r4[j_star] || (r4[i_star] != 1 && r4[i_star] != 3))
        throw NotInOrbit("residue pattern mod 4 of " + to_string(mu) + " is neither S1 nor S2");
    if (r3[i_star] == r3[j_star]) throw NotInOrbit("residues of " + to_string(mu) + " collide mod 12");
    const bool s1 = r4[i_star] == 1;
    const bool plus_one = mod_floor(r3[i_star] - r3[j_star], 3) == 1;  // a - b = [1]_3
    // Remainder table for (i*, j*, k*).
    std::array<long, 3> table = s1 ? (plus_one ? std::array<long, 3>{1, -3, 2} : std::array<long, 3>{-3, 1, 2})
                                   : (plus_one ? std::array<long, 3>{3, -1, -2} : std::array<long, 3>{-1, 3, -2});
    std::vector<long> r(3);
    r[i_star] = table[0];
    r[j_star] = table[1];
    r[k_star] = table[2];
    std::vector<long> perm;
    for (long v : r) perm.push_back(std::labs(v) - 1);
    if (!is_permutation_of_range(perm)) throw NotInOrbit("remainders do not form a permutation");
    return finish(rs, mu, from_longs(r), permutation_sign(perm));
}

}  // namespace

bool is_in_palc(const RootSystemData& rs, const AmbientVector& lambda) {
    require_dominant(rs, lambda);
    const AmbientVector mu = lambda + rs.rho;
    const long half_c = rs.norm_constant / 2;
    for (const auto& a : rs.positive_roots) {
        Rational v = dot_standard(mu, a);
        if (is_integer(v) && mod_floor(v.get_num(), BigInt(half_c)) == 0) return false;
    }
    return true;
}

bool is_in_palc_typed(const RootSystemData& rs, const AmbientVector& lambda) {
    require_bourbaki(rs);
    require_dominant(rs, lambda);
    const long n = rs.rank;
    switch (rs.type) {
        case RootType::A: {
            AmbientVector bar = bar_map_A(rs, lambda);
            if (!bar.is_integral()) return false;
            auto l = integer_coords(bar, "type A");
            long total = std::accumulate(l.begin(), l.end(), 0L);
            if (mod_floor(total, n + 1) != 0) return false;  // lambda in Q
            std::vector<long> residues;
            for (long i = 1; i <= n + 1; ++i) residues.push_back(mod_floor(l[static_cast<std::size_t>(i - 1)] + n - i + 1, n + 1));
            return is_permutation_of_range(residues);
        }
        case RootType::C: {
            auto l = integer_coords(lambda, "type C");
            const long m = 2 * (n + 1);
            std::vector<long> val;
            for (long i = 1; i <= n; ++i) val.push_back(l[static_cast<std::size_t>(i - 1)] + n - i + 1);
            for (std::size_t i = 0; i < val.size(); ++i) {
                if (mod_floor(val[i], n + 1) == 0) return false;
                for (std::size_t j = i + 1; j < val.size(); ++j)
                    if (mod_floor(val[i] - val[j], m) == 0 || mod_floor(val[i] + val[j], m) == 0) return false;
            }
            return true;
        }
        case RootType::B: {
            if (!lambda.is_integral()) return false;
            auto l = integer_coords(lambda, "type B");
            const long m = 2 * (2 * n - 1);
            std::vector<long> val;
            for (long i = 1; i <= n; ++i) val.push_back(2 * (l[static_cast<std::size_t>(i - 1)] + n - i) + 1);
            for (std::size_t i = 0; i < val.size(); ++i)
                for (std::size_t j = i + 1; j < val.size(); ++j)
                    if (mod_floor(val[i] - val[j], m) == 0 || mod_floor(val[i] + val[j], m) == 0) return false;
            return true;
        }
        case RootType::D: {
            if (!lambda.is_integral()) return false;
            auto l = integer_coords(lambda, "type D");
            if (mod_floor(std::accumulate(l.begin(), l.end(), 0L), 2) != 0) return false;
            const long m = 2 * n - 2;
            std::vector<long> val;
            for (long i = 1; i <= n; ++i) val.push_back(l[static_cast<std::size_t>(i - 1)] + n - i);
            for (std::size_t i = 0; i < val.size(); ++i)
                for (std::size_t j = i + 1; j < val.size(); ++j)
                    if (mod_floor(val[i] - val[j], m) == 0 || mod_floor(val[i] + val[j], m) == 0) return false;
            return true;
        }
        case RootType::G: {
            auto l = integer_coords(lambda, "type G2");
            std::vector<long> val;
            for (long i = 1; i <= 3; ++i) val.push_back(l[static_cast<std::size_t>(i - 1)] + rs.epsilon[static_cast<std::size_t>(i - 1)] * i);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j)
                    if (mod_floor(val[i] - val[j], 12) == 0) return false;
            for (std::size_t i = 0; i < 3; ++i) {
                const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
                if (mod_floor(2 * val[i] - val[j] - val[k], 12) == 0) return false;
            }
            return true;
        }
    }
    return false;
}

Decomposition decompose_mu(const RootSystemData& rs, const AmbientVector& mu) {
    require_bourbaki(rs);
    if (mu.size() != rs.dim) throw DimensionMismatch("decompose_mu: wrong ambient dimension");
    Decomposition d;
    switch (rs.type) {
        case RootType::A: d = decompose_A(rs, mu); break;
        case RootType::B: d = decompose_B(rs, mu); break;
        case RootType::C: d = decompose_C(rs, mu); break;
        case RootType::D: d = decompose_D(rs, mu); break;
        case RootType::G: d = decompose_G(rs, mu); break;
    }
    if (d.tau + d.v.apply(rs.rho) != mu) throw Error("decomposition does not reconstruct " + to_string(mu));
    return d;
}

int kostant_sign(const RootSystemData& rs, const AmbientVector& lambda) {
    if (!is_in_palc(rs, lambda)) throw NotInPalc(to_string(lambda) + " is not in P_alc");
    return decompose_mu(rs, lambda + rs.rho).sign;
}

int generic_sign(const RootSystemData& rs, const AmbientVector& lambda) {
    const AmbientVector mu = lambda + rs.rho;
    BigInt total = 0;
    const Rational scale = Rational(2) / rs.norm_constant;
    for (const auto& a : rs.positive_roots) total += floor_of(dot_standard(mu, a) * scale);
    return mod_floor(total, BigInt(2)) == 0 ? 1 : -1;
}

BigInt weyl_dim(const RootSystemData& rs, const AmbientVector& lambda) {
    require_dominant(rs, lambda);
    const AmbientVector mu = lambda + rs.rho;
    Rational prod = 1;
    for (const auto& a : rs.positive_roots) prod *= dot_standard(mu, a) / dot_standard(rs.rho, a);
    if (!is_integer(prod) || prod <= 0) throw Error("Weyl dimension " + to_string(prod) + " is not a positive integer");
    return prod.get_num();
}

Rational killing_exponent(const RootSystemData& rs, const AmbientVector& lambda) {
    return dot_killing(rs, lambda + Rational(2) * rs.rho, lambda);
}

long exponent(const RootSystemData& rs, const AmbientVector& lambda) {
    Rational e = killing_exponent(rs, lambda);
    if (!is_integer(e) || e < 0)
        throw Error("normalization error: exponent " + to_string(e) + " of " + to_string(lambda) + " is not a nonnegative integer");
    return to_long(e);
}

std::vector<std::vector<long>> dominant_labels_up_to(const RootSystemData& rs, long max_exponent, bool parallel) {
    if (max_exponent < 0) return {};
    const auto r = static_cast<std::size_t>(rs.rank);
    std::vector<Rational> gram(r * r), linear(r);
    BigInt denom = 1;
    for (std::size_t i = 0; i < r; ++i) {
        linear[i] = dot_standard(rs.rho, rs.fundamental_weights[i]);
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), linear[i].get_den_mpz_t());
        for (std::size_t j = 0; j < r; ++j) {
            gram[i * r + j] = dot_standard(rs.fundamental_weights[i], rs.fundamental_weights[j]);
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), gram[i * r + j].get_den_mpz_t());
        }
    }
    kernels::QuadraticBox q;
    q.rank = rs.rank;
    for (const auto& g : gram) q.gram.push_back(to_long(g * denom));
    for (const auto& l : linear) q.linear.push_back(to_long(l * denom));
    // <lambda + 2 rho, lambda> = c * exponent; scaled by the common denominator.
    q.limit = to_long(Rational(denom) * rs.norm_constant * max_exponent);
    for (std::size_t i = 0; i < r; ++i) {
        // a_i^2 <omega_i, omega_i> <= <lambda, lambda> <= limit (all Gram entries are >= 0).
        auto b = static_cast<long>(std::sqrt(static_cast<double>(q.limit) / static_cast<double>(q.gram[i * r + i])));
        while ((b + 1) * (b + 1) * q.gram[i * r + i] <= q.limit) ++b;
        while (b > 0 && b * b * q.gram[i * r + i] > q.limit) --b;
        q.box.push_back(b);
    }
    return parallel ? kernels::box_scan_parallel(q) : kernels::box_scan_serial(q);
}

PalcRecord make_palc_record(const RootSystemData& rs, const AmbientVector& lambda) {
    PalcRecord rec;
    rec.lambda = lambda;
    for (const auto& l : dynkin_labels(rs, lambda)) rec.labels.push_back(to_long(l));
    rec.mu = lambda + rs.rho;
    Decomposition d = decompose_mu(rs, rec.mu);
    rec.tau = d.tau;
    rec.v = d.v;
    rec.sign = d.sign;
    rec.exponent = exponent(rs, lambda);
    rec.dim = weyl_dim(rs, lambda);
    return rec;
}

std::vector<PalcRecord> enumerate_palc(const RootSystemData& rs, long max_exponent) {
    require_bourbaki(rs);
    std::vector<PalcRecord> out;
    for (const auto& labels : dominant_labels_up_to(rs, max_exponent)) {
        AmbientVector lambda = weight_from_labels(rs, labels);
        if (!is_in_palc(rs, lambda)) continue;
        out.push_back(make_palc_record(rs, lambda));
        if (out.back().exponent > max_exponent) out.pop_back();
    }
    std::stable_sort(out.begin(), out.end(), [](const PalcRecord& a, const PalcRecord& b) {
        if (a.exponent != b.exponent) return a.exponent < b.exponent;
        return a.labels < b.labels;
    });
    return out;
}

SeriesCoefficients euler_power(long d, long degree, bool parallel) {
    if (d < 0 || degree < 0) throw Error("euler_power needs d >= 0 and degree >= 0");
    const auto n = static_cast<std::size_t>(degree);
    SeriesCoefficients base(n + 1, BigInt(0));
    base[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = n; k >= m; --k) base[k] -= base[k - m];

    auto mul = parallel ? kernels::truncated_multiply_parallel : kernels::truncated_multiply_serial;
    SeriesCoefficients result(n + 1, BigInt(0));
    result[0] = 1;
    for (long e = d; e > 0; e >>= 1) {
        if (e & 1) result = mul(result, base, n);
        if (e > 1) base = mul(base, base, n);
    }
    return result;
}

SeriesCoefficients kostant_series(const RootSystemData& rs, long degree) {
    SeriesCoefficients out(static_cast<std::size_t>(degree + 1), BigInt(0));
    for (const auto& rec : enumerate_palc(rs, degree)) out[static_cast<std::size_t>(rec.exponent)] += rec.sign * rec.dim;
    return out;
}

IdentityReport verify_identity(const RootSystemData& rs, long degree) {
    IdentityReport rep;
    rep.lie_dim = rs.lie_algebra_dim();
    rep.degree = degree;
    rep.product_side = euler_power(rep.lie_dim, degree);
    rep.sum_side = kostant_series(rs, degree);
    for (std::size_t k = 0; k < rep.product_side.size(); ++k) {
        if (rep.product_side[k] != rep.sum_side[k]) {
            rep.first_mismatch = static_cast<long>(k);
            break;
        }
    }
    return rep;
}

}  // namespace awg
