#include "awg/root_data.hpp"

#include <algorithm>
#include <cctype>

namespace awg {

char type_letter(RootType t) {
    switch (t) {
        case RootType::A: return 'A';
        case RootType::B: return 'B';
        case RootType::C: return 'C';
        case RootType::D: return 'D';
        case RootType::G: return 'G';
    }
    return '?';
}

RootType parse_root_type(std::string_view s) {
    if (s.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(s[0]))) {
            case 'A': return RootType::A;
            case 'B': return RootType::B;
            case 'C': return RootType::C;
            case 'D': return RootType::D;
            case 'G': return RootType::G;
            default: break;
        }
    }
    throw UnsupportedRootSystem("unsupported root system type '" + std::string(s) + "'");
}

std::string RootSystemData::name() const { return std::string(1, type_letter(type)) + std::to_string(rank); }

bool RootSystemData::is_positive_root(const AmbientVector& v) const {
    return std::find(positive_roots.begin(), positive_roots.end(), v) != positive_roots.end();
}

bool RootSystemData::is_root(const AmbientVector& v) const { return is_positive_root(v) || is_positive_root(-v); }

AmbientVector standard_coroot(const AmbientVector& alpha) {
    return alpha * (Rational(2) / dot_standard(alpha, alpha));
}

AmbientVector reflect(const AmbientVector& alpha, const AmbientVector& x) {
    return x - dot_standard(x, standard_coroot(alpha)) * alpha;
}

AmbientVector reverse_coordinates(const AmbientVector& v) {
    AmbientVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[v.size() - 1 - i];
    return r;
}

namespace {

// e_i (+/-) e_j with 0-based indices.
AmbientVector pair_vec(std::size_t dim, std::size_t i, long si, std::size_t j, long sj) {
    AmbientVector v(dim);
    v[i] += si;
    v[j] += sj;
    return v;
}

void fill_bourbaki(RootSystemData& rs) {
    const auto n = static_cast<std::size_t>(rs.rank);
    switch (rs.type) {
        case RootType::A: {
            rs.dim = n + 1;
            for (std::size_t i = 0; i < n; ++i) rs.simple_roots.push_back(pair_vec(rs.dim, i, 1, i + 1, -1));
            for (std::size_t i = 0; i < rs.dim; ++i)
                for (std::size_t j = i + 1; j < rs.dim; ++j) rs.positive_roots.push_back(pair_vec(rs.dim, i, 1, j, -1));
            rs.highest_root = pair_vec(rs.dim, 0, 1, n, -1);
            break;
        }
        case RootType::B:
        case RootType::C:
        case RootType::D: {
            rs.dim = n;
            for (std::size_t i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(pair_vec(n, i, 1, i + 1, -1));
            if (rs.type == RootType::B) rs.simple_roots.push_back(AmbientVector::unit(n, n - 1));
            if (rs.type == RootType::C) rs.simple_roots.push_back(2 * AmbientVector::unit(n, n - 1));
            if (rs.type == RootType::D) rs.simple_roots.push_back(pair_vec(n, n - 2, 1, n - 1, 1));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    rs.positive_roots.push_back(pair_vec(n, i, 1, j, -1));
                    rs.positive_roots.push_back(pair_vec(n, i, 1, j, 1));
                }
                if (rs.type == RootType::B) rs.positive_roots.push_back(AmbientVector::unit(n, i));
                if (rs.type == RootType::C) rs.positive_roots.push_back(2 * AmbientVector::unit(n, i));
            }
            rs.highest_root = rs.type == RootType::C ? 2 * AmbientVector::unit(n, 0) : pair_vec(n, 0, 1, 1, 1);
            break;
        }
        case RootType::G: {
            rs.dim = 3;
            rs.simple_roots = {AmbientVector{1, -1, 0}, AmbientVector{-2, 1, 1}};
            rs.positive_roots = {AmbientVector{1, -1, 0}, AmbientVector{-2, 1, 1}, AmbientVector{-1, 0, 1},
                                 AmbientVector{0, -1, 1}, AmbientVector{1, -2, 1}, AmbientVector{-1, -1, 2}};
            rs.highest_root = AmbientVector{-1, -1, 2};
            rs.epsilon = {-1, -1, 1};
            break;
        }
    }
}

}  // namespace

std::vector<Rational> dynkin_labels(const RootSystemData& rs, const AmbientVector& lambda) {
    std::vector<Rational> out;
    out.reserve(rs.simple_roots.size());
    for (const auto& a : rs.simple_roots) out.push_back(dot_standard(lambda, standard_coroot(a)));
    return out;
}

AmbientVector weight_from_labels(const RootSystemData& rs, const std::vector<long>& labels) {
    if (labels.size() != rs.fundamental_weights.size())
        throw DimensionMismatch("expected " + std::to_string(rs.rank) + " Dynkin labels");
    AmbientVector v(rs.dim);
    for (std::size_t i = 0; i < labels.size(); ++i) v += Rational(labels[i]) * rs.fundamental_weights[i];
    return v;
}

bool is_dominant_weight(const RootSystemData& rs, const AmbientVector& lambda) {
    if (lambda.size() != rs.dim) throw DimensionMismatch("weight has wrong ambient dimension");
    if (!solve_in_span(rs.simple_roots, lambda)) return false;
    for (const auto& l : dynkin_labels(rs, lambda))
        if (!is_integer(l) || l < 0) return false;
    return true;
}

RootSystemData build(RootType type, int rank, Ordering ordering) {
    const int min_rank = type == RootType::A ? 1 : type == RootType::D ? 3 : 2;
    if (rank < min_rank || (type == RootType::G && rank != 2) || rank > 64)
        throw UnsupportedRootSystem("unsupported root system " + std::string(1, type_letter(type)) +
                                    std::to_string(rank));
    if (type == RootType::G && ordering == Ordering::reversed)
        throw UnsupportedRootSystem("G2 is only realized in the bourbaki ordering");

    RootSystemData rs;
    rs.type = type;
    rs.rank = rank;
    rs.ordering = ordering;
    fill_bourbaki(rs);

    if (ordering == Ordering::reversed) {
        std::vector<AmbientVector> simple;
        for (auto it = rs.simple_roots.rbegin(); it != rs.simple_roots.rend(); ++it)
            simple.push_back(reverse_coordinates(*it));
        rs.simple_roots = std::move(simple);
        for (auto& a : rs.positive_roots) a = reverse_coordinates(a);
        rs.highest_root = reverse_coordinates(rs.highest_root);
    }

    rs.rho = AmbientVector(rs.dim);
    for (const auto& a : rs.positive_roots) rs.rho += a;
    rs.rho *= Rational(1, 2);

    // Fundamental weights: omega_i in span(Pi) with <omega_i, alpha_j^*> = delta_ij.
    const auto n = static_cast<std::size_t>(rank);
    std::vector<AmbientVector> cartan_cols(n, AmbientVector(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            cartan_cols[k][j] = dot_standard(rs.simple_roots[k], standard_coroot(rs.simple_roots[j]));
    for (std::size_t i = 0; i < n; ++i) {
        auto coeffs = solve_in_span(cartan_cols, AmbientVector::unit(n, i));
        if (!coeffs) throw Error("degenerate Cartan matrix");
        AmbientVector w(rs.dim);
        for (std::size_t k = 0; k < n; ++k) w += (*coeffs)[k] * rs.simple_roots[k];
        rs.fundamental_weights.push_back(std::move(w));
    }

    std::vector<AmbientVector> simple_coroots;
    for (const auto& a : rs.simple_roots) simple_coroots.push_back(standard_coroot(a));
    auto marks = solve_in_span(simple_coroots, standard_coroot(rs.highest_root));
    if (!marks) throw Error("highest coroot not in the coroot span");
    long sum = 0;
    for (const auto& m : *marks) {
        rs.marks.push_back(to_long(m));
        sum += rs.marks.back();
    }
    rs.dual_coxeter = 1 + sum;
    rs.norm_constant = to_long(dot_standard(rs.highest_root, rs.highest_root) * rs.dual_coxeter);
    return rs;
}

AmbientVector bar_map_A(const RootSystemData& rs, const AmbientVector& lambda) {
    if (rs.type != RootType::A) throw UnsupportedRootSystem("bar map is defined for type A only");
    if (lambda.size() != rs.dim) throw DimensionMismatch("bar map: wrong ambient dimension");
    AmbientVector ones(rs.dim);
    for (std::size_t i = 0; i < rs.dim; ++i) ones[i] = 1;
    return lambda - lambda[rs.dim - 1] * ones;
}

WeightInterval unique_weight_interval(const RootSystemData& rs) {
    WeightInterval out;
    out.min_mark = *std::min_element(rs.marks.begin(), rs.marks.end());
    const Rational theta_killing(1, rs.dual_coxeter);  // (theta, theta) = 1 / h^vee
    out.lower = theta_killing * (rs.dual_coxeter - 1) / 2;
    out.upper = theta_killing * (rs.dual_coxeter + out.min_mark - 1) / 2;
    out.lower_standard = out.lower * rs.norm_constant;
    out.upper_standard = out.upper * rs.norm_constant;
    return out;
}

}  // namespace awg
