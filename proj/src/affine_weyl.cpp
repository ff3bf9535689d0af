#include "awg/affine_weyl.hpp"

#include <algorithm>
#include <set>

namespace awg {

FiniteWeylElement FiniteWeylElement::identity(std::size_t dim) {
    FiniteWeylElement v;
    v.images_.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) v.images_[i] = static_cast<int>(i) + 1;
    return v;
}

FiniteWeylElement FiniteWeylElement::from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int im : images) {
        auto j = static_cast<std::size_t>(std::abs(im));
        if (j == 0 || j > images.size() || seen[j - 1]) throw Error("images do not form a signed permutation");
        seen[j - 1] = true;
    }
    FiniteWeylElement v;
    v.images_ = std::move(images);
    return v;
}

int FiniteWeylElement::negative_count() const {
    return static_cast<int>(std::count_if(images_.begin(), images_.end(), [](int x) { return x < 0; }));
}

AmbientVector FiniteWeylElement::apply(const AmbientVector& x) const {
    if (x.size() != images_.size()) throw DimensionMismatch("Weyl element applied to vector of wrong size");
    AmbientVector out(x.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (sign(i) > 0)
            out[target(i)] = x[i];
        else
            out[target(i)] = -x[i];
    }
    return out;
}

FiniteWeylElement FiniteWeylElement::after(const FiniteWeylElement& other) const {
    if (other.dim() != dim()) throw DimensionMismatch("composing Weyl elements of different size");
    FiniteWeylElement r;
    r.images_.resize(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t j = other.target(i);
        r.images_[i] = other.sign(i) * images_[j];
    }
    return r;
}

FiniteWeylElement FiniteWeylElement::inverse() const {
    FiniteWeylElement r;
    r.images_.resize(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.images_[target(i)] = sign(i) * (static_cast<int>(i) + 1);
    return r;
}

bool is_weyl_element(const RootSystemData& rs, const FiniteWeylElement& v) {
    if (v.dim() != rs.dim) return false;
    const int neg = v.negative_count();
    switch (rs.type) {
        case RootType::A: return neg == 0;
        case RootType::B:
        case RootType::C: return true;
        case RootType::D: return neg % 2 == 0;
        case RootType::G: return neg == 0 || neg == 3;
    }
    return false;
}

FiniteWeylElement reflection_element(const RootSystemData& rs, const AmbientVector& alpha) {
    std::vector<int> images(rs.dim);
    bool signed_perm = true;
    for (std::size_t i = 0; i < rs.dim && signed_perm; ++i) {
        AmbientVector img = reflect(alpha, AmbientVector::unit(rs.dim, i));
        int found = 0;
        for (std::size_t j = 0; j < rs.dim; ++j) {
            if (img[j] == 0) continue;
            if (found != 0 || (img[j] != 1 && img[j] != -1)) {
                signed_perm = false;
                break;
            }
            found = img[j] > 0 ? static_cast<int>(j) + 1 : -(static_cast<int>(j) + 1);
        }
        if (found == 0) signed_perm = false;
        images[i] = found;
    }
    FiniteWeylElement v;
    if (signed_perm) {
        v = FiniteWeylElement::from_images(images);
    } else {
        // G2 long root 2e_i - e_j - e_k: on the plane it acts as -(j k).
        if (rs.type != RootType::G) throw Error("reflection is not a signed permutation");
        std::size_t j = 0, k = 0;
        bool found = false;
        for (std::size_t a = 0; a < 3 && !found; ++a)
            for (std::size_t b = a + 1; b < 3 && !found; ++b)
                if (alpha[a] == alpha[b]) {
                    j = a;
                    k = b;
                    found = true;
                }
        if (!found) throw Error("not a G2 root");
        for (std::size_t i = 0; i < 3; ++i) images[i] = -(static_cast<int>(i) + 1);
        images[j] = -(static_cast<int>(k) + 1);
        images[k] = -(static_cast<int>(j) + 1);
        v = FiniteWeylElement::from_images(images);
    }
    for (const auto& b : rs.simple_roots)
        if (v.apply(b) != reflect(alpha, b)) throw Error("reflection realization disagrees with the root system");
    return v;
}

std::optional<FiniteWeylElement> weyl_element_mapping(const RootSystemData& rs, const AmbientVector& source,
                                                      const AmbientVector& target) {
    const std::size_t n = rs.dim;
    if (source.size() != n || target.size() != n) throw DimensionMismatch("weyl_element_mapping: wrong size");
    std::vector<int> images(n, 0);
    std::vector<bool> used(n, false);
    std::optional<FiniteWeylElement> result;
    // Backtracking over coordinate matches; n is small.
    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) {
            auto v = FiniteWeylElement::from_images(images);
            if (is_weyl_element(rs, v) && v.apply(source) == target) {
                result = v;
                return true;
            }
            return false;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            for (int s : {1, -1}) {
                if (s < 0 && source[i] == 0) continue;
                bool ok = s > 0 ? target[j] == source[i] : target[j] == -source[i];
                if (!ok) continue;
                used[j] = true;
                images[i] = s * (static_cast<int>(j) + 1);
                if (self(self, i + 1)) return true;
                if (source[i] == 0 && rs.type == RootType::D) {
                    images[i] = -(static_cast<int>(j) + 1);
                    if (self(self, i + 1)) return true;
                }
                used[j] = false;
            }
        }
        return false;
    };
    search(search, 0);
    return result;
}

long finite_length(const RootSystemData& rs, const FiniteWeylElement& v) {
    long count = 0;
    for (const auto& a : rs.positive_roots)
        if (!rs.is_positive_root(v.apply(a))) ++count;
    return count;
}

namespace {

bool divisible(const Rational& x, long m) {
    if (!is_integer(x)) return false;
    return mpz_divisible_ui_p(x.get_num_mpz_t(), static_cast<unsigned long>(m)) != 0;
}

AmbientVector coordinate_vector(std::size_t dim, long offset) {
    AmbientVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = static_cast<long>(i) + offset;
    return v;
}

}  // namespace

AffineContext make_context(RootSystemData rs, long modulus, AmbientVector base, Preset preset) {
    if (modulus <= 0) throw Error("modulus must be positive");
    if (base.size() != rs.dim) throw DimensionMismatch("base point has wrong ambient dimension");
    AffineContext ctx;
    ctx.rs = std::move(rs);
    ctx.modulus = modulus;
    ctx.base = std::move(base);
    ctx.preset = preset;
    if (!is_regular(ctx, ctx.base)) throw NotRegular("base point " + to_string(ctx.base) + " is not regular");
    for (const auto& a : ctx.rs.positive_roots)
        if (dot_standard(ctx.base, a) <= 0) throw Error("base point is not in the fundamental alcove");
    if (dot_standard(ctx.base, ctx.rs.highest_root) >= modulus) throw Error("base point is not in the fundamental alcove");

    std::vector<Rational> coords;
    for (const auto& b : lattice_basis(ctx.rs, LatticeId::coroot()))
        for (const auto& c : b.coords()) coords.push_back(abs(c));
    Rational p = rational_gcd(coords) * modulus;
    ctx.period = to_long(p);
    return ctx;
}

AffineContext kostant_context(RootType type, int rank) {
    auto rs = build(type, rank, Ordering::bourbaki);
    long m = rs.norm_constant / 2;
    AmbientVector base = rs.rho;
    return make_context(std::move(rs), m, std::move(base), Preset::kostant_half);
}

AffineContext permutation_context(RootType type, int n) {
    AffineContext ctx;
    switch (type) {
        case RootType::A: {
            if (n < 2) throw UnsupportedRootSystem("type A permutation context needs n >= 2");
            auto rs = build(RootType::A, n - 1, Ordering::reversed);
            ctx = make_context(std::move(rs), n, coordinate_vector(static_cast<std::size_t>(n), 1), Preset::permutation);
            break;
        }
        case RootType::B:
        case RootType::C:
        case RootType::D: {
            auto rs = build(type, n, Ordering::reversed);
            ctx = make_context(std::move(rs), 2L * n + 1, coordinate_vector(static_cast<std::size_t>(n), 1),
                               Preset::permutation);
            break;
        }
        case RootType::G: {
            if (n != 2) throw UnsupportedRootSystem("G2 only");
            auto rs = build(RootType::G, 2);
            AmbientVector base = rs.rho;
            ctx = make_context(std::move(rs), 24, std::move(base), Preset::permutation);
            break;
        }
    }
    ctx.window_n = type == RootType::G ? 3 : n;
    return ctx;
}

AffineContext permutation_alt_context_C(int n) {
    auto rs = build(RootType::C, n, Ordering::reversed);
    auto ctx = make_context(std::move(rs), 2L * n + 2, coordinate_vector(static_cast<std::size_t>(n), 1),
                            Preset::permutation_alt);
    ctx.window_n = n;
    return ctx;
}

AffineElement identity_element(const AffineContext& ctx) {
    return {AmbientVector(ctx.rs.dim), FiniteWeylElement::identity(ctx.rs.dim)};
}

AmbientVector act(const AffineContext& ctx, const AffineElement& w, const AmbientVector& x) {
    if (x.size() != ctx.rs.dim) throw DimensionMismatch("act: wrong ambient dimension");
    return w.translation + w.linear.apply(x);
}

static void check_translation(const AffineContext& ctx, const AmbientVector& tau) {
    if (!lattice_contains(ctx.rs, LatticeId::scaled_coroot(ctx.modulus), tau))
        throw LatticeViolation("translation " + to_string(tau) + " is not in " + std::to_string(ctx.modulus) + "Q*");
}

AffineElement compose(const AffineContext& ctx, const AffineElement& w, const AffineElement& u) {
    AffineElement r{w.translation + w.linear.apply(u.translation), w.linear.after(u.linear)};
    check_translation(ctx, r.translation);
    return r;
}

AffineElement inverse(const AffineContext& ctx, const AffineElement& w) {
    FiniteWeylElement inv = w.linear.inverse();
    AffineElement r{-inv.apply(w.translation), inv};
    check_translation(ctx, r.translation);
    return r;
}

std::vector<AffineElement> generators(const AffineContext& ctx) {
    const auto& rs = ctx.rs;
    std::vector<AffineElement> gens;
    gens.push_back({Rational(ctx.modulus) * standard_coroot(rs.highest_root), reflection_element(rs, rs.highest_root)});
    for (const auto& a : rs.simple_roots) gens.push_back({AmbientVector(rs.dim), reflection_element(rs, a)});
    return gens;
}

AffineElement element_from_word(const AffineContext& ctx, std::span<const int> word) {
    const auto gens = generators(ctx);
    AffineElement w = identity_element(ctx);
    for (int g : word) {
        if (g < 0 || static_cast<std::size_t>(g) >= gens.size())
            throw Error("generator index " + std::to_string(g) + " out of range");
        w = compose(ctx, w, gens[static_cast<std::size_t>(g)]);
    }
    return w;
}

bool is_regular(const AffineContext& ctx, const AmbientVector& x) {
    for (const auto& a : ctx.rs.positive_roots)
        if (divisible(dot_standard(x, a), ctx.modulus)) return false;
    return true;
}

std::vector<long> alcove_form(const AffineContext& ctx, const AmbientVector& mu) {
    if (!is_regular(ctx, mu)) throw NotRegular(to_string(mu) + " lies on a reflecting hyperplane");
    std::vector<long> out;
    out.reserve(ctx.rs.positive_roots.size());
    for (const auto& a : ctx.rs.positive_roots) out.push_back(to_long(floor_of(dot_standard(mu, a) / ctx.modulus)));
    return out;
}

long length_from_point(const AffineContext& ctx, const AmbientVector& mu) {
    long total = 0;
    for (long k : alcove_form(ctx, mu)) total += k < 0 ? -k : k;
    return total;
}

int parity(const AffineContext& ctx, const AffineElement& w) {
    return static_cast<int>(finite_length(ctx.rs, w.linear) % 2);
}

bool orbit_contains(const AffineContext& ctx, const AmbientVector& lambda, const LatticeId& lattice,
                    const AmbientVector& mu) {
    return lattice_contains(ctx.rs, lattice, mu - lambda) && is_regular(ctx, mu);
}

std::optional<LatticeId> preset_lattice(const AffineContext& ctx) {
    switch (ctx.preset) {
        case Preset::kostant_half: return LatticeId::root();
        case Preset::permutation:
            if (ctx.rs.type == RootType::D || ctx.rs.type == RootType::G) return std::nullopt;
            return LatticeId::coroot();
        case Preset::permutation_alt: return LatticeId::coroot();
        case Preset::custom: return std::nullopt;
    }
    return std::nullopt;
}

DescentWalk descent_walk(const AffineContext& ctx, const AmbientVector& mu) {
    if (mu.size() != ctx.rs.dim) throw DimensionMismatch("descent_walk: wrong ambient dimension");
    if (!is_regular(ctx, mu)) throw NotInOrbit(to_string(mu) + " is not regular");
    const auto gens = generators(ctx);
    AmbientVector x = mu;
    long len = length_from_point(ctx, x);
    DescentWalk walk;
    while (len > 0) {
        bool moved = false;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            AmbientVector y = act(ctx, gens[g], x);
            long ly = length_from_point(ctx, y);
            if (ly < len) {
                x = std::move(y);
                len = ly;
                walk.word.push_back(static_cast<int>(g));
                moved = true;
                break;
            }
        }
        if (!moved) throw NotInOrbit("descent walk stalled at " + to_string(x));
    }
    if (x != ctx.base) throw NotInOrbit(to_string(mu) + " reaches " + to_string(x) + " instead of the base point");
    walk.element = element_from_word(ctx, walk.word);
    return walk;
}

AffineElement element_from_point(const AffineContext& ctx, const AmbientVector& mu) {
    return descent_walk(ctx, mu).element;
}

bool in_orbit(const AffineContext& ctx, const AmbientVector& mu) {
    if (mu.size() != ctx.rs.dim || !is_regular(ctx, mu)) return false;
    if (auto lattice = preset_lattice(ctx)) return orbit_contains(ctx, ctx.base, *lattice, mu);
    try {
        descent_walk(ctx, mu);
        return true;
    } catch (const NotInOrbit&) {
        return false;
    }
}

BfsMap bfs_enumerate(const AffineContext& ctx, long max_len) {
    const auto gens = generators(ctx);
    BfsMap seen;
    seen.emplace(ctx.base, BfsEntry{0, {}});
    std::vector<BfsMap::const_iterator> frontier{seen.begin()};
    for (long depth = 1; depth <= max_len && !frontier.empty(); ++depth) {
        std::vector<BfsMap::const_iterator> next;
        for (auto it : frontier) {
            for (std::size_t g = 0; g < gens.size(); ++g) {
                AmbientVector y = act(ctx, gens[g], it->first);
                if (seen.count(y)) continue;
                BfsEntry e{depth, {}};
                e.word.reserve(it->second.word.size() + 1);
                e.word.push_back(static_cast<int>(g));
                e.word.insert(e.word.end(), it->second.word.begin(), it->second.word.end());
                next.push_back(seen.emplace(std::move(y), std::move(e)).first);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

Crossings gallery_crossings(const AffineContext& ctx, std::span<const int> word) {
    const auto& rs = ctx.rs;
    const auto gens = generators(ctx);
    Crossings out;
    out.per_root.assign(rs.positive_roots.size(), 0);
    std::set<std::pair<std::size_t, long>> crossed;
    AffineElement prefix = identity_element(ctx);
    for (int g : word) {
        // Wall of the fundamental alcove fixed by s_g: <x, alpha_g> = 0, or <x, theta> = M for s_0.
        const AmbientVector& root = g == 0 ? rs.highest_root : rs.simple_roots[static_cast<std::size_t>(g) - 1];
        const long level = g == 0 ? ctx.modulus : 0;
        // Image under prefix = t_tau v: <y, v(root)> = level + <tau, v(root)>.
        AmbientVector beta = prefix.linear.apply(root);
        Rational value = level + dot_standard(prefix.translation, beta);
        if (!rs.is_positive_root(beta)) {
            beta = -beta;
            value = -value;
        }
        auto idx = static_cast<std::size_t>(
            std::find(rs.positive_roots.begin(), rs.positive_roots.end(), beta) - rs.positive_roots.begin());
        if (idx == rs.positive_roots.size()) throw Error("gallery wall is not a root hyperplane");
        long k = to_long(value / ctx.modulus);
        if (!crossed.emplace(idx, k).second) out.repeated = true;
        ++out.per_root[idx];
        prefix = compose(ctx, prefix, gens[static_cast<std::size_t>(g)]);
    }
    return out;
}

}  // namespace awg
