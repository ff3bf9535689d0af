#include "awg/zperm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace awg {

std::string family_name(PermFamily f) {
    switch (f) {
        case PermFamily::A: return "A";
        case PermFamily::B: return "B";
        case PermFamily::C: return "C";
        case PermFamily::D: return "D";
        case PermFamily::G: return "G";
        case PermFamily::CAlt: return "Calt";
    }
    return "?";
}

PermFamily parse_family(std::string_view s) {
    std::string t(s);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "calt") return PermFamily::CAlt;
    switch (parse_root_type(s)) {
        case RootType::A: return PermFamily::A;
        case RootType::B: return PermFamily::B;
        case RootType::C: return PermFamily::C;
        case RootType::D: return PermFamily::D;
        case RootType::G: return PermFamily::G;
    }
    throw UnsupportedRootSystem("unknown family " + t);
}

long family_period(PermFamily family, int n) {
    switch (family) {
        case PermFamily::A: return n;
        case PermFamily::B:
        case PermFamily::C:
        case PermFamily::D: return 2L * n + 1;
        case PermFamily::CAlt: return 2L * n + 2;
        case PermFamily::G: return 8;
    }
    return 0;
}

long family_lo(PermFamily family, int n) {
    switch (family) {
        case PermFamily::A: return 1;
        case PermFamily::G: return -3;
        default: return -n;
    }
}

namespace {

void check_size(PermFamily family, int n) {
    const int min = family == PermFamily::A ? 2 : family == PermFamily::D ? 3 : 2;
    if (family == PermFamily::G ? n != 2 : n < min)
        throw UnsupportedRootSystem("unsupported size " + std::to_string(n) + " for family " + family_name(family));
}

}  // namespace

PeriodicPermutation::PeriodicPermutation(PermFamily family, int n, std::vector<long> window)
    : family_(family), n_(n), period_(family_period(family, n)), lo_(family_lo(family, n)), window_(std::move(window)) {
    check_size(family, n);
    if (static_cast<long>(window_.size()) != period_)
        throw NotAPermutation("window has " + std::to_string(window_.size()) + " values, expected " + std::to_string(period_));
    std::vector<bool> seen(static_cast<std::size_t>(period_), false);
    for (long v : window_) {
        auto r = static_cast<std::size_t>(mod_floor(v, period_));
        if (seen[r]) throw NotAPermutation("window values are not distinct mod " + std::to_string(period_));
        seen[r] = true;
    }
}

PeriodicPermutation PeriodicPermutation::identity(PermFamily family, int n) {
    const long p = family_period(family, n), lo = family_lo(family, n);
    std::vector<long> w;
    for (long i = lo; i < lo + p; ++i) w.push_back(i);
    return PeriodicPermutation(family, n, std::move(w));
}

long PeriodicPermutation::apply(long z) const {
    const long k = floor_div(z - lo_, period_);
    return window_[static_cast<std::size_t>(z - k * period_ - lo_)] + k * period_;
}

namespace {

void require_same_group(const PeriodicPermutation& f, const PeriodicPermutation& g) {
    if (f.family() != g.family() || f.n() != g.n())
        throw Error("permutations belong to different groups: " + family_name(f.family()) + std::to_string(f.n()) +
                    " and " + family_name(g.family()) + std::to_string(g.n()));
}

}  // namespace

PeriodicPermutation compose(const PeriodicPermutation& f, const PeriodicPermutation& g) {
    require_same_group(f, g);
    std::vector<long> w;
    for (long i = f.lo(); i <= f.hi(); ++i) w.push_back(g.apply(f.apply(i)));
    return PeriodicPermutation(f.family(), f.n(), std::move(w));
}

PeriodicPermutation inverse(const PeriodicPermutation& f) {
    std::vector<long> w(f.window().size());
    const long p = f.period();
    for (long i = f.lo(); i <= f.hi(); ++i) {
        const long v = f.apply(i);
        const long k = floor_div(v - f.lo(), p);
        w[static_cast<std::size_t>(v - k * p - f.lo())] = i - k * p;
    }
    return PeriodicPermutation(f.family(), f.n(), std::move(w));
}

AffineContext family_context(PermFamily family, int n) {
    switch (family) {
        case PermFamily::A: return permutation_context(RootType::A, n);
        case PermFamily::B: return permutation_context(RootType::B, n);
        case PermFamily::C: return permutation_context(RootType::C, n);
        case PermFamily::D: return permutation_context(RootType::D, n);
        case PermFamily::G: return permutation_context(RootType::G, n);
        case PermFamily::CAlt: return permutation_alt_context_C(n);
    }
    throw Error("unknown family");
}

PermFamily context_family(const AffineContext& ctx) {
    if (ctx.preset == Preset::permutation_alt) return PermFamily::CAlt;
    if (ctx.preset != Preset::permutation) throw Error("not a permutation context");
    switch (ctx.rs.type) {
        case RootType::A: return PermFamily::A;
        case RootType::B: return PermFamily::B;
        case RootType::C: return PermFamily::C;
        case RootType::D: return PermFamily::D;
        case RootType::G: return PermFamily::G;
    }
    throw Error("unknown family");
}

namespace {

int context_n(const AffineContext& ctx) {
    return ctx.rs.type == RootType::A ? ctx.window_n : ctx.rs.rank;
}

long coordinate(const AmbientVector& x, std::size_t i) {
    if (!is_integer(x[i])) throw Error("non-integral orbit point " + to_string(x));
    return to_long(x[i]);
}

}  // namespace

PeriodicPermutation star(const AffineContext& ctx, const AffineElement& w) {
    const PermFamily family = context_family(ctx);
    const int n = context_n(ctx);
    const AmbientVector x = act(ctx, w, ctx.base);
    const long lo = family_lo(family, n), p = family_period(family, n);
    std::vector<long> win;
    for (long i = lo; i < lo + p; ++i) {
        const auto a = static_cast<std::size_t>(std::labs(i));
        const long s = i < 0 ? -1 : 1;
        switch (family) {
            case PermFamily::A: win.push_back(coordinate(x, a - 1)); break;
            case PermFamily::B:
            case PermFamily::C:
            case PermFamily::D: win.push_back(i == 0 ? 0 : s * coordinate(x, a - 1)); break;
            case PermFamily::CAlt: win.push_back(i == 0 || i == n + 1 ? i : s * coordinate(x, a - 1)); break;
            case PermFamily::G:
                win.push_back(i == 0 || i == 4 ? i : s * ctx.rs.epsilon[a - 1] * coordinate(x, a - 1));
                break;
        }
    }
    return PeriodicPermutation(family, n, std::move(win));
}

PeriodicPermutation star_alt_C(int n, const AffineElement& w) {
    return star(permutation_alt_context_C(n), w);
}

namespace {

MembershipResult fail(std::string reason) { return {false, std::move(reason)}; }

// Representative of z mod p in [lo, lo + p).
long bar(const PeriodicPermutation& f, long z) {
    return z - f.period() * floor_div(z - f.lo(), f.period());
}

MembershipResult check_antisymmetric(const PeriodicPermutation& f, long up_to) {
    for (long i = -up_to; i <= up_to; ++i)
        if (f.apply(-i) != -f.apply(i))
            return fail("(1) (-z)^f = -z^f fails at z = " + std::to_string(i));
    return {};
}

long positive_sum(const PeriodicPermutation& f) {
    long s = 0;
    for (long i = 1; i <= f.n(); ++i) s += f.apply(i);
    return s;
}

bool b_parity(const PeriodicPermutation& f) {
    const long n = f.n();
    return mod_floor(positive_sum(f) - n * (n + 1) / 2, 2) == 0;
}

}  // namespace

MembershipResult check_membership(const PeriodicPermutation& f) {
    const long n = f.n();
    switch (f.family()) {
        case PermFamily::A: {
            if (positive_sum(f) != n * (n + 1) / 2)
                return fail("(2) sum of i^f over [n] is " + std::to_string(positive_sum(f)) + ", expected " +
                            std::to_string(n * (n + 1) / 2));
            return {};
        }
        case PermFamily::C: return check_antisymmetric(f, n);
        case PermFamily::B:
        case PermFamily::D: {
            if (auto r = check_antisymmetric(f, n); !r) return r;
            if (!b_parity(f)) return fail("(3) sum of i^f over [n] is not congruent to binom(n+1, 2) mod 2");
            if (f.family() == PermFamily::D) {
                long negatives = 0;
                for (long i = 1; i <= n; ++i) negatives += bar(f, f.apply(i)) < 0;
                if (negatives % 2 != 0) return fail("(3) odd number of i in [n] with negative residue of i^f");
            }
            return {};
        }
        case PermFamily::CAlt: {
            if (auto r = check_antisymmetric(f, n); !r) return r;
            if (f.apply(n + 1) != n + 1) return fail("(n+1)^f = n+1 fails");
            return {};
        }
        case PermFamily::G: {
            if (auto r = check_antisymmetric(f, 3); !r) return r;
            if (f.apply(4) != 4) return fail("(2) 4^f = 4 fails");
            const long a = f.apply(1), b = f.apply(2), c = f.apply(3);
            if (-a - b + c != 0) return fail("(3) -1^f - 2^f + 3^f = 0 fails");
            std::vector<long> residues{bar(f, -a), bar(f, -b), bar(f, c)};
            std::sort(residues.begin(), residues.end());
            if (residues != std::vector<long>{-2, -1, 3} && residues != std::vector<long>{-3, 1, 2})
                return fail("(3) residues of -1^f, -2^f, 3^f are not +-{-1, -2, 3}");
            const long da = mod_floor(-(a - bar(f, a)), 3), db = mod_floor(-(b - bar(f, b)), 3),
                       dc = mod_floor(c - bar(f, c), 3);
            if (da != db || db != dc) return fail("(3) translation parts are not congruent mod 3");
            return {};
        }
    }
    return fail("unknown family");
}

bool check_membership_B_alt(const PeriodicPermutation& f, BParity variant) {
    if (f.family() != PermFamily::B) throw Error("parity variants apply to type B only");
    const long n = f.n(), p = f.period();
    switch (variant) {
        case BParity::sum: return b_parity(f);
        case BParity::residues: {
            long s = 0;
            for (long i = 1; i <= n; ++i) s += f.apply(i) - bar(f, f.apply(i));
            return mod_floor(s, 2 * p) == 0;
        }
        case BParity::count_above: {
            // Every j <= n is i + kp with i in [-n, n] and k <= 0; j^f > n iff k > (n - i^f) / p.
            long count = 0;
            for (long i = f.lo(); i <= f.hi(); ++i) count += std::max(0L, -floor_div(n - f.apply(i), p));
            return count % 2 == 0;
        }
    }
    return false;
}

AffineElement unstar(const AffineContext& ctx, const PeriodicPermutation& f) {
    const PermFamily family = context_family(ctx);
    if (family != f.family() || context_n(ctx) != f.n()) throw Error("permutation does not match the context");
    if (auto r = check_membership(f); !r) throw NotInOrbit(r.reason);
    AmbientVector mu(ctx.rs.dim);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        long v = f.apply(static_cast<long>(i) + 1);
        if (family == PermFamily::G) v *= ctx.rs.epsilon[i];
        mu[i] = v;
    }
    if (!in_orbit(ctx, mu)) throw NotInOrbit(to_string(mu) + " is not in the orbit of the base point");
    AffineElement w = element_from_point(ctx, mu);
    if (star(ctx, w) != f) throw Error("reconstructed element does not reproduce the window");
    return w;
}

long length_from_zperm_A(const PeriodicPermutation& f) {
    if (f.family() != PermFamily::A) throw Error("length_from_zperm_A needs a type A permutation");
    if (auto r = check_membership(f); !r) throw NotInOrbit(r.reason);
    long total = 0;
    for (long i = 1; i <= f.n(); ++i)
        for (long j = i + 1; j <= f.n(); ++j) total += std::labs(floor_div(f.apply(j) - f.apply(i), f.n()));
    return total;
}

std::string serialize(const PeriodicPermutation& f) {
    std::ostringstream os;
    os << family_name(f.family()) << ' ' << f.n() << ' ' << f.period() << '\n';
    for (long i = f.lo(); i <= f.hi(); ++i) os << i << " -> " << f.apply(i) << '\n';
    return os.str();
}

std::string one_line(const PeriodicPermutation& f) {
    std::ostringstream os;
    for (long i = f.lo(); i <= f.hi(); ++i) os << (i == f.lo() ? "" : ", ") << i << " -> " << f.apply(i);
    return os.str();
}

PeriodicPermutation parse_window(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    PermFamily family{};
    int n = 0;
    long period = 0;
    std::map<long, long> values;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        auto bad = [&] { return NotAPermutation("malformed window line " + std::to_string(line_no) + ": " + line); };
        if (!have_header) {
            std::string name;
            if (!(ls >> name >> n >> period)) throw bad();
            family = parse_family(name);
            if (period != family_period(family, n)) throw NotAPermutation("period " + std::to_string(period) + " does not match " + name + " " + std::to_string(n));
            have_header = true;
            continue;
        }
        long i = 0, v = 0;
        std::string arrow;
        if (!(ls >> i >> arrow >> v) || arrow != "->") throw bad();
        std::string rest;
        if (ls >> rest) throw bad();
        if (!values.emplace(i, v).second) throw NotAPermutation("representative " + std::to_string(i) + " given twice");
    }
    if (!have_header) throw NotAPermutation("missing header line");
    const long lo = family_lo(family, n);
    std::vector<long> window;
    for (long i = lo; i < lo + period; ++i) {
        auto it = values.find(i);
        if (it == values.end()) throw NotAPermutation("missing representative " + std::to_string(i));
        window.push_back(it->second);
    }
    if (values.size() != window.size()) throw NotAPermutation("value given for a non-representative");
    return PeriodicPermutation(family, n, std::move(window));
}

}  // namespace awg
