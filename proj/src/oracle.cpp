#include "awg/oracle.hpp"

#include <random>

namespace awg {

namespace {

struct Recorder {
    OracleReport& report;
    void operator()(const std::string& kind, bool ok, const std::string& detail) {
        ++report.checks;
        ++report.checks_by_kind[kind];
        if (ok) return;
        ++report.discrepancies;
        if (report.failures.size() < 20) report.failures.push_back(kind + ": " + detail);
    }
};

}  // namespace

OracleReport run_oracle(const AffineContext& ctx, long max_len, std::uint64_t seed, long samples) {
    OracleReport report;
    Recorder check{report};
    const BfsMap ball = bfs_enumerate(ctx, max_len);
    report.points = static_cast<long>(ball.size());
    const auto lattice = preset_lattice(ctx);

    for (const auto& [mu, entry] : ball) {
        const std::string at = to_string(mu);
        const long len = length_from_point(ctx, mu);
        check("length", len == entry.length, at + " has formula length " + std::to_string(len) + ", depth " + std::to_string(entry.length));

        const AffineElement w = element_from_word(ctx, entry.word);
        check("word", static_cast<long>(entry.word.size()) == entry.length && act(ctx, w, ctx.base) == mu, at);

        const auto form = alcove_form(ctx, mu);
        const Crossings crossings = gallery_crossings(ctx, entry.word);
        bool same = !crossings.repeated;
        for (std::size_t i = 0; i < form.size(); ++i) same = same && crossings.per_root[i] == (form[i] < 0 ? -form[i] : form[i]);
        check("alcove", same, at);

        check("parity", parity(ctx, w) == entry.length % 2, at);

        const DescentWalk walk = descent_walk(ctx, mu);
        check("walk", static_cast<long>(walk.word.size()) == entry.length && act(ctx, walk.element, ctx.base) == mu, at);

        bool member = in_orbit(ctx, mu);
        if (lattice) member = member && orbit_contains(ctx, ctx.base, *lattice, mu);
        check("orbit", member, at);
    }

    // Random points of base + L, drawn from a coordinate box and from around the ball.
    const auto basis = lattice_basis(ctx.rs, lattice.value_or(LatticeId::root()));
    std::mt19937_64 rng(seed);
    const long radius = ctx.modulus * (max_len + 2) / 2 + 1;
    std::uniform_int_distribution<long> wide(-radius, radius), narrow(-2, 2);
    std::vector<const AmbientVector*> points;
    for (const auto& kv : ball) points.push_back(&kv.first);
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    for (long s = 0; s < samples; ++s) {
        const bool near = s % 2 == 1;
        AmbientVector mu = near ? *points[pick(rng)] : ctx.base;
        for (const auto& b : basis) mu += Rational(near ? narrow(rng) : wide(rng)) * b;
        const bool in_ball = ball.count(mu) > 0;
        report.sampled_in_ball += in_ball;
        const bool predicted = in_orbit(ctx, mu) && length_from_point(ctx, mu) <= max_len;
        check("ball_agreement", in_ball == predicted, to_string(mu) + (in_ball ? " is in the ball" : " is outside the ball"));
    }
    return report;
}

}  // namespace awg
