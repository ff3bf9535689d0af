#include "awg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace awg {

using nlohmann::json;

json to_json(const AmbientVector& v) {
    json out = json::array();
    for (const auto& c : v.coords()) out.push_back(to_string(c));
    return out;
}

AmbientVector vector_from_json(const json& j) {
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(parse_rational(c.get<std::string>()));
    return AmbientVector(std::move(coords));
}

namespace {

json images_json(const FiniteWeylElement& v) {
    return json(std::vector<int>(v.images().begin(), v.images().end()));
}

json series_json(const SeriesCoefficients& s) {
    json out = json::array();
    for (const auto& c : s) out.push_back(to_string(c));
    return out;
}

SeriesCoefficients series_from_json(const json& j) {
    SeriesCoefficients out;
    for (const auto& c : j) out.emplace_back(c.get<std::string>(), 10);
    return out;
}

std::string join(const std::vector<long>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

std::string join_word(const std::vector<int>& word) {
    return join(std::vector<long>(word.begin(), word.end()));
}

std::string vector_cell(const AmbientVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    return out;
}

}  // namespace

json to_json(const PalcRecord& r) {
    return json{{"lambda", to_json(r.lambda)}, {"labels", r.labels},   {"mu", to_json(r.mu)},
                {"tau", to_json(r.tau)},       {"v", images_json(r.v)}, {"sign", r.sign},
                {"exponent", r.exponent},      {"dim", to_string(r.dim)}};
}

PalcRecord palc_record_from_json(const json& j) {
    PalcRecord r;
    r.lambda = vector_from_json(j.at("lambda"));
    r.labels = j.at("labels").get<std::vector<long>>();
    r.mu = vector_from_json(j.at("mu"));
    r.tau = vector_from_json(j.at("tau"));
    r.v = FiniteWeylElement::from_images(j.at("v").get<std::vector<int>>());
    r.sign = j.at("sign").get<int>();
    r.exponent = j.at("exponent").get<long>();
    r.dim = BigInt(j.at("dim").get<std::string>(), 10);
    return r;
}

json to_json(const IdentityReport& r) {
    json out{{"lie_dim", r.lie_dim},
             {"degree", r.degree},
             {"equal", r.equal()},
             {"first_mismatch", nullptr},
             {"product", series_json(r.product_side)},
             {"sum", series_json(r.sum_side)}};
    if (r.first_mismatch) out["first_mismatch"] = *r.first_mismatch;
    return out;
}

IdentityReport identity_report_from_json(const json& j) {
    IdentityReport r;
    r.lie_dim = j.at("lie_dim").get<long>();
    r.degree = j.at("degree").get<long>();
    r.product_side = series_from_json(j.at("product"));
    r.sum_side = series_from_json(j.at("sum"));
    if (!j.at("first_mismatch").is_null()) r.first_mismatch = j.at("first_mismatch").get<long>();
    return r;
}

json to_json(const PeriodicPermutation& f) {
    json window = json::array();
    for (long i = f.lo(); i <= f.hi(); ++i) window.push_back({i, f.apply(i)});
    return json{{"family", family_name(f.family())}, {"n", f.n()}, {"period", f.period()}, {"window", window}};
}

PeriodicPermutation permutation_from_json(const json& j) {
    const PermFamily family = parse_family(j.at("family").get<std::string>());
    const int n = j.at("n").get<int>();
    if (j.at("period").get<long>() != family_period(family, n)) throw NotAPermutation("period does not match the family");
    std::map<long, long> values;
    for (const auto& pair : j.at("window")) values[pair.at(0).get<long>()] = pair.at(1).get<long>();
    std::vector<long> window;
    const long lo = family_lo(family, n);
    for (long i = lo; i < lo + family_period(family, n); ++i) {
        auto it = values.find(i);
        if (it == values.end()) throw NotAPermutation("missing representative " + std::to_string(i));
        window.push_back(it->second);
    }
    return PeriodicPermutation(family, n, std::move(window));
}

json to_json(const OracleReport& r) {
    return json{{"points", r.points},
                {"checks", r.checks},
                {"discrepancies", r.discrepancies},
                {"sampled_in_ball", r.sampled_in_ball},
                {"checks_by_kind", r.checks_by_kind},
                {"failures", r.failures}};
}

OracleReport oracle_report_from_json(const json& j) {
    OracleReport r;
    r.points = j.at("points").get<long>();
    r.checks = j.at("checks").get<long>();
    r.discrepancies = j.at("discrepancies").get<long>();
    r.sampled_in_ball = j.at("sampled_in_ball").get<long>();
    r.checks_by_kind = j.at("checks_by_kind").get<std::map<std::string, long>>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
    return r;
}

std::vector<int> parse_word(std::string_view text) {
    std::vector<int> word;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        const auto a = token.find_first_not_of(" \t");
        if (a == std::string::npos) {
            if (text.find_first_not_of(" \t") == std::string_view::npos) break;
            throw Error("empty generator in word '" + std::string(text) + "'");
        }
        const auto b = token.find_last_not_of(" \t");
        const std::string t = token.substr(a, b - a + 1);
        if (t.find_first_not_of("0123456789") != std::string::npos || t.size() > 6)
            throw Error("malformed generator '" + t + "' in word");
        word.push_back(std::stoi(t));
    }
    return word;
}

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string type;
    int rank = 0;
    std::string format;  // empty until parsed; each subcommand has its own default
    long degree = 0;
    long max_exponent = 0;
    bool self_check = false;
    std::string word;
    bool alt = false;
    std::string window_file;
    long max_len = 0;
    std::uint64_t seed = 1;
    std::string context = "kostant";
};

int cmd_verify_euler(const Options& o, std::ostream& out, std::ostream& err) {
    const auto rs = build(parse_root_type(o.type), o.rank);
    const IdentityReport rep = verify_identity(rs, o.degree);
    if (o.format == "tsv") {
        out << "k\tproduct\tsum\n";
        for (std::size_t k = 0; k < rep.product_side.size(); ++k)
            out << k << '\t' << rep.product_side[k] << '\t' << rep.sum_side[k] << '\n';
    } else {
        json j = to_json(rep);
        j["type"] = std::string(1, type_letter(rs.type));
        j["rank"] = rs.rank;
        out << j.dump() << '\n';
    }
    if (!rep.equal()) {
        const auto k = static_cast<std::size_t>(*rep.first_mismatch);
        err << rs.name() << ": coefficients differ at x^" << k << ": product " << rep.product_side[k] << ", sum "
            << rep.sum_side[k] << '\n';
        return exit_mismatch;
    }
    return exit_ok;
}

std::vector<std::string> self_check(const RootSystemData& rs, const PalcRecord& r, long max_exponent) {
    std::vector<std::string> problems;
    const std::string at = to_string(r.lambda) + ": ";
    if (!is_in_palc_typed(rs, r.lambda)) problems.push_back(at + "fails the typed congruences");
    if (generic_sign(rs, r.lambda) != r.sign) problems.push_back(at + "typed and generic signs differ");
    if (r.tau + r.v.apply(rs.rho) != r.mu) problems.push_back(at + "tau + v(rho) != lambda + rho");
    if (!lattice_contains(rs, half_coroot_lattice(rs), r.tau)) problems.push_back(at + "tau is not in 1/2 Q^vee");
    if (r.exponent > max_exponent) problems.push_back(at + "exponent out of range");
    return problems;
}

int cmd_palc(const Options& o, std::ostream& out, std::ostream& err) {
    const auto rs = build(parse_root_type(o.type), o.rank);
    const auto records = enumerate_palc(rs, o.max_exponent);
    std::vector<std::string> problems;
    if (o.self_check)
        for (const auto& r : records)
            for (auto& p : self_check(rs, r, o.max_exponent)) problems.push_back(std::move(p));
    if (o.format == "tsv") {
        out << "exponent\tlabels\tlambda\tsign\tdim\ttau\tv\n";
        for (const auto& r : records) {
            std::vector<long> images(r.v.images().begin(), r.v.images().end());
            out << r.exponent << '\t' << join(r.labels) << '\t' << vector_cell(r.lambda) << '\t' << r.sign << '\t'
                << r.dim << '\t' << vector_cell(r.tau) << '\t' << join(images) << '\n';
        }
    } else {
        json rows = json::array();
        for (const auto& r : records) rows.push_back(to_json(r));
        json j{{"type", std::string(1, type_letter(rs.type))}, {"rank", rs.rank}, {"max_exponent", o.max_exponent},
               {"records", rows}};
        if (o.self_check) j["self_check"] = json{{"checked", records.size()}, {"failures", problems}};
        out << j.dump() << '\n';
    }
    for (const auto& p : problems) err << p << '\n';
    return problems.empty() ? exit_ok : exit_mismatch;
}

PermFamily family_for(const Options& o) {
    PermFamily f = parse_family(o.type);
    if (o.alt) {
        if (f != PermFamily::C && f != PermFamily::CAlt) throw UsageError("--alt applies to type C only");
        f = PermFamily::CAlt;
    }
    return f;
}

int cmd_perm(const Options& o, std::ostream& out) {
    const PermFamily family = family_for(o);
    const auto ctx = family_context(family, o.rank);
    const auto word = parse_word(o.word);
    for (int g : word)
        if (g > ctx.rs.rank) throw UsageError("generator " + std::to_string(g) + " out of range 0.." + std::to_string(ctx.rs.rank));
    const AffineElement w = element_from_word(ctx, word);
    const PeriodicPermutation f = star(ctx, w);
    const long length = length_from_point(ctx, act(ctx, w, ctx.base));
    if (o.format == "json") {
        json j = to_json(f);
        j["word"] = word;
        j["length"] = length;
        out << j.dump() << '\n';
    } else if (o.format == "tsv") {
        out << "i\tvalue\n";
        for (long i = f.lo(); i <= f.hi(); ++i) out << i << '\t' << f.apply(i) << '\n';
    } else {
        out << serialize(f);
    }
    return exit_ok;
}

int cmd_check_perm(const Options& o, std::istream& in, std::ostream& out) {
    const PermFamily family = family_for(o);
    std::string text;
    if (o.window_file == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(o.window_file);
        if (!file) throw UsageError("cannot read window file " + o.window_file);
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }

    json j{{"member", false}, {"reason", ""}};
    std::vector<int> word;
    try {
        const PeriodicPermutation f = parse_window(text);
        if (f.family() != family || f.n() != o.rank)
            throw UsageError("window header " + family_name(f.family()) + " " + std::to_string(f.n()) +
                             " does not match the command line");
        const auto ctx = family_context(family, o.rank);
        if (auto r = check_membership(f); !r) {
            j["reason"] = r.reason;
        } else {
            const AffineElement w = unstar(ctx, f);
            word = descent_walk(ctx, act(ctx, w, ctx.base)).word;
            j["member"] = true;
            j["word"] = word;
            j["length"] = word.size();
        }
    } catch (const NotAPermutation& e) {
        j["reason"] = e.what();
    } catch (const NotInOrbit& e) {
        j["reason"] = e.what();
    }

    const bool member = j["member"].get<bool>();
    if (o.format == "json") {
        out << j.dump() << '\n';
    } else if (member) {
        out << "accepted\nword: " << join_word(word) << "\nlength: " << word.size() << '\n';
    } else {
        out << "rejected: " << j["reason"].get<std::string>() << '\n';
    }
    return member ? exit_ok : exit_mismatch;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
    const RootType type = parse_root_type(o.type);
    AffineContext ctx;
    if (o.context == "kostant") ctx = kostant_context(type, o.rank);
    else if (o.context == "perm") ctx = permutation_context(type, o.rank);
    else if (type == RootType::C) ctx = permutation_alt_context_C(o.rank);
    else throw UsageError("--context alt applies to type C only");
    const OracleReport rep = run_oracle(ctx, o.max_len, o.seed);
    if (o.format == "tsv") {
        out << "kind\tchecks\n";
        for (const auto& [kind, n] : rep.checks_by_kind) out << kind << '\t' << n << '\n';
        out << "points\t" << rep.points << "\ndiscrepancies\t" << rep.discrepancies << '\n';
    } else {
        json j = to_json(rep);
        j["type"] = std::string(1, type_letter(type));
        j["rank"] = o.rank;
        j["context"] = o.context;
        j["max_len"] = o.max_len;
        j["seed"] = o.seed;
        out << j.dump() << '\n';
    }
    for (const auto& f : rep.failures) err << f << '\n';
    return rep.ok() ? exit_ok : exit_mismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Affine Weyl group orbits, Kostant's Euler-product expansion and permutation representations", "awg"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, const char* rank_help, const char* default_format) {
        sub->add_option("type", o.type, "Root system type: A, B, C, D or G")->required();
        sub->add_option("rank", o.rank, rank_help)->required()->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, std::string("Output format: json, tsv or text (default ") + default_format + ")")
            ->check(CLI::IsMember({"json", "tsv", "text"}));
    };

    auto* verify = app.add_subcommand("verify-euler", "Compare both sides of the Euler-product expansion");
    add_common(verify, "Rank", "json");
    verify->add_option("--degree", o.degree, "Highest power of x")->required()->check(CLI::NonNegativeNumber);

    auto* palc = app.add_subcommand("palc", "List the weights in P_alc with their signs and dimensions");
    add_common(palc, "Rank", "json");
    palc->add_option("--max-exponent", o.max_exponent, "Largest exponent (lambda + 2 rho, lambda)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    palc->add_flag("--self-check", o.self_check, "Validate each row against the typed congruences and the generic sign");

    auto* perm = app.add_subcommand("perm", "Window of the permutation of Z attached to a word");
    add_common(perm, "Window size for type A, rank otherwise", "text");
    perm->add_option("--word", o.word, "Comma-separated generator indices (0 is the affine reflection)")->required();
    perm->add_flag("--alt", o.alt, "Use the alternative C_n representation (period 2n+2)");

    auto* check = app.add_subcommand("check-perm", "Decide whether a window lies in the group and recover a word");
    add_common(check, "Window size for type A, rank otherwise", "text");
    check->add_option("--window", o.window_file, "Window file in serialization format, or - for stdin")->required();
    check->add_flag("--alt", o.alt, "Use the alternative C_n representation (period 2n+2)");

    auto* oracle = app.add_subcommand("oracle", "Cross-check the alcove formulas against breadth-first search");
    add_common(oracle, "Rank (window size for type A with --context perm)", "json");
    oracle->add_option("--max-len", o.max_len, "BFS radius")->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("--seed", o.seed, "Seed for the random samples")->capture_default_str();
    oracle->add_option("--context", o.context, "Which affine group to test")
        ->check(CLI::IsMember({"kostant", "perm", "alt"}))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return exit_usage;
    }

    try {
        if (verify->parsed()) {
            if (o.format.empty()) o.format = "json";
            return cmd_verify_euler(o, out, err);
        }
        if (palc->parsed()) {
            if (o.format.empty()) o.format = "json";
            return cmd_palc(o, out, err);
        }
        if (perm->parsed()) {
            if (o.format.empty()) o.format = "text";
            return cmd_perm(o, out);
        }
        if (check->parsed()) {
            if (o.format.empty()) o.format = "text";
            return cmd_check_perm(o, in, out);
        }
        if (o.format.empty()) o.format = "json";
        return cmd_oracle(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UnsupportedRootSystem& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace awg
