#pragma once

// Command-line front end. Subcommands:
//
//   verify-euler TYPE RANK --degree N
//   palc         TYPE RANK --max-exponent E [--self-check]
//   perm         TYPE N --word 0,1,... [--alt]
//   check-perm   TYPE N --window FILE|- [--alt]
//   oracle       TYPE RANK --max-len L [--seed S] [--context kostant|perm|alt]
//
// Exit codes: 0 success, 1 verification mismatch or rejected input, 2 usage error.

#include "awg/kostant.hpp"
#include "awg/oracle.hpp"
#include "awg/zperm.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace awg {

enum ExitCode { exit_ok = 0, exit_mismatch = 1, exit_usage = 2 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const AmbientVector& v);
AmbientVector vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PalcRecord& r);
PalcRecord palc_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IdentityReport& r);
IdentityReport identity_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PeriodicPermutation& f);
PeriodicPermutation permutation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OracleReport& r);
OracleReport oracle_report_from_json(const nlohmann::json& j);

/// "0,1,2" -> {0, 1, 2}; the empty string is the empty word.
std::vector<int> parse_word(std::string_view text);

}  // namespace awg
