#pragma once

#include "germlab/exact/json.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace germlab::suites {

inline constexpr int kReportSchema = 1;

enum class Status { pass, fail, skipped };
std::string_view to_string(Status s);

struct CheckRecord {
  std::string id;      // "<suite>/<check>"
  std::string anchor;  // the statement the check exercises
  Status status = Status::skipped;
  Json witness;        // counterexample or evidence; reproducible from (suite, seed, config)
};

using Config = std::map<std::string, std::string>;

/// No wall-clock fields, so equal inputs give byte-identical dumps.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  Config config;  // effective configuration, defaults filled in
  std::vector<CheckRecord> checks;  // sorted by id

  bool all_pass() const;
};

Json to_json(const SuiteReport& r);

/// Registered names in a fixed order.
const std::vector<std::string>& suite_names();
/// Default configuration of a suite.
Config default_config(const std::string& suite);

/// Throws UnknownSuite for an unregistered name and ConfigError naming the
/// offending field for unknown keys or out-of-range values.
SuiteReport run_suite(const std::string& name, const Config& config, std::uint64_t seed);

/// Re-runs the suite recorded in `report` and returns the fresh record for
/// `check_id`. Throws ParseError if the report or id is unknown.
CheckRecord replay(const Json& report, const std::string& check_id);

/// "key = value" lines; '#' starts a comment. Throws ParseError with the
/// line number on malformed input.
Config parse_config(const std::string& text);

}  // namespace germlab::suites
