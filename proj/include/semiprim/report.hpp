#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semiprim/perm_group.hpp"

namespace semiprim {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, skip, vacuous };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// Outcome of one mechanical check.
struct CheckResult {
  std::string check;   ///< e.g. "semiprim.criterion"
  std::string target;  ///< fixture or input name
  Status status = Status::pass;
  std::string detail;
  Json witness;                 ///< null when absent
  std::optional<double> millis; ///< only recorded when timings are requested
};

Json to_json(CheckResult const& r);
CheckResult check_result_from_json(Json const& j);

/// {"degree": n, "generators": [[...], ...]}, with "name" first if given.
Json group_to_json(PermGroup const& g, std::string_view name = {});
/// Throws ParseError on malformed input, including non-bijective generators.
PermGroup group_from_json(Json const& j);
/// Generators as cycle strings plus the order, for witnesses.
Json group_witness(PermGroup const& g);

std::string_view tool_version();

struct VerdictReport {
  std::string tool_version;
  std::vector<CheckResult> results;

  std::size_t count(Status s) const;
  bool any_fail() const { return count(Status::fail) != 0; }
};

Json to_json(VerdictReport const& r);
VerdictReport verdict_report_from_json(Json const& j);

/// Exit code for a finished report: 0 when nothing failed, 1 otherwise.
int exit_code(VerdictReport const& r);

}  // namespace semiprim
