#include "semiprim/report.hpp"

#include <algorithm>

#include "semiprim/error.hpp"

namespace semiprim {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
    case Status::vacuous: return "vacuous";
  }
  return "fail";
}

Status status_from_string(std::string_view s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skip") return Status::skip;
  if (s == "vacuous") return Status::vacuous;
  throw ParseError("unknown status '" + std::string(s) + "'");
}

Json to_json(CheckResult const& r) {
  Json j;
  j["check"] = r.check;
  j["target"] = r.target;
  j["status"] = to_string(r.status);
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (r.millis) j["millis"] = *r.millis;
  return j;
}

CheckResult check_result_from_json(Json const& j) {
  try {
    CheckResult r;
    r.check = j.at("check").get<std::string>();
    r.target = j.at("target").get<std::string>();
    r.status = status_from_string(j.at("status").get<std::string>());
    if (j.contains("detail")) r.detail = j["detail"].get<std::string>();
    if (j.contains("witness")) r.witness = j["witness"];
    if (j.contains("millis")) r.millis = j["millis"].get<double>();
    return r;
  } catch (Json::exception const& e) {
    throw ParseError(std::string("bad check result: ") + e.what());
  }
}

Json group_to_json(PermGroup const& g, std::string_view name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["degree"] = g.degree();
  Json gens = Json::array();
  for (auto const& x : g.generators()) {
    gens.push_back(std::vector<Point>(x.images().begin(), x.images().end()));
  }
  j["generators"] = std::move(gens);
  return j;
}

PermGroup group_from_json(Json const& j) {
  try {
    if (!j.is_object()) throw ParseError("group JSON must be an object");
    auto const degree = j.at("degree").get<std::int64_t>();
    if (degree < 1) throw ParseError("degree must be positive");
    std::vector<Perm> gens;
    for (auto const& g : j.at("generators")) {
      auto images = g.get<std::vector<std::int64_t>>();
      if (static_cast<std::int64_t>(images.size()) != degree) {
        throw ParseError("generator length differs from the degree");
      }
      std::vector<Point> pts;
      for (auto v : images) {
        if (v < 0 || v >= degree) throw ParseError("image out of range");
        pts.push_back(static_cast<Point>(v));
      }
      try {
        gens.emplace_back(std::move(pts));
      } catch (InvalidArgument const& e) {
        throw ParseError(e.what());
      }
    }
    return PermGroup(static_cast<std::size_t>(degree), std::move(gens));
  } catch (Json::exception const& e) {
    throw ParseError(std::string("bad group JSON: ") + e.what());
  }
}

Json group_witness(PermGroup const& g) {
  Json j;
  j["order"] = g.order();
  j["degree"] = g.degree();
  Json gens = Json::array();
  for (auto const& x : g.generators()) gens.push_back(x.to_string());
  j["generators"] = std::move(gens);
  return j;
}

std::string_view tool_version() { return "semiprim 0.1.0"; }

std::size_t VerdictReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(),
                    [s](CheckResult const& r) { return r.status == s; }));
}

Json to_json(VerdictReport const& r) {
  Json j;
  j["tool_version"] = r.tool_version;
  Json results = Json::array();
  for (auto const& c : r.results) results.push_back(to_json(c));
  j["results"] = std::move(results);
  Json summary;
  summary["total"] = r.results.size();
  for (auto s : {Status::pass, Status::fail, Status::skip, Status::vacuous}) {
    summary[std::string(to_string(s))] = r.count(s);
  }
  j["summary"] = std::move(summary);
  return j;
}

VerdictReport verdict_report_from_json(Json const& j) {
  try {
    VerdictReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    for (auto const& c : j.at("results")) {
      r.results.push_back(check_result_from_json(c));
    }
    return r;
  } catch (Json::exception const& e) {
    throw ParseError(std::string("bad report: ") + e.what());
  }
}

int exit_code(VerdictReport const& r) { return r.any_fail() ? 1 : 0; }

}  // namespace semiprim
