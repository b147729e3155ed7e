#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semiprim/caps.hpp"
#include "semiprim/corpus.hpp"
#include "semiprim/report.hpp"

namespace semiprim {

struct SuiteOptions {
  /// Keep tasks whose id or target contains this substring.
  std::string filter;
  unsigned jobs = 1;
  bool timings = false;
  /// Targets whose group is larger are reported as skip; 0 means no limit.
  std::uint64_t max_order = 0;
  Caps caps = suite_caps();
};

/// One unit of work: a check id applied to one target. `run` may produce
/// several results (one per item for the itemised checks).
struct SuiteTask {
  std::string id;
  std::string target;
  std::function<std::vector<CheckResult>()> run;
};

/// Every task of the verification suite in report order. Fixtures are
/// built lazily and shared between tasks.
std::vector<SuiteTask> suite_tasks(SuiteOptions const& options);

/// Runs `tasks` on up to `jobs` threads and collects the results in task
/// order. Each task runs single-threaded. A CapExceeded becomes a skip and
/// any other exception a fail; results get the task target when they have
/// none.
VerdictReport run_tasks(std::vector<SuiteTask> const& tasks, unsigned jobs,
                        bool timings);

VerdictReport run_suite(SuiteOptions const& options);

}  // namespace semiprim
