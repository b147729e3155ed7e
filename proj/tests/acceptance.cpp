// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// The suite reports come from the command-line entry point, so this also
// exercises the JSON output path.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "semiprim/cli.hpp"
#include "semiprim/corpus.hpp"
#include "semiprim/fixtures.hpp"
#include "semiprim/local.hpp"
#include "semiprim/numbers.hpp"
#include "semiprim/report.hpp"
#include "semiprim/structure.hpp"

using namespace semiprim;

namespace {

struct CliRun {
  int code = -1;
  std::string json;
  double seconds = 0;
  VerdictReport report;
};

CliRun verify_all(std::vector<std::string> extra) {
  std::vector<std::string> args{"--json", "verify-all"};
  args.insert(args.end(), extra.begin(), extra.end());
  std::ostringstream out, err;
  auto const t0 = std::chrono::steady_clock::now();
  CliRun r;
  r.code = run_cli(args, out, err);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.json = out.str();
  if (r.code != 2) r.report = verdict_report_from_json(Json::parse(r.json));
  return r;
}

std::vector<CheckResult> select(VerdictReport const& r, std::string const& check,
                                std::string const& target = {}) {
  std::vector<CheckResult> out;
  for (auto const& c : r.results) {
    if (c.check == check && (target.empty() || c.target == target)) out.push_back(c);
  }
  return out;
}

std::vector<CheckResult> for_target(VerdictReport const& r, std::string const& prefix,
                                    std::string const& target) {
  std::vector<CheckResult> out;
  for (auto const& c : r.results) {
    if (c.check.starts_with(prefix) && c.target == target) out.push_back(c);
  }
  return out;
}

/// Collects failed expectations for one criterion.
class Tally {
 public:
  void expect(bool ok, std::string const& what) {
    if (!ok) problems_.push_back(what);
  }
  template <class A, class B>
  void equal(A const& a, B const& b, std::string const& what) {
    if (!(a == b)) {
      std::ostringstream s;
      s << what << ": got " << a << ", expected " << b;
      problems_.push_back(s.str());
    }
  }
  bool ok() const { return problems_.empty(); }
  std::string text() const {
    std::string out;
    for (auto const& p : problems_) out += (out.empty() ? "" : "; ") + p;
    return out;
  }

 private:
  std::vector<std::string> problems_;
};

std::size_t count_status(std::vector<CheckResult> const& rs, Status s) {
  return static_cast<std::size_t>(
      std::count_if(rs.begin(), rs.end(), [s](auto const& r) { return r.status == s; }));
}

std::size_t involutions(PermGroup const& g) {
  std::size_t n = 0;
  for (auto const& x : g.elements()) n += x.order() == 2;
  return n;
}

ArcPair arc_pair(std::string const& name) {
  Fixture f = fixture_by_name(name);
  return check_arc_transitive(std::move(f.graph), std::move(f.group));
}

}  // namespace

int main() {
  std::cout << "running verify-all (jobs 1, twice; jobs 4 once)\n" << std::flush;
  CliRun const first = verify_all({"--jobs", "1"});
  CliRun const second = verify_all({"--jobs", "1"});
  CliRun const parallel = verify_all({"--jobs", "4"});
  CliRun const engine = verify_all({"--filter", "engine.oracle"});
  CliRun const diagonal = verify_all({"--filter", "semiprim.diagonal"});
  VerdictReport const& rep = first.report;

  std::map<int, std::pair<std::string, Tally>> crit;
  auto tally = [&](int n, std::string title) -> Tally& {
    crit[n].first = std::move(title);
    return crit[n].second;
  };

  {
    Tally& t = tally(1, "engine oracle equivalence");
    auto rs = select(rep, "engine.oracle");
    t.expect(rs.size() >= 40, "fewer than 40 engine targets");
    t.equal(count_status(rs, Status::pass), rs.size(), "engine.oracle passes");
    t.expect(engine.seconds < 60, "engine oracle runtime " + std::to_string(engine.seconds) + " s");
    t.equal(engine.code, 0, "engine-only run exit code");
  }
  {
    Tally& t = tally(2, "criterion equivalence on semidirect fixtures");
    auto rs = select(rep, "semiprim.criterion");
    t.expect(rs.size() >= 20, "fewer than 20 semidirect fixtures");
    t.equal(count_status(rs, Status::pass), rs.size(), "semiprim.criterion passes");
    std::map<std::string, bool> expected;
    for (auto const& name : semidirect_names()) {
      auto c = semidirect_case(name, suite_caps());
      expected[name] = c->semiprimitive;
      Family f = c->recipe.family;
      if (f != Family::custom) t.expect(c->semiprimitive, name + " is a family member expected false");
    }
    for (char const* fam : {"inversion_", "vector_", "extraspecial_", "c3_"}) {
      t.expect(std::any_of(expected.begin(), expected.end(),
                           [&](auto const& e) { return e.first.starts_with(fam) && e.second; }),
               std::string("no positive ") + fam + " fixture");
    }
    auto c4 = select(rep, "semiprim.criterion", "c4_inversion");
    t.expect(c4.size() == 1 && c4[0].status == Status::pass && !c4[0].witness.is_null(),
             "C4 inversion (D4 on 4 points) not reported false with a witness");
    if (c4.size() == 1 && !c4[0].witness.is_null()) {
      t.equal(c4[0].witness["degree"].get<int>(), 4, "D4 witness degree");
      t.equal(c4[0].witness["order"].get<int>(), 4, "D4 witness order");
    }
  }
  {
    Tally& t = tally(3, "diagonal counterexample has three regular normal subgroups");
    auto rs = select(diagonal.report, "semiprim.diagonal");
    t.equal(rs.size(), 1u, "diagonal results");
    if (rs.size() == 1) {
      t.expect(rs[0].status == Status::pass, rs[0].detail);
      t.expect(rs[0].detail.find("3 regular normal subgroups of orders 3600 3600 3600") !=
                   std::string::npos,
               "detail lacks three regular normals of order 3600");
      t.expect(rs[0].detail.find("degree 3600, order 432000") != std::string::npos,
               "wrong degree or order");
    }
    t.expect(diagonal.seconds < 120, "runtime " + std::to_string(diagonal.seconds) + " s");
  }
  {
    Tally& t = tally(4, "quotient, Fitting, containment and coprime lemmas");
    auto q = select(rep, "semiprim.quotient_lemma");
    t.equal(count_status(q, Status::fail), 0u, "quotient lemma failures");
    t.expect(count_status(q, Status::pass) >= 25, "fewer than 25 quotient lemma targets");
    for (auto const& r : q) {
      if (r.status == Status::skip) {
        t.expect(r.detail.starts_with("hypothesis-not-met: not semiprimitive"),
                 "quotient lemma skipped on " + r.target + ": " + r.detail);
      }
    }
    auto f = select(rep, "semiprim.fitting_lemma");
    auto c = select(rep, "semiprim.regular_normal_containments");
    t.equal(count_status(f, Status::fail) + count_status(c, Status::fail), 0u,
            "Fitting or containment failures");
    t.expect(count_status(f, Status::pass) >= 20, "fewer than 20 Fitting lemma passes");
    t.equal(count_status(c, Status::pass), count_status(f, Status::pass),
            "containment passes match Fitting passes");
    t.equal(count_status(select(rep, "semiprim.coprime_lemma"), Status::fail), 0u,
            "coprime lemma failures");
    auto ex = select(rep, "semiprim.coprime_lemma", "extraspecial_q3");
    t.expect(ex.size() == 1 && ex[0].status == Status::pass, "coprime lemma on extraspecial_q3");
    auto recipe = semidirect_case("extraspecial_q3", suite_caps())->recipe;
    PermGroup o2 = core_p(recipe.spec.h(), 2);
    t.equal(o2.order(), 8u, "|O_2(H)|");
    t.expect(!is_abelian(o2) && center(o2).order() == 2 &&
                 involutions(o2) == 1,
             "O_2(H) is not Q8");
    t.equal(recipe.spec.k().order(), 27u, "|K|");
  }
  {
    Tally& t = tally(5, "structure operators against brute-force enumeration");
    auto rs = select(rep, "structure.oracle");
    std::size_t small = 0;
    for (auto const& r : rs) {
      if (r.status == Status::skip) {
        t.expect(r.detail == "order above 200", "structure oracle skipped " + r.target);
      } else {
        ++small;
        t.expect(r.status == Status::pass, "structure oracle on " + r.target + ": " + r.detail);
      }
    }
    t.expect(small >= 30, "fewer than 30 groups of order <= 200 compared");
    auto spot = select(rep, "structure.spot_values");
    t.expect(spot.size() == 1 && spot[0].status == Status::pass, "spot values");
  }
  auto anatomy_criterion = [&](Tally& t, std::string const& name, std::uint64_t gx,
                               std::uint64_t gx1, std::uint64_t gxy1) {
    ArcPair pair = arc_pair(name);
    Edge e = default_edge(pair);
    EdgeKernels k = kernels(pair, e);
    // streamed counts first
    std::uint64_t s_gx = 0, s_gx1 = 0, s_gxy1 = 0;
    std::vector<Point> nx{e.first}, nxy{e.first, e.second};
    for (Point v : pair.graph.neighbours(e.first)) nx.push_back(v);
    nxy = nx;
    for (Point v : pair.graph.neighbours(e.second)) {
      if (std::find(nxy.begin(), nxy.end(), v) == nxy.end()) nxy.push_back(v);
    }
    for (auto const& x : elements_streamed(pair.group)) {
      auto fixes = [&](std::vector<Point> const& pts) {
        return std::all_of(pts.begin(), pts.end(), [&](Point p) { return x[p] == p; });
      };
      s_gx += x[e.first] == e.first;
      s_gx1 += fixes(nx);
      s_gxy1 += fixes(nxy);
    }
    t.equal(s_gx, gx, "streamed |G_x|");
    t.equal(s_gx1, gx1, "streamed |G_x^[1]|");
    t.equal(s_gxy1, gxy1, "streamed |G_xy^[1]|");
    t.equal(pair.group.stabilizer(e.first).order(), gx, "|G_x|");
    t.equal(k.gx1.order(), gx1, "|G_x^[1]|");
    t.equal(k.gxy1.order(), gxy1, "|G_xy^[1]|");
    auto o = anatomy(pair, e);
    t.expect(o.anatomy.has_value(), "anatomy not built: " + o.result.detail);
    if (!o.anatomy) return;
    auto const& a = *o.anatomy;
    t.equal(a.p, 2u, "p");
    for (auto const& r : verify_local_lemmas(a)) {
      t.expect(r.status == Status::pass, r.check + ": " + r.detail);
    }
    auto ks = verify_kernel_structure(a);
    t.expect(ks.result.status == Status::pass, "kernel structure: " + ks.result.detail);
    t.expect(ks.r >= 1, "r = 0");
    for (auto v : ks.factor_orders) t.equal(v, 6u, "|E_i|");
    for (auto v : ks.commutator_orders) t.equal(v, 4u, "|[V,E_i]|");
    auto ls = verify_local_sections(a);
    t.expect(ls.result.status == Status::pass, "sections: " + ls.result.detail);
    for (auto const& r : for_target(rep, "local.", name)) {
      t.expect(r.status == Status::pass || r.check == "local.stabiliser_bound",
               "suite " + r.check + " on " + name + " is " + std::string(to_string(r.status)));
    }
    if (!ls.f || !ls.r || !ls.j) return;
    t.equal(ls.f->order(), 1u, "|F|");
    t.equal(ls.r->order(), 3u, "|R^Γ(x)|");
    t.equal(ls.j->order(), 6u, "|J|");
    t.expect(!is_abelian(*ls.j), "J is not Sym(3)");
  };
  {
    Tally& t = tally(6, "Heawood anatomy");
    anatomy_criterion(t, "heawood", 24, 4, 2);
    auto pair = arc_pair("heawood");
    t.equal(pair.group.order(), 336u, "|G|");
    auto o = anatomy(pair, default_edge(pair));
    if (o.anatomy) {
      auto ks = verify_kernel_structure(*o.anatomy);
      t.equal(ks.r, 1u, "r");
      t.equal(o.anatomy->qxqy.order(), 8u, "|Q_xQ_y|");
      t.equal(o.anatomy->qx.order(), 4u, "|Q_x|");
    }
  }
  {
    Tally& t = tally(7, "Tutte-Coxeter anatomy");
    anatomy_criterion(t, "tutte_coxeter", 48, 8, 4);
  }
  {
    Tally& t = tally(8, "stabiliser bound on the F16 Cayley graph");
    auto pair = arc_pair("f16");
    auto h = local_hypothesis(pair);
    t.expect(h.holds, "hypothesis: " + h.detail);
    t.expect(h.regular_nilpotent && h.regular_nilpotent->order() == 5 &&
                 is_abelian(*h.regular_nilpotent),
             "regular normal nilpotent subgroup is not C5");
    auto b = verify_stabiliser_bound(pair);
    t.equal(b.d, 5u, "d");
    t.equal(std::gcd<std::uint64_t, std::uint64_t>(b.d, 6), 1u, "gcd(d,6)");
    t.equal(b.kernel_order, 1u, "|G_xy^[1]|");
    t.equal(b.stabiliser_order, 20u, "|G_x|");
    t.equal(b.bound, 2880u, "5!4!");
    t.expect(b.result.status == Status::pass, "bound check: " + b.result.detail);
    auto s = select(rep, "local.stabiliser_bound", "f16");
    t.expect(s.size() == 1 && s[0].status == Status::pass, "suite bound check on f16");
  }
  {
    Tally& t = tally(9, "vacuous and out-of-hypothesis cases never pass");
    std::size_t gated = 0;
    for (auto const& name : fixture_names()) {
      auto pair = arc_pair(name);
      bool const trivial = kernels(pair, default_edge(pair)).gxy1.is_trivial();
      bool const gcd_gate = std::gcd<std::uint64_t, std::uint64_t>(pair.valency, 6) != 1;
      if (trivial) {
        for (char const* id : {"local.anatomy", "local.kernel_structure", "local.sections"}) {
          for (auto const& r : select(rep, id, name)) {
            ++gated;
            t.expect(r.status == Status::vacuous || r.status == Status::skip,
                     std::string(id) + " on " + name + " is " + std::string(to_string(r.status)));
          }
        }
        auto lemmas = for_target(rep, "local.", name);
        for (auto const& r : lemmas) {
          if (r.check == "local.arc_transitive" || r.check == "local.kernels" ||
              r.check == "local.hypothesis" || r.check == "local.orientations" ||
              r.check == "local.stabiliser_bound") {
            continue;
          }
          ++gated;
          t.expect(r.status != Status::pass, r.check + " passes on " + name);
        }
      }
      if (gcd_gate || !local_hypothesis(pair).holds) {
        for (auto const& r : select(rep, "local.stabiliser_bound", name)) {
          ++gated;
          t.expect(r.status == Status::skip, "bound on " + name + " is " +
                                                 std::string(to_string(r.status)));
        }
      }
    }
    t.expect(gated >= 20, "fewer than 20 gated results inspected");
  }
  {
    Tally& t = tally(10, "determinism of verify-all");
    t.equal(first.code, 0, "exit code");
    t.expect(!first.json.empty() && first.json == second.json, "two serial runs differ");
    t.expect(first.json == parallel.json, "--jobs 1 and --jobs 4 differ");
    t.equal(rep.count(Status::fail), 0u, "suite failures");
  }

  bool all = true;
  for (auto const& [n, entry] : crit) {
    auto const& [title, t] = entry;
    all = all && t.ok();
    std::cout << "criterion " << n << " (" << title << "): " << (t.ok() ? "PASS" : "FAIL");
    if (!t.ok()) std::cout << " - " << t.text();
    std::cout << "\n";
  }
  std::cout << "suite: " << rep.results.size() << " results, " << rep.count(Status::pass)
            << " pass, " << rep.count(Status::fail) << " fail, " << rep.count(Status::skip)
            << " skip, " << rep.count(Status::vacuous) << " vacuous; serial run "
            << first.seconds << " s, parallel run " << parallel.seconds << " s\n";
  return all ? 0 : 1;
}
