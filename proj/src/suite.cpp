#include "semiprim/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>

#include <omp.h>

#include "semiprim/brute.hpp"
#include "semiprim/constructions.hpp"
#include "semiprim/error.hpp"
#include "semiprim/fixtures.hpp"
#include "semiprim/local.hpp"
#include "semiprim/numbers.hpp"
#include "semiprim/semiprim.hpp"
#include "semiprim/structure.hpp"

namespace semiprim {

namespace {

constexpr std::uint64_t kEngineOracleOrder = 100'000;
constexpr std::uint64_t kStructureOracleOrder = 200;
constexpr std::uint64_t kQuotientLemmaOrder = 10'000;

CheckResult result(std::string check, Status status, std::string detail,
                   Json witness = nullptr) {
  CheckResult r;
  r.check = std::move(check);
  r.status = status;
  r.detail = std::move(detail);
  r.witness = std::move(witness);
  return r;
}

template <class T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> make) : make_(std::move(make)) {}
  T const& get() {
    std::call_once(once_, [this] { value_.emplace(make_()); });
    return *value_;
  }

 private:
  std::function<T()> make_;
  std::once_flag once_;
  std::optional<T> value_;
};

struct Target {
  std::string name;
  std::unique_ptr<Lazy<PermGroup>> group;
  std::unique_ptr<Lazy<SpVerdict>> verdict;
};

/// Fixtures shared by the tasks of one suite run.
struct Context {
  Caps caps;
  std::uint64_t max_order = 0;
  std::map<std::string, std::unique_ptr<Lazy<SemidirectCase>>> semidirect;
  std::map<std::string, std::unique_ptr<Lazy<ArcPair>>> graphs;
  std::vector<Target> targets;  ///< every group target, in report order

  Target& target(std::string const& name) {
    for (auto& t : targets) {
      if (t.name == name) return t;
    }
    throw std::logic_error("unknown target " + name);
  }

  void add_target(std::string name, std::function<PermGroup()> make) {
    Target t{name, std::make_unique<Lazy<PermGroup>>(std::move(make)), nullptr};
    Lazy<PermGroup>* g = t.group.get();
    Caps const* c = &caps;
    t.verdict = std::make_unique<Lazy<SpVerdict>>(
        [g, c] { return is_semiprimitive_definition(g->get(), *c); });
    targets.push_back(std::move(t));
  }

  std::optional<CheckResult> too_large(std::string const& check,
                                       PermGroup const& g) const {
    if (max_order != 0 && g.order() > max_order) {
      return result(check, Status::skip,
                    "max-order: group order " + std::to_string(g.order()) +
                        " is above " + std::to_string(max_order));
    }
    return std::nullopt;
  }
};

std::string join_names(std::vector<std::string> const& v) {
  std::string out;
  for (auto const& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::set<brute::Elements> as_sets(std::vector<PermGroup> const& gs) {
  std::set<brute::Elements> out;
  for (auto const& g : gs) {
    auto e = g.elements();
    out.insert(brute::Elements(e.begin(), e.end()));
  }
  return out;
}

brute::Elements as_set(PermGroup const& g) {
  auto e = g.elements();
  return brute::Elements(e.begin(), e.end());
}

// --- engine ---------------------------------------------------------------

CheckResult engine_oracle(PermGroup const& g) {
  std::string const id = "engine.oracle";
  if (g.order() > kEngineOracleOrder) {
    return result(id, Status::skip, "order above " + std::to_string(kEngineOracleOrder));
  }
  std::size_t const n = g.degree();
  brute::Elements const all = brute::closure(n, g.generators());
  std::vector<std::string> problems;
  if (all.size() != g.order()) {
    problems.push_back("order " + std::to_string(g.order()) + " but closure has " +
                       std::to_string(all.size()));
  }
  std::size_t streamed = 0;
  bool stream_ok = true;
  for (auto const& x : elements_streamed(g)) {
    ++streamed;
    stream_ok = stream_ok && all.count(x);
  }
  if (!stream_ok || streamed != all.size()) problems.push_back("streamed elements differ");
  std::size_t members = 0;
  for (auto const& x : all) {
    if (!g.contains(x)) {
      problems.push_back("closure element " + x.to_string() + " rejected");
      break;
    }
    auto r = g.rank(x);
    if (!r || g.element_at(*r) != x) {
      problems.push_back("rank round trip fails at " + x.to_string());
      break;
    }
    ++members;
  }
  std::size_t probes = 0;
  for (Point i = 1; i < n; ++i) {
    for (Perm const& t : {Perm::from_cycles(n, {{0, i}}),
                          Perm::from_cycles(n, {{i - 1, i}})}) {
      ++probes;
      if (g.contains(t) != (all.count(t) != 0)) {
        problems.push_back("membership of " + t.to_string() + " differs");
      }
    }
    if (i >= 2) {
      Perm t = Perm::from_cycles(n, {{0, 1, i}});
      ++probes;
      if (g.contains(t) != (all.count(t) != 0)) {
        problems.push_back("membership of " + t.to_string() + " differs");
      }
    }
  }
  for (Point x = 0; x < n; ++x) {
    std::set<Point> orb;
    for (auto const& h : all) orb.insert(h[x]);
    auto chain = g.orbit(x);
    if (std::set<Point>(chain.begin(), chain.end()) != orb) {
      problems.push_back("orbit of " + std::to_string(x) + " differs");
      break;
    }
  }
  std::ostringstream d;
  d << "order " << g.order() << " on " << n << " points; " << members
    << " members and " << probes << " probes checked against the closure";
  if (!problems.empty()) d << "; " << join_names(problems);
  return result(id, problems.empty() ? Status::pass : Status::fail, d.str(),
                problems.empty() ? Json(nullptr) : group_witness(g));
}

// --- structure ------------------------------------------------------------

CheckResult structure_oracle(PermGroup const& g, Caps const& caps) {
  std::string const id = "structure.oracle";
  if (g.order() > kStructureOracleOrder) {
    return result(id, Status::skip, "order above " + std::to_string(kStructureOracleOrder));
  }
  std::size_t const n = g.degree();
  brute::Elements const all = brute::closure(n, g.generators());
  auto const subs = brute::all_subgroups(n, all);
  std::vector<brute::Elements> normals;
  for (auto const& h : subs) {
    if (brute::is_normal(h, all)) normals.push_back(h);
  }
  std::vector<std::string> problems;
  auto lattice = all_normal_subgroups(g, caps);
  if (as_sets(lattice.members) != std::set<brute::Elements>(normals.begin(), normals.end())) {
    problems.push_back("normal subgroups differ");
  }
  auto largest = [&](auto pred) {
    brute::Elements best{Perm(n)};
    for (auto const& h : normals) {
      if (h.size() > best.size() && pred(h)) best = h;
    }
    return best;
  };
  std::size_t sylows = 0;
  for (auto p : prime_divisors(g.order())) {
    std::string const ps = "p=" + std::to_string(p);
    if (as_set(core_p(g, p, caps)) !=
        largest([&](auto const& h) { return brute::is_prime_power(h.size(), p); })) {
      problems.push_back("O_p differs at " + ps);
    }
    if (as_set(core_p_prime(g, p, caps)) !=
        largest([&](auto const& h) { return h.size() % p != 0; })) {
      problems.push_back("O_p' differs at " + ps);
    }
    PermGroup s = sylow(g, p, caps);
    ++sylows;
    if (s.order() != p_part(g.order(), p) || !s.is_subgroup_of(g)) {
      problems.push_back("Sylow subgroup wrong at " + ps);
      continue;
    }
    brute::Elements const se = as_set(s);
    if (as_set(frattini_p(s, p)) != brute::frattini(n, se)) {
      problems.push_back("Frattini differs at " + ps);
    }
    if (as_set(omega_center(s, p, caps)) != brute::omega_center(se, p)) {
      problems.push_back("ΩZ differs at " + ps);
    }
    auto fam = brute::max_elementary_abelian(n, se, p);
    if (as_sets(max_elementary_abelian(s, p, caps)) !=
        std::set<brute::Elements>(fam.begin(), fam.end())) {
      problems.push_back("elementary abelian subgroups of maximal order differ at " + ps);
    }
    if (as_set(thompson(s, p, caps)) != brute::thompson(n, se, p)) {
      problems.push_back("Thompson subgroup differs at " + ps);
    }
  }
  if (as_set(fitting(g, caps)) !=
      largest([&](auto const& h) { return brute::is_nilpotent(n, h); })) {
    problems.push_back("Fitting subgroup differs");
  }
  std::ostringstream d;
  d << subs.size() << " subgroups, " << normals.size() << " normal; "
    << "lattice, O_p, O_p', Fitting and " << sylows
    << " Sylow subgroups (Frattini, ΩZ, Thompson) compared";
  if (!problems.empty()) d << "; " << join_names(problems);
  return result(id, problems.empty() ? Status::pass : Status::fail, d.str(),
                problems.empty() ? Json(nullptr) : group_witness(g));
}

CheckResult structure_spot_values(Caps const& caps) {
  std::vector<std::string> problems;
  PermGroup s4 = symmetric_group(4);
  PermGroup v4(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                   Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  if (!core_p(s4, 2, caps).same_elements(v4)) problems.push_back("O_2(S4) != V4");
  PermGroup q8 = extraspecial_group(2, false);
  PermGroup zq8 = center(q8, caps);
  if (zq8.order() != 2) problems.push_back("|Z(Q8)| != 2");
  if (!thompson(q8, 2, caps).same_elements(zq8)) problems.push_back("J(Q8) != Z(Q8)");
  if (!frattini_p(q8, 2).same_elements(zq8)) problems.push_back("Φ(Q8) != Z(Q8)");
  PermGroup d4(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})});
  if (!thompson(d4, 2, caps).same_elements(d4)) problems.push_back("J(D4) != D4");
  return result("structure.spot_values",
                problems.empty() ? Status::pass : Status::fail,
                problems.empty() ? "O_2(S4) = V4, J(Q8) = Z(Q8), J(D4) = D4, Φ(Q8) = Z(Q8)"
                                 : join_names(problems));
}

// --- semiprimitivity ------------------------------------------------------

CheckResult criterion_check(SemidirectCase const& c, Caps const& caps) {
  auto const& g = c.recipe.group();
  SpVerdict def = c.recipe.small ? is_semiprimitive_definition(*c.recipe.small, caps)
                                 : is_semiprimitive_definition(g, caps);
  SpVerdict crit = is_semiprimitive_criterion(c.recipe.spec, caps);
  std::vector<std::string> problems;
  if (def.semiprimitive != crit.semiprimitive) problems.push_back("definition and criterion differ");
  if (def.semiprimitive != c.semiprimitive) problems.push_back("verdict differs from the expected one");
  if (!crit.forms_agree.value_or(false)) problems.push_back("the two criterion forms differ");
  Json witness = nullptr;
  if (!def.semiprimitive) {
    if (!def.witness) {
      problems.push_back("negative verdict without a witness");
    } else {
      PermGroup const& w = *def.witness;
      if (c.recipe.small || w.is_transitive() || is_semiregular(w) || !is_normal(w, g)) {
        problems.push_back("witness is not an intransitive, non-semiregular normal subgroup");
      }
      witness = group_witness(w);
    }
  }
  std::ostringstream d;
  d << "order " << g.order() << " on " << g.degree() << " points; definition "
    << def.semiprimitive << ", criterion " << crit.semiprimitive << ", expected "
    << c.semiprimitive << ", forms agree " << crit.forms_agree.value_or(false);
  if (!problems.empty()) d << "; " << join_names(problems);
  return result("semiprim.criterion", problems.empty() ? Status::pass : Status::fail,
                d.str(), std::move(witness));
}

CheckResult diagonal_check(Caps const& caps) {
  std::string const id = "semiprim.diagonal";
  GroupRecipe r = diagonal_counterexample(caps);
  ActionHom const& hom = *r.small;
  std::vector<std::string> problems;
  if (r.group().degree() != 3600 || r.group().order() != 432000) {
    problems.push_back("wrong degree or order");
  }
  SpVerdict crit = is_semiprimitive_criterion(r.spec, caps);
  SpVerdict def = is_semiprimitive_definition(hom, caps);
  if (!crit.semiprimitive || !def.semiprimitive) problems.push_back("not semiprimitive");
  if (!crit.forms_agree.value_or(false)) problems.push_back("criterion forms differ");
  RegularNormalReport rep = regular_normal_analysis(hom, caps);
  if (rep.regular.size() != 3) problems.push_back("regular normal subgroup count is not 3");
  for (std::size_t i = 0; i < rep.regular.size(); ++i) {
    if (!is_regular(hom.image_of(rep.regular[i]))) problems.push_back("a member is not regular");
    for (std::size_t j = 0; j < rep.regular.size(); ++j) {
      if (i != j && rep.regular[i].is_subgroup_of(rep.regular[j])) {
        problems.push_back("one regular normal subgroup contains another");
      }
    }
  }
  if (rep.soluble) problems.push_back("a regular normal subgroup is soluble");
  std::ostringstream d;
  d << "degree " << r.group().degree() << ", order " << r.group().order()
    << "; semiprimitive by definition " << def.semiprimitive << " and criterion "
    << crit.semiprimitive << "; " << rep.regular.size()
    << " regular normal subgroups of orders";
  for (auto const& n : rep.regular) d << " " << n.order();
  d << ", pairwise non-containing, none soluble";
  if (!problems.empty()) d << "; " << join_names(problems);
  Json w = Json::array();
  for (auto const& n : rep.regular) w.push_back(group_witness(n));
  return result(id, problems.empty() ? Status::pass : Status::fail, d.str(),
                problems.empty() ? Json(nullptr) : w);
}

std::optional<CheckResult> needs_semiprimitive(std::string const& id, Target& t) {
  if (!t.verdict->get().semiprimitive) {
    return result(id, Status::skip, "hypothesis-not-met: not semiprimitive");
  }
  return std::nullopt;
}

CheckResult quotient_lemma(Target& t, Caps const& caps) {
  std::string const id = "semiprim.quotient_lemma";
  PermGroup const& g = t.group->get();
  if (g.order() > kQuotientLemmaOrder) {
    return result(id, Status::skip, "order above " + std::to_string(kQuotientLemmaOrder));
  }
  if (auto s = needs_semiprimitive(id, t)) return *s;
  PermGroup const h = g.stabilizer(0);
  std::size_t checked = 0;
  for (auto const& n : all_normal_subgroups(g, caps).members) {
    if (n.is_transitive()) continue;
    CheckResult r = verify_quotient_lemma(g, h, n, true, caps);
    ++checked;
    if (r.status != Status::pass) {
      r.detail = "N of order " + std::to_string(n.order()) + ": " + r.detail;
      return r;
    }
  }
  return result(id, Status::pass,
                std::to_string(checked) +
                    " intransitive normal subgroups; every quotient action is "
                    "faithful and semiprimitive");
}

std::vector<CheckResult> regular_normal_lemmas(Target& t, Caps const& caps) {
  PermGroup const& g = t.group->get();
  std::vector<CheckResult> out;
  if (auto s = needs_semiprimitive("semiprim.fitting_lemma", t)) return {*s};
  RegularNormalReport rep = regular_normal_analysis(g, caps);
  if (!rep.soluble) {
    return {result("semiprim.fitting_lemma", Status::skip,
                   "hypothesis-not-met: no soluble regular normal subgroup")};
  }
  PermGroup const& k = rep.regular[*rep.soluble];
  out.push_back(verify_fitting_lemma(g, k, true, caps));
  bool const ok = rep.transitive_contain_k && rep.semiregular_inside_k && rep.unique;
  out.push_back(result("semiprim.regular_normal_containments",
                       ok ? Status::pass : Status::fail,
                       "K of order " + std::to_string(k.order()) + ": " + rep.detail,
                       ok ? Json(nullptr) : group_witness(k)));
  return out;
}

CheckResult coprime_lemma(Target& t, Caps const& caps) {
  std::string const id = "semiprim.coprime_lemma";
  PermGroup const& g = t.group->get();
  if (auto s = needs_semiprimitive(id, t)) return *s;
  RegularNormalReport rep = regular_normal_analysis(g, caps);
  for (auto const& k : rep.regular) {
    if (is_nilpotent(k)) return verify_coprime_lemma(g, g.stabilizer(0), k, true, caps);
  }
  return result(id, Status::skip, "hypothesis-not-met: no nilpotent regular normal subgroup");
}

// --- graphs ---------------------------------------------------------------

CheckResult kernel_oracle(ArcPair const& pair) {
  std::vector<std::string> problems;
  PermGroup const& g = pair.group;
  auto fixers = [&](std::vector<Point> const& pts) {
    std::uint64_t n = 0;
    for (auto const& x : elements_streamed(g)) {
      bool fix = true;
      for (Point p : pts) fix = fix && x[p] == p;
      n += fix;
    }
    return n;
  };
  auto closed = [&](std::initializer_list<Point> vs) {
    std::vector<Point> out(vs);
    for (Point v : vs) {
      for (Point w : pair.graph.neighbours(v)) {
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
      }
    }
    return out;
  };
  Edge const e = default_edge(pair);
  auto const [x, y] = e;
  EdgeKernels k = kernels(pair, e);
  std::uint64_t const gx = g.stabilizer(x).order();
  if (k.gx1.order() != fixers(closed({x}))) problems.push_back("|G_x^[1]| differs");
  if (k.gy1.order() != fixers(closed({y}))) problems.push_back("|G_y^[1]| differs");
  if (k.gxy.order() != fixers({x, y})) problems.push_back("|G_xy| differs");
  if (k.gxy1.order() != fixers(closed({x, y}))) problems.push_back("|G_xy^[1]| differs");
  if (gx != fixers({x})) problems.push_back("|G_x| differs");
  if (gx != local_action(pair, x).image.order() * k.gx1.order()) {
    problems.push_back("|G_x| != |G_x^Γ(x)| |G_x^[1]|");
  }
  std::vector<Point> xy{x, y};
  if (setwise_stabilizer(g, xy).order() != 2 * k.gxy.order()) {
    problems.push_back("|G_{x,y}| != 2 |G_xy|");
  }
  std::ostringstream d;
  d << "|G_x|=" << gx << ", |G_x^[1]|=" << k.gx1.order() << ", |G_xy|="
    << k.gxy.order() << ", |G_xy^[1]|=" << k.gxy1.order()
    << " agree with streamed counts; |G_{x,y}| = 2|G_xy|";
  if (!problems.empty()) d << "; " << join_names(problems);
  return result("local.kernels", problems.empty() ? Status::pass : Status::fail, d.str());
}

CheckResult hypothesis_check(ArcPair const& pair, Caps const& caps) {
  LocalHypothesis h = local_hypothesis(pair, 0, caps);
  bool const unique_ok = h.regular_nilpotent_count <= 1;
  if (!unique_ok) {
    return result("local.hypothesis", Status::fail,
                  h.detail + "; more than one regular normal nilpotent subgroup");
  }
  return result("local.hypothesis", h.holds ? Status::pass : Status::skip,
                h.holds ? h.detail : "hypothesis-not-met: " + h.detail);
}

CheckResult orientations_check(ArcPair const& pair, Caps const& caps) {
  Edge const e = default_edge(pair);
  Edge const rev{e.second, e.first};
  auto summarise = [&](Edge f) {
    std::ostringstream s;
    auto o = anatomy(pair, f, caps);
    s << to_string(o.result.status);
    if (o.anatomy) {
      auto const& a = *o.anatomy;
      s << " p=" << a.p << " |L|=" << a.lx.order() << " |Z|=" << a.zx.order();
      for (auto const& r : verify_local_lemmas(a, caps)) s << " " << to_string(r.status);
      auto ks = verify_kernel_structure(a, caps);
      s << " ks=" << to_string(ks.result.status) << " r=" << ks.r;
      for (auto v : ks.factor_orders) s << " e" << v;
      for (auto v : ks.commutator_orders) s << " c" << v;
      s << " sections=" << to_string(verify_local_sections(a, caps).result.status);
    }
    return s.str();
  };
  std::string const a = summarise(e), b = summarise(rev);
  std::string const detail = "(" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ") and reverse: " + a;
  return result("local.orientations", a == b ? Status::pass : Status::fail,
                a == b ? detail : detail + " vs " + b);
}


}  // namespace

std::vector<SuiteTask> suite_tasks(SuiteOptions const& options) {
  auto ctx = std::make_shared<Context>();
  ctx->caps = options.caps;
  ctx->max_order = options.max_order;
  Caps const* caps = &ctx->caps;

  for (auto& sg : small_groups()) {
    PermGroup g = sg.group;
    ctx->add_target(sg.name, [g] { return g; });
  }
  for (auto const& name : semidirect_names()) {
    auto lazy = std::make_unique<Lazy<SemidirectCase>>([name, caps] {
      return *semidirect_case(name, *caps);
    });
    Lazy<SemidirectCase>* l = lazy.get();
    ctx->semidirect.emplace(name, std::move(lazy));
    ctx->add_target(name, [l] { return l->get().recipe.group(); });
  }
  for (auto const& name : fixture_names()) {
    auto lazy = std::make_unique<Lazy<ArcPair>>([name] {
      Fixture f = fixture_by_name(name);
      return check_arc_transitive(std::move(f.graph), std::move(f.group));
    });
    Lazy<ArcPair>* l = lazy.get();
    ctx->graphs.emplace(name, std::move(lazy));
    ctx->add_target("graph_" + name, [l] { return l->get().group; });
  }

  std::vector<SuiteTask> tasks;
  auto add = [&](std::string id, std::string target,
                 std::function<std::vector<CheckResult>(Context&)> f) {
    tasks.push_back({std::move(id), std::move(target),
                     [ctx, f = std::move(f)] { return f(*ctx); }});
  };
  auto per_group = [&](std::string const& id,
                       std::function<std::vector<CheckResult>(Context&, Target&)> f) {
    for (auto const& t : ctx->targets) {
      std::string const name = t.name;
      add(id, name, [id, name, f](Context& c) -> std::vector<CheckResult> {
        Target& t = c.target(name);
        if (auto s = c.too_large(id, t.group->get())) return {*s};
        return f(c, t);
      });
    }
  };

  per_group("engine.oracle", [](Context&, Target& t) -> std::vector<CheckResult> {
    return {engine_oracle(t.group->get())};
  });
  add("structure.spot_values", "corpus", [](Context& c) -> std::vector<CheckResult> {
    return {structure_spot_values(c.caps)};
  });
  per_group("structure.oracle", [](Context& c, Target& t) -> std::vector<CheckResult> {
    return {structure_oracle(t.group->get(), c.caps)};
  });
  for (auto const& name : semidirect_names()) {
    add("semiprim.criterion", name, [name](Context& c) -> std::vector<CheckResult> {
      auto const& sc = c.semidirect.at(name)->get();
      if (auto s = c.too_large("semiprim.criterion", sc.recipe.group())) return {*s};
      return {criterion_check(sc, c.caps)};
    });
  }
  add("semiprim.diagonal", "diagonal", [](Context& c) -> std::vector<CheckResult> {
    if (c.max_order != 0 && c.max_order < 432000) {
      return {result("semiprim.diagonal", Status::skip,
                     "max-order: group order 432000 is above " + std::to_string(c.max_order))};
    }
    return {diagonal_check(c.caps)};
  });
  per_group("semiprim.quotient_lemma", [](Context& c, Target& t) -> std::vector<CheckResult> {
    return {quotient_lemma(t, c.caps)};
  });
  per_group("semiprim.fitting_lemma", [](Context& c, Target& t) {
    return regular_normal_lemmas(t, c.caps);
  });
  per_group("semiprim.coprime_lemma", [](Context& c, Target& t) -> std::vector<CheckResult> {
    return {coprime_lemma(t, c.caps)};
  });

  for (auto const& name : fixture_names()) {
    auto graph_task = [&](std::string id,
                          std::function<std::vector<CheckResult>(Context&, ArcPair const&)> f) {
      add(id, name, [id, name, f](Context& c) -> std::vector<CheckResult> {
        ArcPair const& pair = c.graphs.at(name)->get();
        if (auto s = c.too_large(id, pair.group)) return {*s};
        return f(c, pair);
      });
    };
    graph_task("local.arc_transitive", [](Context&, ArcPair const& p) -> std::vector<CheckResult> {
      return {result("local.arc_transitive", Status::pass,
                     "valency " + std::to_string(p.valency) + ", " +
                         std::to_string(2 * p.graph.edge_count()) + " arcs in one orbit")};
    });
    graph_task("local.kernels", [](Context&, ArcPair const& p) -> std::vector<CheckResult> {
      return {kernel_oracle(p)};
    });
    graph_task("local.hypothesis", [](Context& c, ArcPair const& p) -> std::vector<CheckResult> {
      return {hypothesis_check(p, c.caps)};
    });
    graph_task("local.anatomy", [](Context& c, ArcPair const& p) -> std::vector<CheckResult> {
      auto o = anatomy(p, default_edge(p), c.caps);
      if (o.anatomy) o.result.witness = to_json(*o.anatomy);
      return {o.result};
    });
    graph_task("local.lemmas", [](Context& c, ArcPair const& p) {
      return verify_local_lemmas(p, default_edge(p), c.caps);
    });
    graph_task("local.kernel_structure", [](Context& c, ArcPair const& p) -> std::vector<CheckResult> {
      return {verify_kernel_structure(p, default_edge(p), c.caps).result};
    });
    graph_task("local.sections", [](Context& c, ArcPair const& p) -> std::vector<CheckResult> {
      return {verify_local_sections(p, default_edge(p), c.caps).result};
    });
    graph_task("local.orientations", [](Context& c, ArcPair const& p) -> std::vector<CheckResult> {
      return {orientations_check(p, c.caps)};
    });
    graph_task("local.stabiliser_bound", [](Context& c, ArcPair const& p) -> std::vector<CheckResult> {
      return {verify_stabiliser_bound(p, c.caps).result};
    });
  }

  if (!options.filter.empty()) {
    std::erase_if(tasks, [&](SuiteTask const& t) {
      return t.id.find(options.filter) == std::string::npos &&
             t.target.find(options.filter) == std::string::npos;
    });
  }
  return tasks;
}

VerdictReport run_tasks(std::vector<SuiteTask> const& tasks, unsigned jobs,
                        bool timings) {
  std::vector<std::vector<CheckResult>> out(tasks.size());
  int const saved_levels = omp_get_max_active_levels();
  omp_set_max_active_levels(1);
  long const count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1u, jobs))
  for (long i = 0; i < count; ++i) {
    SuiteTask const& task = tasks[static_cast<std::size_t>(i)];
    auto const t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> rs;
    try {
      rs = task.run();
    } catch (CapExceeded const& e) {
      rs = {result(task.id, Status::skip, std::string("cap-exceeded: ") + e.what())};
    } catch (std::exception const& e) {
      rs = {result(task.id, Status::fail, std::string("error: ") + e.what())};
    }
    double const ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    for (auto& r : rs) {
      if (r.target.empty()) r.target = task.target;
      if (timings) r.millis = ms;
    }
    out[static_cast<std::size_t>(i)] = std::move(rs);
  }
  omp_set_max_active_levels(saved_levels);
  VerdictReport report;
  report.tool_version = std::string(tool_version());
  for (auto& rs : out) {
    for (auto& r : rs) report.results.push_back(std::move(r));
  }
  return report;
}

VerdictReport run_suite(SuiteOptions const& options) {
  return run_tasks(suite_tasks(options), options.jobs, options.timings);
}

}  // namespace semiprim
