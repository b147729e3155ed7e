#include "semiprim/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "semiprim/constructions.hpp"
#include "semiprim/corpus.hpp"
#include "semiprim/error.hpp"
#include "semiprim/fixtures.hpp"
#include "semiprim/local.hpp"
#include "semiprim/report.hpp"
#include "semiprim/suite.hpp"

namespace semiprim {

namespace {

constexpr int kBadInput = 2;

struct Common {
  bool json = false;
  std::uint64_t max_order = 0;
  Caps caps;
};

struct FamilyArgs {
  std::string family;
  std::uint32_t q = 0, a = 1, n = 1, m = 1;
  std::string p_shape;
  std::vector<std::uint32_t> primes;
};

void add_family_options(CLI::App* cmd, FamilyArgs& f) {
  cmd->add_option("--q", f.q, "Prime q");
  cmd->add_option("--p-shape", f.p_shape, "Abelian q-group shape, e.g. c9xc3");
  cmd->add_option("--a", f.a, "Field degree a (vector family)");
  cmd->add_option("--n", f.n, "Dimension n (vector family)");
  cmd->add_option("--m", f.m, "Number of copies m (vector family), or m for extraspecial");
  cmd->add_option("--primes", f.primes, "Primes = 2 mod 3 (c3 family)")->delimiter(',');
}

GroupRecipe build_family(FamilyArgs const& f, Caps const& caps) {
  auto need_q = [&] {
    if (f.q == 0) throw ParseError("--q is required for the " + f.family + " family");
  };
  if (f.family == "inversion") {
    need_q();
    if (f.p_shape.empty()) throw ParseError("--p-shape is required for the inversion family");
    return family_inversion(f.q, parse_p_shape(f.p_shape), caps);
  }
  if (f.family == "vector") {
    need_q();
    return family_vector(f.q, f.a, f.n, f.m, caps);
  }
  if (f.family == "extraspecial") {
    need_q();
    return family_extraspecial(f.q, f.m, caps);
  }
  if (f.family == "c3") {
    if (f.primes.empty()) throw ParseError("--primes is required for the c3 family");
    return family_c3(f.primes, caps);
  }
  if (f.family == "diagonal") return diagonal_counterexample(caps);
  if (auto c = semidirect_case(f.family, caps)) return std::move(c->recipe);
  throw ParseError("unknown family '" + f.family + "'");
}

Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (Json::exception const& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Graph read_graph_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

Edge parse_edge(std::string const& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    auto x = std::stoul(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    auto rest = s.substr(comma + 1);
    auto y = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {static_cast<Point>(x), static_cast<Point>(y)};
  } catch (std::logic_error const&) {
    throw ParseError("--edge expects x,y but got '" + s + "'");
  }
}

void print_report(VerdictReport const& r, Common const& c, std::ostream& out) {
  if (c.json) {
    out << to_json(r).dump(2) << "\n";
    return;
  }
  for (auto const& x : r.results) {
    out << to_string(x.status) << "  " << x.check << "  " << x.target;
    if (!x.detail.empty()) out << "  " << x.detail;
    if (x.millis) out << "  (" << *x.millis << " ms)";
    out << "\n";
    if (x.status == Status::fail && !x.witness.is_null()) {
      out << "    witness: " << x.witness.dump() << "\n";
    }
  }
  out << r.results.size() << " results: " << r.count(Status::pass) << " pass, "
      << r.count(Status::fail) << " fail, " << r.count(Status::skip) << " skip, "
      << r.count(Status::vacuous) << " vacuous\n";
}

VerdictReport new_report() {
  VerdictReport r;
  r.tool_version = std::string(tool_version());
  return r;
}

CheckResult verdict_result(std::string check, std::string target, SpVerdict const& v) {
  CheckResult r;
  r.check = std::move(check);
  r.target = std::move(target);
  r.status = v.semiprimitive ? Status::pass : Status::fail;
  std::ostringstream d;
  d << (v.semiprimitive ? "semiprimitive" : "not semiprimitive");
  if (!v.regular_normals.empty()) {
    d << "; regular normal subgroups of order";
    for (auto o : v.regular_normals) d << " " << o;
  }
  if (!v.detail.empty()) d << "; " << v.detail;
  r.detail = d.str();
  if (v.witness) r.witness = group_witness(*v.witness);
  return r;
}

std::optional<CheckResult> over_max(std::string check, std::string target,
                                    PermGroup const& g, Common const& c) {
  if (c.max_order == 0 || g.order() <= c.max_order) return std::nullopt;
  CheckResult r;
  r.check = std::move(check);
  r.target = std::move(target);
  r.status = Status::skip;
  r.detail = "max-order: group order " + std::to_string(g.order()) + " is above " +
             std::to_string(c.max_order);
  return r;
}

int check_sp(std::string const& group_file, FamilyArgs const& fam, Common const& c,
             std::ostream& out) {
  VerdictReport report = new_report();
  if (!group_file.empty() == !fam.family.empty()) {
    throw ParseError("check-sp needs exactly one of --group and --construct");
  }
  if (!group_file.empty()) {
    PermGroup g = group_from_json(read_json_file(group_file));
    if (!g.is_transitive()) throw InvalidArgument("group is not transitive");
    if (auto s = over_max("semiprim.definition", group_file, g, c)) {
      report.results.push_back(*s);
    } else {
      report.results.push_back(verdict_result("semiprim.definition", group_file,
                                              is_semiprimitive_definition(g, c.caps)));
    }
  } else {
    GroupRecipe r = build_family(fam, c.caps);
    if (auto s = over_max("semiprim.definition", r.name, r.group(), c)) {
      report.results.push_back(*s);
    } else {
      SpVerdict def = r.small ? is_semiprimitive_definition(*r.small, c.caps)
                              : is_semiprimitive_definition(r.group(), c.caps);
      report.results.push_back(verdict_result("semiprim.definition", r.name, def));
      SpVerdict crit = is_semiprimitive_criterion(r.spec, c.caps);
      report.results.push_back(verdict_result("semiprim.criterion", r.name, crit));
      CheckResult agree;
      agree.check = "semiprim.criterion_agrees";
      agree.target = r.name;
      bool const ok = crit.semiprimitive == def.semiprimitive && crit.forms_agree.value_or(false);
      agree.status = ok ? Status::pass : Status::fail;
      agree.detail = std::string("definition and criterion ") +
                     (crit.semiprimitive == def.semiprimitive ? "agree" : "DIFFER") +
                     ", criterion forms " + (crit.forms_agree.value_or(false) ? "agree" : "DIFFER");
      report.results.push_back(agree);
    }
  }
  print_report(report, c, out);
  return exit_code(report);
}

int construct(FamilyArgs const& fam, std::string const& fixture, std::string const& out_dir,
              std::string const& out_file, Common const& c, std::ostream& out) {
  if (fam.family.empty() == fixture.empty()) {
    throw ParseError("construct needs exactly one of a family and --fixture");
  }
  if (!fixture.empty()) {
    Fixture f = fixture_by_name(fixture);
    Json g = group_to_json(f.group, f.name);
    g["order"] = f.group.order();
    if (out_dir.empty()) {
      Json j;
      j["name"] = f.name;
      std::ostringstream edges;
      write_edge_list(edges, f.graph);
      j["edges"] = edges.str();
      j["group"] = g;
      out << j.dump(c.json ? 2 : -1) << "\n";
      return 0;
    }
    std::ofstream e(out_dir + "/" + f.name + ".edges");
    std::ofstream gj(out_dir + "/" + f.name + ".group.json");
    if (!e || !gj) throw ParseError("cannot write into " + out_dir);
    write_edge_list(e, f.graph);
    gj << g.dump() << "\n";
    out << "wrote " << out_dir << "/" << f.name << ".edges and .group.json\n";
    return 0;
  }
  GroupRecipe r = build_family(fam, c.caps);
  Json j = group_to_json(r.group(), r.name);
  j["order"] = r.group().order();
  j["family"] = std::string(to_string(r.family));
  j["params"] = r.params;
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw ParseError("cannot write " + out_file);
    f << j.dump() << "\n";
    out << "wrote " << out_file << " (order " << r.group().order() << ", degree "
        << r.group().degree() << ")\n";
  } else {
    out << j.dump(c.json ? 2 : -1) << "\n";
  }
  return 0;
}

struct LocalArgs {
  std::string fixture, graph_file, group_file, edge;
  bool all_edges = false;
  bool bound = false;
};

int local(LocalArgs const& a, Common const& c, std::ostream& out) {
  ArcPair pair = [&] {
    if (!a.fixture.empty()) {
      if (!a.graph_file.empty() || !a.group_file.empty()) {
        throw ParseError("--fixture excludes --graph and --group");
      }
      Fixture f = fixture_by_name(a.fixture);
      return check_arc_transitive(std::move(f.graph), std::move(f.group));
    }
    if (a.graph_file.empty() || a.group_file.empty()) {
      throw ParseError("local needs --fixture or both --graph and --group");
    }
    return check_arc_transitive(read_graph_file(a.graph_file),
                                group_from_json(read_json_file(a.group_file)));
  }();
  std::string const target = !a.fixture.empty() ? a.fixture : a.graph_file;
  VerdictReport report = new_report();
  auto add = [&](CheckResult r) {
    if (r.target.empty()) r.target = target;
    report.results.push_back(std::move(r));
  };
  if (auto s = over_max("local.anatomy", target, pair.group, c)) {
    add(*s);
    print_report(report, c, out);
    return 0;
  }
  if (a.bound) {
    StabiliserBound b = verify_stabiliser_bound(pair, c.caps);
    b.result.detail += "; bound " + std::to_string(b.bound);
    add(b.result);
    print_report(report, c, out);
    return exit_code(report);
  }
  std::vector<Edge> edges;
  if (a.all_edges) {
    if (!a.edge.empty()) throw ParseError("--edge excludes --all-edges-orbit");
    edges = pair.graph.edges();
  } else {
    edges.push_back(a.edge.empty() ? default_edge(pair) : parse_edge(a.edge));
  }
  for (Edge e : edges) {
    std::string const where = target + "@" + std::to_string(e.first) + "," +
                              std::to_string(e.second);
    auto o = anatomy(pair, e, c.caps);
    o.result.target = where;
    if (!o.anatomy) {
      add(o.result);
      continue;
    }
    if (c.json) o.result.witness = to_json(*o.anatomy);
    add(o.result);
    for (auto r : verify_local_lemmas(*o.anatomy, c.caps)) {
      r.target = where;
      add(r);
    }
    auto ks = verify_kernel_structure(*o.anatomy, c.caps);
    ks.result.target = where;
    add(ks.result);
    auto ls = verify_local_sections(*o.anatomy, c.caps);
    ls.result.target = where;
    add(ls.result);
  }
  print_report(report, c, out);
  return exit_code(report);
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiprimitivity checks for permutation groups and local actions of "
               "arc-transitive graphs"};
  app.require_subcommand(1);
  Common c;
  std::string caps_flag;
  app.add_flag("--json", c.json, "Print the JSON report");
  app.add_option("--max-order", c.max_order, "Skip groups larger than this order");
  app.add_option("--caps", caps_flag,
                 "Cap overrides, e.g. classes=400,stored=2000000 (after SEMIPRIM_CAPS)");
  app.fallthrough();

  auto* sp = app.add_subcommand("check-sp", "Test semiprimitivity of a group or a family member");
  std::string group_file;
  FamilyArgs fam;
  sp->add_option("--group", group_file, "Group JSON file");
  sp->add_option("--construct", fam.family,
                 "inversion, vector, extraspecial, c3, diagonal, or a corpus name");
  add_family_options(sp, fam);

  auto* con = app.add_subcommand("construct", "Print a family member or a graph fixture");
  FamilyArgs cfam;
  std::string fixture, out_dir, out_file;
  con->add_option("family", cfam.family, "inversion, vector, extraspecial, c3, diagonal");
  con->add_option("--fixture", fixture, "Graph fixture name");
  con->add_option("--out-dir", out_dir, "Write <name>.edges and <name>.group.json here");
  con->add_option("--out", out_file, "Write the group JSON here");
  add_family_options(con, cfam);

  auto* loc = app.add_subcommand("local", "Local analysis of an arc-transitive graph");
  LocalArgs la;
  loc->add_option("--fixture", la.fixture, "Graph fixture name");
  loc->add_option("--graph", la.graph_file, "Edge list file");
  loc->add_option("--group", la.group_file, "Group JSON file");
  loc->add_option("--edge", la.edge, "Edge x,y (default: 0 and its first neighbour)");
  loc->add_flag("--all-edges-orbit", la.all_edges, "Analyse every edge of the orbit");
  loc->add_flag("--bound,--stabiliser-bound", la.bound,
                "Check the vertex-stabiliser bound d!(d-1)! instead");

  auto* all = app.add_subcommand("verify-all", "Run the verification suite");
  SuiteOptions so;
  all->add_option("--filter", so.filter, "Keep checks whose id or target contains this");
  all->add_option("--jobs", so.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  all->add_flag("--timings", so.timings, "Record per-check milliseconds");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    c.caps = caps_from_env(suite_caps());
    if (!caps_flag.empty()) c.caps = parse_caps(caps_flag, c.caps);
    if (sp->parsed()) return check_sp(group_file, fam, c, out);
    if (con->parsed()) return construct(cfam, fixture, out_dir, out_file, c, out);
    if (loc->parsed()) return local(la, c, out);
    so.caps = c.caps;
    so.max_order = c.max_order;
    VerdictReport r = run_suite(so);
    print_report(r, c, out);
    return exit_code(r);
  } catch (CapExceeded const& e) {
    err << "error: cap exceeded: " << e.what() << "\n";
    return kBadInput;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace semiprim
