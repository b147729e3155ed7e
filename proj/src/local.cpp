#include "semiprim/local.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "semiprim/error.hpp"
#include "semiprim/numbers.hpp"
#include "semiprim/structure.hpp"

namespace semiprim {

namespace {

CheckResult make(std::string check, Status status, std::string detail,
                 Json witness = nullptr) {
  CheckResult r;
  r.check = std::move(check);
  r.status = status;
  r.detail = std::move(detail);
  r.witness = std::move(witness);
  return r;
}

CheckResult item(std::string id, bool ok, std::string detail,
                 Json witness = nullptr) {
  return make("local." + std::move(id), ok ? Status::pass : Status::fail,
              std::move(detail), ok ? Json(nullptr) : std::move(witness));
}

bool same(PermGroup const& a, PermGroup const& b) { return a.same_elements(b); }

bool le(PermGroup const& a, PermGroup const& b) { return a.is_subgroup_of(b); }

std::string ord(PermGroup const& g) { return std::to_string(g.order()); }

Json witnesses(std::initializer_list<std::pair<char const*, PermGroup const*>> gs) {
  Json j = Json::object();
  for (auto const& [name, g] : gs) j[name] = group_witness(*g);
  return j;
}

bool is_sylow(PermGroup const& s, PermGroup const& g, std::uint64_t p) {
  return le(s, g) && s.order() == p_part(g.order(), p);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t factorial_saturating(std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out = saturating_mul(out, i);
  return out;
}

// Greedy split of x into pairwise commuting normal subgroups with trivial
// pairwise intersections, each accepted by `is_factor`, whose product is x.
std::optional<std::vector<PermGroup>> split_direct_factors(
    PermGroup const& x, std::function<bool(PermGroup const&)> const& is_factor,
    Caps const& caps) {
  std::vector<PermGroup> chosen;
  PermGroup product(x.degree());
  for (auto const& n : all_normal_subgroups(x, caps).members) {
    if (n.is_trivial() || !is_factor(n)) continue;
    bool ok = true;
    for (auto const& e : chosen) {
      if (!commutator_subgroup(n, e).is_trivial()) ok = false;
    }
    PermGroup joined = join(product, n);
    if (!ok || joined.order() != product.order() * n.order()) continue;
    chosen.push_back(n);
    product = std::move(joined);
  }
  if (product.order() != x.order()) return std::nullopt;
  return chosen;
}

bool looks_like_sl2(PermGroup const& e, std::uint64_t p) {
  if (p == 2) return e.order() == 6 && !is_abelian(e);
  if (p == 3) {
    if (e.order() != 24) return false;
    PermGroup d = derived_subgroup(e);
    if (d.order() != 8 || is_abelian(d)) return false;
    std::size_t involutions = 0;
    for (auto const& g : d.elements()) involutions += g.order() == 2;
    return involutions == 1 && center(e).order() == 2;
  }
  return false;
}

bool looks_like_psl2(PermGroup const& e, std::uint64_t p) {
  if (p == 2) return e.order() == 6 && !is_abelian(e);
  if (p == 3) {
    if (e.order() != 12) return false;
    PermGroup d = derived_subgroup(e);
    return d.order() == 4 && is_elementary_abelian(d, 2) &&
           center(e).is_trivial();
  }
  return false;
}

template <class Outcome>
bool propagate(AnatomyOutcome const& o, Outcome& out, std::string const& check) {
  if (o.anatomy) return false;
  out.result = o.result;
  out.result.check = check;
  return true;
}

}  // namespace

ArcPair check_arc_transitive(Graph graph, PermGroup group) {
  if (group.degree() != graph.vertex_count()) {
    throw InvalidArgument("group degree differs from the vertex count");
  }
  if (!graph.preserved_by(group)) {
    throw InvalidArgument("group does not preserve the graph");
  }
  if (!graph.is_connected()) throw InvalidArgument("graph is not connected");
  std::size_t const d = graph.valency();
  if (d == 0) throw InvalidArgument("graph is not regular or has no edges");
  Point const y = graph.neighbours(0)[0];
  std::set<Edge> seen{{0, y}};
  std::vector<Edge> queue{{0, y}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const& s : group.generators()) {
      Edge next{s[queue[i].first], s[queue[i].second]};
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  if (seen.size() != 2 * graph.edge_count()) {
    throw InvalidArgument("group is not arc-transitive: arc orbit has " +
                          std::to_string(seen.size()) + " of " +
                          std::to_string(2 * graph.edge_count()) + " arcs");
  }
  return ArcPair{std::move(graph), std::move(group), d};
}

Edge default_edge(ArcPair const& pair) {
  return {0, pair.graph.neighbours(0)[0]};
}

InducedAction local_action(ArcPair const& pair, Point x) {
  return induced_action(pair.group.stabilizer(x), pair.graph.neighbours(x));
}

LocalHypothesis local_hypothesis(ArcPair const& pair, Point x, Caps const& caps) {
  LocalHypothesis h;
  h.local = local_action(pair, x).image;
  h.semiprimitivity = is_semiprimitive_definition(h.local, caps);
  auto rep = regular_normal_analysis(h.local, caps);
  for (auto const& n : rep.regular) {
    if (!is_nilpotent(n)) continue;
    ++h.regular_nilpotent_count;
    if (!h.regular_nilpotent) h.regular_nilpotent = n;
  }
  h.holds = h.semiprimitivity.semiprimitive && h.regular_nilpotent.has_value();
  std::ostringstream out;
  out << "local action of order " << h.local.order() << " on "
      << h.local.degree() << " points is "
      << (h.semiprimitivity.semiprimitive ? "" : "not ") << "semiprimitive";
  if (h.regular_nilpotent) {
    out << ", regular normal nilpotent subgroup of order "
        << h.regular_nilpotent->order();
    if (h.regular_nilpotent_count > 1) {
      out << " (" << h.regular_nilpotent_count << " found)";
    }
  } else {
    out << ", no regular normal nilpotent subgroup";
  }
  h.detail = out.str();
  return h;
}

EdgeKernels kernels(ArcPair const& pair, Edge e) {
  auto [x, y] = e;
  if (!pair.graph.has_edge(x, y)) {
    throw InvalidArgument("{" + std::to_string(x) + "," + std::to_string(y) +
                          "} is not an edge");
  }
  auto with = [&](std::initializer_list<Point> pts,
                  std::initializer_list<Point> centres) {
    std::vector<Point> out(pts);
    for (Point c : centres) {
      for (Point n : pair.graph.neighbours(c)) {
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
      }
    }
    return pair.group.pointwise_stabilizer(out);
  };
  return EdgeKernels{with({x}, {x}), with({y}, {y}), with({x, y}, {}),
                     with({x, y}, {x, y})};
}

AnatomyOutcome anatomy(ArcPair const& pair, Edge e, Caps const& caps) {
  AnatomyOutcome out;
  out.result.check = "local.anatomy";
  auto hyp = local_hypothesis(pair, e.first, caps);
  if (!hyp.holds) {
    out.result.status = Status::skip;
    out.result.detail = "hypothesis-not-met: " + hyp.detail;
    return out;
  }
  EdgeKernels k = kernels(pair, e);
  if (k.gxy1.is_trivial()) {
    out.result.status = Status::vacuous;
    out.result.detail = "theorem-vacuous: G_xy^[1] = 1";
    return out;
  }
  std::uint64_t const p = prime_of_power(k.gxy1.order());
  if (p == 0) {
    out.result.status = Status::fail;
    out.result.detail = "finding: |G_xy^[1]| = " + ord(k.gxy1) +
                        " is not a prime power";
    out.result.witness = group_witness(k.gxy1);
    return out;
  }
  Anatomy a{.edge = e,
            .p = p,
            .q = p == 2 || p == 3 ? 5 - p : 0,
            .gx = pair.group.stabilizer(e.first),
            .gy = pair.group.stabilizer(e.second),
            .k = k,
            .local_x = local_action(pair, e.first),
            .local_y = local_action(pair, e.second),
            .regular_local = *hyp.regular_nilpotent};
  a.qx = core_p(k.gx1, p, caps);
  a.qy = core_p(k.gy1, p, caps);
  a.qxqy = join(a.qx, a.qy);
  if (!is_p_group(a.qxqy, p)) {
    out.result.status = Status::fail;
    out.result.detail = "finding: Q_x Q_y of order " + ord(a.qxqy) +
                        " is not a p-group";
    out.result.witness = group_witness(a.qxqy);
    return out;
  }
  a.lx = normal_closure(a.gx, a.qxqy);
  a.r0 = core_p_prime(a.lx, p, caps);
  a.r = intersection(a.local_x.hom.preimage(a.regular_local), a.lx, caps);
  a.zxy = omega_center(a.qxqy, p, caps);
  a.zx = normal_closure(a.gx, a.zxy);
  a.mx = centralizer(a.lx, a.zx, caps);
  a.jlx = thompson_of_group(a.lx, p, caps);
  a.jx = join(a.jlx, a.mx);
  std::vector<PermGroup> centres;
  for (auto const& s : conjugates(a.lx, sylow(a.lx, p, caps), caps)) {
    centres.push_back(omega_center(s, p, caps));
  }
  a.v = join(centres, a.gx.degree());
  a.s = sylow(a.lx, p, caps);
  a.thompson_family = max_elementary_abelian(a.s, p, caps);
  a.js = thompson(a.s, p, caps);
  std::ostringstream detail;
  detail << "p=" << p << ", |G_x|=" << a.gx.order() << ", |G_x^[1]|="
         << k.gx1.order() << ", |G_xy^[1]|=" << k.gxy1.order() << ", |Q_x|="
         << a.qx.order() << ", |Q_xQ_y|=" << a.qxqy.order() << ", |L_x|="
         << a.lx.order() << ", |R|=" << a.r.order() << ", |Z_x|="
         << a.zx.order();
  out.result.status = Status::pass;
  out.result.detail = detail.str();
  out.anatomy = std::move(a);
  return out;
}

Json to_json(Anatomy const& a) {
  Json j;
  j["edge"] = {a.edge.first, a.edge.second};
  j["p"] = a.p;
  j["q"] = a.q;
  j["kernel_orders"] = {{"G_x", a.gx.order()},
                        {"G_x^[1]", a.k.gx1.order()},
                        {"G_y^[1]", a.k.gy1.order()},
                        {"G_xy", a.k.gxy.order()},
                        {"G_xy^[1]", a.k.gxy1.order()}};
  Json subs = Json::object();
  for (auto const& [name, g] :
       std::initializer_list<std::pair<char const*, PermGroup const*>>{
           {"Q_x", &a.qx}, {"Q_y", &a.qy}, {"Q_xQ_y", &a.qxqy}, {"L_x", &a.lx},
           {"R_0", &a.r0}, {"R", &a.r}, {"Z_xy", &a.zxy}, {"Z_x", &a.zx},
           {"M_x", &a.mx}, {"J(L_x)", &a.jlx}, {"J_x", &a.jx}, {"V", &a.v},
           {"S", &a.s}, {"J(S)", &a.js}}) {
    subs[name] = group_witness(*g);
  }
  j["subgroups"] = std::move(subs);
  Json fam = Json::array();
  for (auto const& g : a.thompson_family) fam.push_back(group_witness(g));
  j["A(S)"] = std::move(fam);
  j["regular_local"] = group_witness(a.regular_local);
  return j;
}

std::vector<CheckResult> verify_local_lemmas(Anatomy const& a, Caps const& caps) {
  std::vector<CheckResult> out;
  std::uint64_t const p = a.p;
  auto img_x = [&](PermGroup const& g) { return a.local_x.hom.image_of(g); };
  auto img_y = [&](PermGroup const& g) { return a.local_y.hom.image_of(g); };
  PermGroup const& gx1 = a.k.gx1;

  {  // normal subgroups of G_x that are semiregular on Γ(x)
    bool ok = true;
    Json w;
    std::size_t count = 0;
    for (auto const& n : all_normal_subgroups(a.gx, caps).members) {
      if (!is_semiregular(img_x(n))) continue;
      ++count;
      PermGroup meet = intersection(n, a.k.gxy, caps);
      if (!le(meet, gx1)) {
        ok = false;
        w = witnesses({{"N", &n}, {"N_meet_G_xy", &meet}});
        break;
      }
    }
    out.push_back(item("semiregular_normals_fix_neighbourhood", ok,
                       std::to_string(count) +
                           " normal subgroups of G_x semiregular on Γ(x); each "
                           "meets G_xy inside G_x^[1]",
                       w));
  }
  {
    PermGroup nx = normalizer(a.gx, a.k.gxy1, caps);
    PermGroup ny = normalizer(a.gy, a.k.gxy1, caps);
    bool const tx = img_x(nx).is_transitive(), ty = img_y(ny).is_transitive();
    out.push_back(item("kernel_normalisers_not_both_transitive", !(tx && ty),
                       std::string("N_{G_x}(G_xy^[1]) ") +
                           (tx ? "transitive" : "intransitive") +
                           " on Γ(x), N_{G_y}(G_xy^[1]) " +
                           (ty ? "transitive" : "intransitive") + " on Γ(y)",
                       witnesses({{"N_x", &nx}, {"N_y", &ny}})));
  }
  {
    PermGroup f1 = fitting(gx1, caps), fxy = fitting(a.k.gxy, caps);
    bool const ok = is_p_group(a.k.gxy1, p) && is_p_group(f1, p) &&
                    is_p_group(fxy, p) && le(a.k.gxy1, a.qx);
    out.push_back(item("kernels_are_p_groups", ok,
                       "|G_xy^[1]|=" + ord(a.k.gxy1) + ", |F(G_x^[1])|=" +
                           ord(f1) + ", |F(G_xy)|=" + ord(fxy) +
                           ", G_xy^[1] <= Q_x",
                       witnesses({{"F(G_x^[1])", &f1}, {"F(G_xy)", &fxy}})));
  }
  {
    PermGroup qy_local = img_x(a.qy);
    out.push_back(item("qy_moves_neighbourhood", !qy_local.is_trivial(),
                       "|Q_y^Γ(x)| = " + ord(qy_local),
                       witnesses({{"Q_y", &a.qy}})));
    PermGroup lx_local = img_x(a.lx);
    out.push_back(item("lx_transitive", lx_local.is_transitive(),
                       "|L_x^Γ(x)| = " + ord(lx_local),
                       witnesses({{"L_x", &a.lx}})));
  }
  out.push_back(item("regular_part_coprime_to_p",
                     a.regular_local.order() % p != 0,
                     "|R^Γ(x)| = " + ord(a.regular_local) + ", p = " +
                         std::to_string(p),
                     witnesses({{"R^Γ(x)", &a.regular_local}})));
  {
    PermGroup op = core_p(a.gx, p, caps);
    PermGroup c = centralizer(a.gx, a.qx, caps);
    PermGroup zo = join(center(a.qx, caps), core_p_prime(a.gx, p, caps));
    out.push_back(item("op_of_stabiliser_is_qx", same(op, a.qx),
                       "|O_p(G_x)| = " + ord(op) + ", |Q_x| = " + ord(a.qx),
                       witnesses({{"O_p(G_x)", &op}})));
    bool const intransitive = !img_x(c).is_transitive();
    out.push_back(item("centraliser_of_qx", intransitive && same(c, zo),
                       "C_{G_x}(Q_x) of order " + ord(c) +
                           (intransitive ? " is intransitive" : " is TRANSITIVE") +
                           " on Γ(x); Z(Q_x) O_p'(G_x) has order " + ord(zo),
                       witnesses({{"C", &c}, {"Z(Q_x)O_p'(G_x)", &zo}})));
  }
  {
    PermGroup c = commutator_subgroup(a.lx, gx1);
    out.push_back(item("lx_kernel_commutator_in_qx", le(c, a.qx),
                       "|[L_x, G_x^[1]]| = " + ord(c),
                       witnesses({{"[L_x,G_x^[1]]", &c}})));
  }
  out.push_back(item("qx_sylow_in_r", is_sylow(a.qx, a.r, p),
                     "|Q_x| = " + ord(a.qx) + ", |R| = " + ord(a.r),
                     witnesses({{"R", &a.r}})));
  {
    PermGroup oz = omega_center(a.qx, p, caps);
    bool const ok = le(a.zx, oz) && is_sylow(a.qx, a.mx, p);
    out.push_back(item("zx_central_in_qx", ok,
                       "|Z_x| = " + ord(a.zx) + " inside |ΩZ(Q_x)| = " + ord(oz) +
                           "; Q_x Sylow in M_x of order " + ord(a.mx),
                       witnesses({{"Z_x", &a.zx}, {"M_x", &a.mx}})));
  }
  {
    bool const ok = le(a.r, a.lx) && le(a.qy, a.lx) &&
                    product_order(a.r, a.qy, caps) == a.lx.order();
    out.push_back(item("lx_is_r_times_qy", ok,
                       "|R Q_y| = " + std::to_string(product_order(a.r, a.qy, caps)) +
                           ", |L_x| = " + ord(a.lx),
                       witnesses({{"R", &a.r}, {"Q_y", &a.qy}})));
    out.push_back(item("qxqy_sylow_in_lx", is_sylow(a.qxqy, a.lx, p),
                       "|Q_xQ_y| = " + ord(a.qxqy) + ", |L_x|_p = " +
                           std::to_string(p_part(a.lx.order(), p)),
                       witnesses({{"Q_xQ_y", &a.qxqy}})));
    auto ps = p_separability(a.lx, p, caps);
    out.push_back(item("lx_p_separable", ps.separable,
                       std::to_string(ps.series.size()) + " terms in the p-series",
                       witnesses({{"L_x", &a.lx}})));
  }
  {
    PermGroup lk = intersection(a.lx, gx1, caps);
    PermGroup rk = intersection(a.r, gx1, caps);
    std::uint64_t const idx = lk.order() / a.qx.order();
    std::uint64_t const ridx = a.r.order() / rk.order();
    bool ok = le(a.qx, lk);
    std::ostringstream d;
    d << "|L_x ∩ G_x^[1] : Q_x| = " << idx << ", |R : R ∩ G_x^[1]| = " << ridx;
    for (auto r : prime_divisors(idx)) ok = ok && ridx % r == 0;
    out.push_back(item("kernel_primes_divide_regular_part", ok, d.str(),
                       witnesses({{"L_x∩G_x^[1]", &lk}})));
  }
  CosetAction bar = quotient(a.lx, a.r0, caps);
  PermGroup const& lbar = bar.image();
  {
    PermGroup op = core_p(lbar, p, caps);
    PermGroup qbar = bar.hom().image_of(a.qx);
    out.push_back(item("op_of_lx_mod_r0_is_qx", same(op, qbar),
                       "|O_p(L_x/R_0)| = " + ord(op) + ", image of Q_x has order " +
                           ord(qbar),
                       witnesses({{"O_p(L_x/R_0)", &op}})));
  }
  {
    PermGroup const& rl = a.regular_local;
    PermGroup lk = intersection(a.lx, gx1, caps);
    std::uint64_t const idx = a.r.order() / lk.order();
    bool const ok = (p == 2 || p == 3) && idx % a.q == 0;
    out.push_back(item("p_is_2_or_3", ok,
                       "p = " + std::to_string(p) + ", q = 5-p = " +
                           std::to_string(a.q) + ", |R : L_x ∩ G_x^[1]| = " +
                           std::to_string(idx),
                       witnesses({{"R^Γ(x)", &rl}})));
  }
  {
    PermGroup jbar = thompson_of_group(lbar, p, caps);
    PermGroup jl_img = bar.hom().image_of(a.jlx);
    out.push_back(item("thompson_passes_to_lx_mod_r0", same(jbar, jl_img),
                       "|J(L_x/R_0)| = " + ord(jbar) + ", image of J(L_x) has order " +
                           ord(jl_img),
                       witnesses({{"J(L_x/R_0)", &jbar}})));
  }
  {
    PermGroup opp = core_p_prime(lbar, p, caps);
    bool const factorizable = is_thompson_factorizable(lbar, p, caps);
    out.push_back(item("lx_mod_r0_not_thompson_factorizable",
                       opp.is_trivial() && !factorizable,
                       "|O_p'(L_x/R_0)| = " + ord(opp) + ", L_x/R_0 " +
                           (factorizable ? "IS" : "is not") +
                           " Thompson factorizable",
                       witnesses({{"L_x/R_0", &lbar}})));
  }
  {
    PermGroup jl = img_x(a.jx);
    out.push_back(item("jx_transitive", jl.is_transitive(),
                       "|J_x^Γ(x)| = " + ord(jl), witnesses({{"J_x", &a.jx}})));
  }
  {
    PermGroup lk = intersection(a.lx, gx1, caps);
    bool ok = le(a.qx, a.lx) && le(a.r0, a.r) && le(a.r, a.lx) && le(lk, a.r) &&
              le(a.mx, a.jx) && le(a.jx, a.lx) && same(a.v, a.zx);
    for (auto const* n : {&a.lx, &a.r0, &a.zx, &a.jx}) {
      ok = ok && is_normal(*n, a.gx);
    }
    ok = ok && a.gx.order() == a.local_x.image.order() * gx1.order();
    out.push_back(item("anatomy_containments", ok,
                       "Q_x <= L_x, R_0 <= R <= L_x, L_x ∩ G_x^[1] <= R, "
                       "M_x <= J_x <= L_x, V = Z_x, normality in G_x, "
                       "|G_x| = |G_x^Γ(x)||G_x^[1]|",
                       witnesses({{"V", &a.v}, {"Z_x", &a.zx}})));
  }
  return out;
}

std::vector<CheckResult> verify_local_lemmas(ArcPair const& pair, Edge e,
                                             Caps const& caps) {
  auto o = anatomy(pair, e, caps);
  if (!o.anatomy) {
    o.result.check = "local.lemmas";
    return {o.result};
  }
  return verify_local_lemmas(*o.anatomy, caps);
}

KernelStructure verify_kernel_structure(Anatomy const& a, Caps const& caps) {
  KernelStructure ks;
  ks.p = a.p;
  ks.result.check = "local.kernel_structure";
  std::uint64_t const p = a.p;
  std::vector<Perm> velems = a.zx.elements(caps);
  PermGroup const& vgroup = a.zx;
  ks.v_order = vgroup.order();
  // J_x acting on V by conjugation; the kernel is M_x
  ActionHom on_v(a.jx, velems.size(), [&vgroup](Perm const& g) {
    std::vector<Point> img(vgroup.order());
    for (std::uint64_t i = 0; i < vgroup.order(); ++i) {
      img[i] = static_cast<Point>(*vgroup.rank(vgroup.element_at(i).conjugate(g)));
    }
    return Perm(std::move(img));
  });
  PermGroup const& h = on_v.image();
  std::vector<std::string> problems;
  if (!same(on_v.kernel(), a.mx)) problems.push_back("kernel on V is not M_x");
  if (!(p == 2 || p == 3)) problems.push_back("p not in {2,3}");
  if (!is_p_group(a.k.gxy1, p)) problems.push_back("G_xy^[1] is not a p-group");

  auto factors = split_direct_factors(
      h, [p](PermGroup const& e) { return looks_like_sl2(e, p); }, caps);
  Json w = Json::object();
  w["H"] = group_witness(h);
  if (!factors || factors->empty()) {
    problems.push_back("H is not a direct product of SL_2(p) factors");
  } else {
    ks.r = factors->size();
    std::vector<PermGroup> lifted, brackets;
    for (auto const& e : *factors) {
      lifted.push_back(on_v.preimage(e));
      brackets.push_back(commutator_subgroup(vgroup, lifted.back()));
      ks.factor_orders.push_back(e.order());
      ks.commutator_orders.push_back(brackets.back().order());
    }
    // C_V(H): points of V fixed by every generator of H
    std::vector<Perm> fixed;
    for (std::size_t i = 0; i < velems.size(); ++i) {
      bool fix = true;
      for (auto const& s : h.generators()) fix = fix && s[i] == i;
      if (fix) fixed.push_back(velems[i]);
    }
    PermGroup cvh(vgroup.degree(), fixed);
    ks.centralised_order = cvh.order();
    std::uint64_t prod = cvh.order();
    PermGroup all = cvh;
    for (auto const& b : brackets) {
      prod *= b.order();
      all = join(all, b);
    }
    if (prod != vgroup.order() || !same(all, vgroup)) {
      problems.push_back("V is not C_V(H) x [V,E_1] x ...");
    }
    for (std::size_t i = 0; i < brackets.size(); ++i) {
      if (brackets[i].order() != p * p) {
        problems.push_back("|[V,E_" + std::to_string(i + 1) + "]| = " +
                           ord(brackets[i]) + " != p^2");
      }
      if (centralizer(lifted[i], brackets[i], caps).order() != a.mx.order()) {
        problems.push_back("E_" + std::to_string(i + 1) +
                           " is not faithful on [V,E_" + std::to_string(i + 1) + "]");
      }
      for (std::size_t j = 0; j < brackets.size(); ++j) {
        if (i != j && !commutator_subgroup(lifted[i], brackets[j]).is_trivial()) {
          problems.push_back("E_" + std::to_string(i + 1) + " moves [V,E_" +
                             std::to_string(j + 1) + "]");
        }
      }
    }
    Json fw = Json::array();
    for (auto const& e : *factors) fw.push_back(group_witness(e));
    w["factors"] = std::move(fw);
  }

  bool d_ok = true;
  if (problems.empty()) {
    PermGroup sh = sylow(h, p, caps);
    for (auto const& A : max_elementary_abelian(sh, p, caps)) {
      ++ks.thompson_subgroups_checked;
      std::uint64_t prod = 1;
      for (auto const& e : *factors) prod *= intersection(A, e, caps).order();
      std::uint64_t cva = 0;
      for (std::size_t i = 0; i < velems.size(); ++i) {
        bool fix = true;
        for (auto const& s : A.generators()) fix = fix && s[i] == i;
        cva += fix;
      }
      if (prod != A.order() || A.order() * cva != vgroup.order()) {
        d_ok = false;
        w["A"] = group_witness(A);
        break;
      }
    }
  }

  std::ostringstream d;
  d << "p=" << p << ", r=" << ks.r << ", |V|=" << ks.v_order
    << ", |C_V(H)|=" << ks.centralised_order;
  for (std::size_t i = 0; i < ks.r; ++i) {
    d << ", |E_" << i + 1 << "|=" << ks.factor_orders[i] << " |[V,E_" << i + 1
      << "]|=" << ks.commutator_orders[i];
  }
  d << ", " << ks.thompson_subgroups_checked
    << " elementary abelian subgroups of maximal order in a Sylow subgroup of H";
  for (auto const& pr : problems) d << "; " << pr;
  if (!problems.empty()) {
    ks.result.status = Status::fail;
    ks.result.witness = std::move(w);
  } else if (!d_ok) {
    ks.result.status = Status::skip;
    d << "; convention-sensitive: |A||C_V(A)| = |V| fails for the Thompson reading";
    ks.result.witness = std::move(w);
  } else {
    ks.result.status = Status::pass;
  }
  ks.result.detail = d.str();
  return ks;
}

KernelStructure verify_kernel_structure(ArcPair const& pair, Edge e,
                                        Caps const& caps) {
  auto o = anatomy(pair, e, caps);
  KernelStructure ks;
  if (propagate(o, ks, "local.kernel_structure")) return ks;
  return verify_kernel_structure(*o.anatomy, caps);
}

LocalSections verify_local_sections(Anatomy const& a, Caps const& caps) {
  LocalSections ls;
  ls.result.check = "local.sections";
  auto img_x = [&](PermGroup const& g) { return a.local_x.hom.image_of(g); };
  CosetAction jm = quotient(a.jx, a.mx, caps);
  PermGroup fhat = jm.hom().preimage(center(jm.image(), caps));
  PermGroup const& local = a.local_x.image;
  PermGroup j = img_x(a.jx), f = img_x(fhat);
  PermGroup const& r = a.regular_local;
  std::vector<std::string> problems;
  if (!(le(f, r) && f.order() < r.order())) problems.push_back("F is not below R");
  if (!(le(r, j) && r.order() < j.order())) problems.push_back("R is not below J");
  if (!is_normal(f, local) || !is_normal(j, local)) {
    problems.push_back("F or J is not normal in the local action");
  }
  CosetAction jf = quotient(j, f, caps);
  std::uint64_t const p = a.p;
  auto factors = split_direct_factors(
      jf.image(), [p](PermGroup const& e) { return looks_like_psl2(e, p); }, caps);
  if (!factors || factors->empty()) {
    problems.push_back(std::string("J/F is not a direct product of copies of ") +
                       (p == 2 ? "Sym(3)" : "Alt(4)"));
  } else {
    ls.factors = factors->size();
    std::uint64_t expect = 1;
    for (std::size_t i = 0; i < ls.factors; ++i) expect *= p == 2 ? 6 : 12;
    if (jf.image().order() != expect) problems.push_back("|J/F| mismatch");
  }
  std::ostringstream d;
  d << "|F|=" << f.order() << " < |R^Γ(x)|=" << r.order() << " < |J|=" << j.order()
    << ", J/F has " << ls.factors << " factor(s) "
    << (p == 2 ? "Sym(3)" : "Alt(4)");
  for (auto const& pr : problems) d << "; " << pr;
  ls.result.status = problems.empty() ? Status::pass : Status::fail;
  ls.result.detail = d.str();
  if (!problems.empty()) {
    ls.result.witness = witnesses({{"J", &j}, {"F", &f}, {"R", &r}});
  }
  ls.j = std::move(j);
  ls.f = std::move(f);
  ls.r = r;
  return ls;
}

LocalSections verify_local_sections(ArcPair const& pair, Edge e, Caps const& caps) {
  auto o = anatomy(pair, e, caps);
  LocalSections ls;
  if (propagate(o, ls, "local.sections")) return ls;
  return verify_local_sections(*o.anatomy, caps);
}

StabiliserBound verify_stabiliser_bound(ArcPair const& pair, Caps const& caps) {
  StabiliserBound b;
  b.result.check = "local.stabiliser_bound";
  b.d = pair.valency;
  b.bound = saturating_mul(factorial_saturating(b.d), factorial_saturating(b.d - 1));
  auto hyp = local_hypothesis(pair, 0, caps);
  Edge const e = default_edge(pair);
  EdgeKernels k = kernels(pair, e);
  b.stabiliser_order = pair.group.stabilizer(0).order();
  b.kernel_order = k.gxy1.order();
  std::uint64_t const g = std::gcd<std::uint64_t, std::uint64_t>(b.d, 6);
  if (!hyp.holds) {
    b.result.status = Status::skip;
    b.result.detail = "hypothesis-not-met: " + hyp.detail;
    return b;
  }
  if (g != 1) {
    b.result.status = Status::skip;
    b.result.detail = "hypothesis-not-met: gcd(d,6) = " + std::to_string(g) +
                      " for d = " + std::to_string(b.d);
    return b;
  }
  bool const ok = k.gxy1.is_trivial() && b.stabiliser_order <= b.bound;
  std::ostringstream d;
  d << "d=" << b.d << ", |G_xy^[1]|=" << b.kernel_order << ", |G_x|="
    << b.stabiliser_order << " <= d!(d-1)! = " << b.bound;
  b.result.status = ok ? Status::pass : Status::fail;
  b.result.detail = d.str();
  if (!ok) b.result.witness = group_witness(k.gxy1);
  return b;
}

}  // namespace semiprim
