#include <catch_amalgamated.hpp>

#include "semiprim/error.hpp"
#include "semiprim/fixtures.hpp"
#include "semiprim/local.hpp"
#include "semiprim/structure.hpp"

using namespace semiprim;

namespace {

ArcPair pair_of(std::string const& name) {
  auto f = fixture_by_name(name);
  return check_arc_transitive(f.graph, f.group);
}

// Streams every element of the group and counts those fixing `pts`.
std::uint64_t streamed_fixers(PermGroup const& g, std::vector<Point> const& pts) {
  std::uint64_t n = 0;
  for (auto const& x : elements_streamed(g)) {
    bool fix = true;
    for (Point p : pts) fix = fix && x[p] == p;
    n += fix;
  }
  return n;
}

std::vector<Point> closed_nbhd(Graph const& g, std::initializer_list<Point> vs) {
  std::vector<Point> out(vs);
  for (Point v : vs) {
    for (Point w : g.neighbours(v)) {
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  }
  return out;
}

// Elements of G mapping the edge {x, y} to itself, by streaming.
std::uint64_t streamed_edge_stabiliser(PermGroup const& g, Edge e) {
  std::uint64_t n = 0;
  for (auto const& x : elements_streamed(g)) {
    Point a = x[e.first], b = x[e.second];
    n += (a == e.first && b == e.second) || (a == e.second && b == e.first);
  }
  return n;
}

bool all_pass(std::vector<CheckResult> const& rs) {
  for (auto const& r : rs) {
    if (r.status != Status::pass) {
      UNSCOPED_INFO(r.check << ": " << r.detail);
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("arc transitivity is checked", "[local]") {
  auto k4 = pair_of("k4");
  CHECK(k4.valency == 3);
  auto heawood = pair_of("heawood");
  CHECK(heawood.valency == 3);
  CHECK(heawood.group.order() == 336);

  Graph path(3, {{0, 1}, {1, 2}});
  PermGroup flip(3, {Perm::from_cycles(3, {{0, 2}})});
  CHECK_THROWS_AS(check_arc_transitive(path, flip), InvalidArgument);

  // C6 with only rotations is vertex- but not arc-transitive
  Graph hex(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK_THROWS_AS(check_arc_transitive(hex, cyclic_group(6)), InvalidArgument);
  CHECK_NOTHROW(check_arc_transitive(hex, dihedral_group(6)));

  // a group that does not preserve the graph
  CHECK_THROWS_AS(check_arc_transitive(hex, symmetric_group(6)), InvalidArgument);
  CHECK_THROWS_AS(kernels(heawood, {0, 0}), InvalidArgument);
}

TEST_CASE("kernel orders agree with streamed counts", "[local][oracle]") {
  for (auto const& name : fixture_names()) {
    CAPTURE(name);
    auto pair = pair_of(name);
    for (Point y : pair.graph.neighbours(0)) {
      Edge e{0, y};
      auto k = kernels(pair, e);
      auto const& g = pair.group;
      CHECK(k.gx1.order() == streamed_fixers(g, closed_nbhd(pair.graph, {0})));
      CHECK(k.gy1.order() == streamed_fixers(g, closed_nbhd(pair.graph, {y})));
      CHECK(k.gxy.order() == streamed_fixers(g, {0, y}));
      CHECK(k.gxy1.order() == streamed_fixers(g, closed_nbhd(pair.graph, {0, y})));

      // |G_x| = |G_x^Γ(x)| |G_x^[1]| and |G_{x,y}| = 2 |G_xy|
      auto local = local_action(pair, 0);
      CHECK(g.stabilizer(0).order() == local.image.order() * k.gx1.order());
      CHECK(local.kernel.same_elements(k.gx1));
      CHECK(streamed_edge_stabiliser(g, e) == 2 * k.gxy.order());
    }
  }
}

TEST_CASE("local hypothesis on the fixtures", "[local]") {
  auto heawood = local_hypothesis(pair_of("heawood"));
  CHECK(heawood.holds);
  CHECK(heawood.local.order() == 6);
  REQUIRE(heawood.regular_nilpotent);
  CHECK(heawood.regular_nilpotent->order() == 3);
  CHECK(heawood.regular_nilpotent_count == 1);

  auto f16 = local_hypothesis(pair_of("f16"));
  CHECK(f16.holds);
  CHECK(f16.local.order() == 20);
  CHECK(f16.local.degree() == 5);
  REQUIRE(f16.regular_nilpotent);
  CHECK(f16.regular_nilpotent->order() == 5);

  CHECK(local_hypothesis(pair_of("k3_3")).holds);

  // Sym(5) on five neighbours has no regular normal subgroup
  auto k6 = local_hypothesis(pair_of("k6"));
  CHECK(k6.semiprimitivity.semiprimitive);
  CHECK_FALSE(k6.holds);
}

TEST_CASE("Heawood anatomy", "[local]") {
  auto pair = pair_of("heawood");
  auto o = anatomy(pair, {0, pair.graph.neighbours(0)[0]});
  REQUIRE(o.result.status == Status::pass);
  auto const& a = *o.anatomy;
  CHECK(a.p == 2);
  CHECK(a.q == 3);
  CHECK(a.gx.order() == 24);
  CHECK(a.k.gx1.order() == 4);
  CHECK(a.k.gxy1.order() == 2);
  CHECK(a.qx.same_elements(a.k.gx1));
  CHECK(a.qxqy.order() == 8);
  CHECK(!is_abelian(a.qxqy));
  CHECK(a.lx.same_elements(a.gx));
  CHECK(a.r0.is_trivial());
  CHECK(a.r.order() == 12);
  CHECK(a.zx.same_elements(a.qx));
  CHECK(a.mx.same_elements(a.qx));
  CHECK(a.jlx.order() == 24);
  CHECK(a.v.same_elements(a.zx));

  CHECK(all_pass(verify_local_lemmas(a)));

  auto ks = verify_kernel_structure(a);
  CHECK(ks.result.status == Status::pass);
  CHECK(ks.r == 1);
  CHECK(ks.factor_orders == std::vector<std::uint64_t>{6});
  CHECK(ks.commutator_orders == std::vector<std::uint64_t>{4});
  CHECK(ks.centralised_order == 1);

  auto ls = verify_local_sections(a);
  CHECK(ls.result.status == Status::pass);
  CHECK(ls.factors == 1);
  CHECK(ls.f->order() == 1);
  CHECK(ls.r->order() == 3);
  CHECK(ls.j->order() == 6);

  auto json = to_json(a);
  CHECK(json["p"] == 2);
  CHECK(json["kernel_orders"]["G_xy^[1]"] == 2);
}

TEST_CASE("Tutte-Coxeter anatomy", "[local]") {
  auto pair = pair_of("tutte_coxeter");
  auto o = anatomy(pair, default_edge(pair));
  REQUIRE(o.result.status == Status::pass);
  auto const& a = *o.anatomy;
  CHECK(a.p == 2);
  CHECK(a.gx.order() == 48);
  CHECK(a.k.gx1.order() == 8);
  CHECK(a.k.gxy1.order() == 4);
  CHECK(all_pass(verify_local_lemmas(a)));
  auto ks = verify_kernel_structure(a);
  CHECK(ks.result.status == Status::pass);
  for (auto o6 : ks.factor_orders) CHECK(o6 == 6);
  for (auto c : ks.commutator_orders) CHECK(c == 4);
  auto ls = verify_local_sections(a);
  CHECK(ls.result.status == Status::pass);
}

TEST_CASE("both orientations of an edge agree", "[local]") {
  for (std::string name : {"heawood", "tutte_coxeter"}) {
    CAPTURE(name);
    auto pair = pair_of(name);
    Edge e = default_edge(pair);
    Edge rev{e.second, e.first};
    auto a = anatomy(pair, e), b = anatomy(pair, rev);
    REQUIRE(a.anatomy);
    REQUIRE(b.anatomy);
    CHECK(a.anatomy->p == b.anatomy->p);
    CHECK(a.anatomy->lx.order() == b.anatomy->lx.order());
    auto ka = verify_kernel_structure(*a.anatomy);
    auto kb = verify_kernel_structure(*b.anatomy);
    CHECK(ka.result.status == kb.result.status);
    CHECK(ka.factor_orders == kb.factor_orders);
    CHECK(ka.commutator_orders == kb.commutator_orders);
  }
}

TEST_CASE("vacuous and skipped cases never pass", "[local]") {
  for (std::string name : {"petersen", "k4", "k3_3", "f16"}) {
    CAPTURE(name);
    auto pair = pair_of(name);
    Edge e = default_edge(pair);
    CHECK(kernels(pair, e).gxy1.is_trivial());
    CHECK(anatomy(pair, e).result.status == Status::vacuous);
    for (auto const& r : verify_local_lemmas(pair, e)) CHECK(r.status == Status::vacuous);
    CHECK(verify_kernel_structure(pair, e).result.status == Status::vacuous);
    CHECK(verify_local_sections(pair, e).result.status == Status::vacuous);
  }
  auto k6 = pair_of("k6");
  auto o = anatomy(k6, default_edge(k6));
  CHECK(o.result.status == Status::skip);
  CHECK(o.result.detail.starts_with("hypothesis-not-met"));
}

TEST_CASE("stabiliser bound", "[local]") {
  auto f16 = verify_stabiliser_bound(pair_of("f16"));
  CHECK(f16.result.status == Status::pass);
  CHECK(f16.d == 5);
  CHECK(f16.bound == 2880);
  CHECK(f16.stabiliser_order == 20);
  CHECK(f16.kernel_order == 1);

  for (std::string name : {"heawood", "tutte_coxeter", "petersen", "k4", "k3_3"}) {
    CAPTURE(name);
    auto b = verify_stabiliser_bound(pair_of(name));
    CHECK(b.result.status == Status::skip);
  }
  // d = 5 but the hypothesis fails
  auto k6 = verify_stabiliser_bound(pair_of("k6"));
  CHECK(k6.result.status == Status::skip);
  CHECK(k6.result.detail.starts_with("hypothesis-not-met"));
}
