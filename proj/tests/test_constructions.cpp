#include <catch_amalgamated.hpp>

#include <sstream>

#include "oracle/graph_iso.hpp"
#include "semiprim/constructions.hpp"
#include "semiprim/error.hpp"
#include "semiprim/field.hpp"
#include "semiprim/fixtures.hpp"
#include "semiprim/graph.hpp"
#include "support.hpp"

using namespace semiprim;

namespace {

std::uint64_t exponent(PermGroup const& g) {
  std::uint64_t e = 1;
  for (auto const& x : g.elements()) e = std::lcm(e, x.order());
  return e;
}

std::size_t involutions(PermGroup const& g) {
  std::size_t n = 0;
  for (auto const& x : g.elements()) n += x.order() == 2;
  return n;
}

/// Arc-orbit size from the arc (0, first neighbour).
std::size_t arc_orbit(Fixture const& f) {
  Point const x = 0, y = f.graph.neighbours(0)[0];
  std::set<std::pair<Point, Point>> seen{{x, y}};
  std::vector<std::pair<Point, Point>> queue{{x, y}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const& s : f.group.generators()) {
      std::pair<Point, Point> next{s[queue[i].first], s[queue[i].second]};
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

Caps roomy() {
  Caps c = default_caps();
  c.classes = 400;
  return c;
}

}  // namespace

TEST_CASE("small fields", "[constructions]") {
  for (auto [q, a] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 4u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    SmallField f(q, a);
    INFO(q << "^" << a);
    REQUIRE(f.size() == static_cast<std::uint32_t>(std::pow(q, a)));
    std::set<SmallField::Elem> powers;
    for (std::uint32_t k = 0; k + 1 < f.size(); ++k) powers.insert(f.primitive_power(k));
    CHECK(powers.size() == f.size() - 1);
    for (SmallField::Elem x = 0; x < f.size(); ++x) {
      CHECK(f.add(x, f.neg(x)) == 0);
      if (x) CHECK(f.mul(x, f.inv(x)) == 1);
      for (SmallField::Elem y = 0; y < f.size(); ++y) {
        for (SmallField::Elem z = 0; z < f.size(); z += 3) {
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
  }
  // F16 from t^4 + t + 1: t^4 = t + 1
  SmallField f16(2, 4);
  CHECK(f16.primitive_power(4) == 3);
  CHECK_THROWS_AS(SmallField(4, 1), InvalidArgument);
}

TEST_CASE("extraspecial groups", "[constructions]") {
  PermGroup e27 = extraspecial_group(3, true);
  CHECK(e27.order() == 27);
  CHECK(exponent(e27) == 3);
  CHECK(center(e27).order() == 3);
  CHECK(derived_subgroup(e27).same_elements(center(e27)));
  CHECK(is_regular(e27));

  PermGroup q8 = extraspecial_group(2, false);
  CHECK(q8.order() == 8);
  CHECK(involutions(q8) == 1);
  CHECK(center(q8).order() == 2);
  CHECK(derived_subgroup(q8).same_elements(center(q8)));

  PermGroup d8 = extraspecial_group(2, true);
  CHECK(d8.order() == 8);
  CHECK(involutions(d8) == 5);

  PermGroup e125 = extraspecial_group(5, true);
  CHECK(e125.order() == 125);
  CHECK(exponent(e125) == 5);
  CHECK(omega_center(e125, 5).same_elements(center(e125)));
  CHECK(center(e125).order() == 5);

  CHECK_THROWS_AS(extraspecial_group(3, false), InvalidArgument);
  CHECK_THROWS_AS(extraspecial_group(7, true), CapExceeded);
  CHECK_THROWS_AS(extraspecial_group(3, true, 2), CapExceeded);
  CHECK_THROWS_AS(extraspecial_group(4, true), InvalidArgument);
}

TEST_CASE("generic semidirect products", "[constructions]") {
  PermGroup c5 = cyclic_group(5);
  auto d5 = semidirect("d5", c5, {{c5.generators()[0].inverse()}});
  CHECK(d5.group().degree() == 5);
  CHECK(d5.group().order() == 10);

  PermGroup v4(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  Perm a = v4.generators()[0], b = v4.generators()[1];
  auto s4 = semidirect("agl(2,2)", v4, {{b, a * b}, {b, a}});
  CHECK(s4.group().degree() == 4);
  CHECK(s4.group().same_elements(symmetric_group(4)));

  auto ex = family_extraspecial(3);
  CHECK(ex.group().degree() == 27);
  CHECK(ex.group().order() == 648);
}

TEST_CASE("inversion family", "[constructions]") {
  auto d5 = family_inversion(5, {5});
  CHECK(d5.group().order() == 10);
  CHECK(d5.group().same_elements(dihedral_group(5)));
  CHECK(is_semiprimitive_criterion(d5.spec).semiprimitive);

  for (auto shape : {std::vector<std::uint64_t>{3}, {9}, {3, 3}, {9, 3}, {27}}) {
    auto r = family_inversion(3, shape);
    INFO(r.name);
    CHECK(r.group().order() == r.expected_order);
    auto const& k = r.spec.k();
    PermGroup phi = frattini_p(k, 3);
    // H normalises the Frattini subgroup and inverts P / Phi(P)
    for (auto const& h : r.spec.h().generators()) {
      for (auto const& x : phi.generators()) CHECK(phi.contains(r.spec.apply(h, x)));
      for (auto const& x : k.generators()) CHECK(phi.contains(r.spec.apply(h, x) * x));
    }
    CHECK(is_semiprimitive_criterion(r.spec).semiprimitive);
    CHECK(is_semiprimitive_definition(r.group()).semiprimitive);
  }
  CHECK(parse_p_shape("c9xc3") == std::vector<std::uint64_t>{9, 3});
  CHECK_THROWS_AS(parse_p_shape("c9x"), ParseError);
  CHECK_THROWS_AS(parse_p_shape("9"), ParseError);
  CHECK_THROWS_AS(family_inversion(2, {2}), InvalidArgument);
  CHECK_THROWS_AS(family_inversion(3, {6}), InvalidArgument);
  CHECK_THROWS_AS(family_inversion(3, {81, 81, 81}), CapExceeded);
}

TEST_CASE("vector family", "[constructions]") {
  struct Case {
    std::uint32_t q, a, n, m;
    std::uint64_t order;
  };
  for (auto c : {Case{2, 1, 1, 1, 2}, Case{2, 1, 2, 1, 24}, Case{2, 2, 1, 1, 12},
                 Case{3, 1, 1, 2, 18}, Case{3, 2, 1, 1, 72}, Case{2, 1, 2, 2, 96},
                 Case{3, 1, 2, 1, 432}, Case{2, 1, 3, 1, 1344}}) {
    auto r = family_vector(c.q, c.a, c.n, c.m);
    INFO(r.name);
    CHECK(r.group().order() == c.order);
    CHECK(r.group().degree() == r.spec.k().order());
    CHECK(is_abelian(r.spec.k()));
    CHECK(is_semiprimitive_criterion(r.spec).semiprimitive);
  }
  CHECK(family_vector(2, 1, 2, 1).group().same_elements(symmetric_group(4)));
  CHECK(family_vector(2, 2, 1, 1).group().same_elements(alternating_group(4)));
  CHECK_THROWS_AS(family_vector(4, 1, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(family_vector(2, 1, 17, 1), CapExceeded);
}

TEST_CASE("extraspecial family", "[constructions]") {
  auto r = family_extraspecial(3);
  CHECK(r.group().order() == 27 * 24);
  auto const& e = r.spec.k();
  PermGroup z = center(e);
  // irreducible on E / Z(E): no H-invariant normal subgroup strictly between
  std::size_t between = 0;
  for (auto const& n : all_normal_subgroups(e).members) {
    if (!z.is_subgroup_of(n) || n.order() == z.order() || n.order() == e.order()) continue;
    bool invariant = true;
    for (auto const& h : r.spec.h().generators())
      for (auto const& x : n.generators()) invariant = invariant && n.contains(r.spec.apply(h, x));
    between += invariant;
  }
  CHECK(between == 0);
  // H fixes Z(E) pointwise
  for (auto const& h : r.spec.h().generators())
    for (auto const& x : z.generators()) CHECK(r.spec.apply(h, x) == x);
  CHECK(is_semiprimitive_criterion(r.spec).semiprimitive);
  CHECK(is_semiprimitive_definition(r.group()).semiprimitive);
  CHECK_THROWS_AS(family_extraspecial(2), InvalidArgument);
}

TEST_CASE("c3 family", "[constructions]") {
  auto q8 = family_c3({2});
  CHECK(q8.group().order() == 24);
  CHECK(q8.group().degree() == 8);
  CHECK(is_semiprimitive_criterion(q8.spec).semiprimitive);
  auto r5 = family_c3({5});
  CHECK(r5.group().order() == 375);
  CHECK(is_semiprimitive_criterion(r5.spec).semiprimitive);
  auto both = family_c3({2, 5}, roomy());
  CHECK(both.group().degree() == 1000);
  CHECK(both.group().order() == 3000);
  CHECK(is_nilpotent(both.spec.k()));
  CHECK_THROWS_AS(family_c3({7}), InvalidArgument);
  CHECK_THROWS_AS(family_c3({5, 2}), InvalidArgument);
  CHECK_THROWS_AS(family_c3({11}), CapExceeded);
}

TEST_CASE("graphs and edge lists", "[constructions]") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(g.valency() == 2);
  CHECK(g.girth() == 4);
  CHECK(g.is_connected());
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == g);
  std::istringstream isolated("# vertices 5\n0 1\n");
  CHECK(read_edge_list(isolated).vertex_count() == 5);
  std::istringstream bad("0 1\n1 x\n");
  CHECK_THROWS_AS(read_edge_list(bad), ParseError);
  std::istringstream loop("0 0\n");
  CHECK_THROWS_AS(read_edge_list(loop), ParseError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("named fixtures", "[constructions]") {
  struct Expect {
    char const* name;
    std::size_t vertices, valency;
    std::uint64_t order;
  };
  for (auto e : {Expect{"heawood", 14, 3, 336}, Expect{"tutte_coxeter", 30, 3, 1440},
                 Expect{"petersen", 10, 3, 120}, Expect{"f16", 16, 5, 320},
                 Expect{"k4", 4, 3, 24}, Expect{"k3_3", 6, 3, 72}}) {
    Fixture f = fixture_by_name(e.name);
    INFO(e.name);
    CHECK(f.graph.vertex_count() == e.vertices);
    CHECK(f.graph.valency() == e.valency);
    CHECK(f.group.order() == e.order);
    CHECK(f.graph.preserved_by(f.group));
    CHECK(f.graph.is_connected());
    CHECK(arc_orbit(f) == 2 * f.graph.edge_count());
  }
  CHECK(heawood().graph.girth() == 6);
  CHECK(tutte_coxeter().graph.girth() == 8);
  CHECK(petersen().graph.girth() == 5);
  CHECK_THROWS_AS(fixture_by_name("k3_4"), InvalidArgument);
  CHECK_THROWS_AS(fixture_by_name("nope"), InvalidArgument);
}

TEST_CASE("coset graphs", "[constructions]") {
  Fixture hw = heawood();
  PermGroup h = hw.group.stabilizer(0);
  REQUIRE(h.order() == 24);
  std::optional<Perm> a;
  for (auto const& x : hw.group.elements()) {
    if (x[0] == hw.graph.neighbours(0)[0] && x[x[0]] == 0) {
      a = x;
      break;
    }
  }
  REQUIRE(a);
  auto cg = coset_graph(hw.group, h, *a);
  CHECK(cg.graph.vertex_count() == 14);
  CHECK(cg.graph.edge_count() == 21);
  CHECK(cg.graph.girth() == 6);
  CHECK(cg.graph.preserved_by(cg.action.image()));
  CHECK(oracle::isomorphic(cg.graph, hw.graph));

  PermGroup s4 = symmetric_group(4);
  auto k4 = coset_graph(s4, s4.stabilizer(3), cyc(4, {{0, 3}}));
  CHECK(oracle::isomorphic(k4.graph, complete(4).graph));

  PermGroup s5 = symmetric_group(5);
  PermGroup s3(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1}})});
  CHECK_THROWS_AS(coset_graph(s5, s3, cyc(5, {{0, 3}})), InvalidArgument);
  CHECK_THROWS_AS(coset_graph(s4, s4.stabilizer(3), cyc(4, {{0, 1, 3}})),
                  InvalidArgument);
}
