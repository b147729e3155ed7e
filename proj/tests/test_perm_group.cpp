#include <catch_amalgamated.hpp>

#include <set>

#include "oracle/brute.hpp"
#include "semiprim/error.hpp"
#include "semiprim/perm_group.hpp"

using namespace semiprim;

namespace {

struct Sample {
  char const* name;
  std::size_t degree;
  std::vector<Perm> gens;
};

std::vector<Sample> samples() {
  return {
      {"trivial", 4, {}},
      {"S3", 3, {Perm::from_cycles(3, {{0, 1, 2}}), Perm::from_cycles(3, {{0, 1}})}},
      {"S5", 5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1}})}},
      {"A6", 6, {Perm::from_cycles(6, {{0, 1, 2}}), Perm::from_cycles(6, {{1, 2, 3, 4, 5}})}},
      {"D4 on 8", 8,
       {Perm::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
        Perm::from_cycles(8, {{0, 3}, {1, 2}, {4, 7}, {5, 6}})}},
      {"C2^3 intransitive", 6,
       {Perm::from_cycles(6, {{0, 1}}), Perm::from_cycles(6, {{2, 3}}),
        Perm::from_cycles(6, {{4, 5}})}},
      {"Q8 regular", 8,
       // i and j in the right regular representation of Q8
       {Perm({2, 3, 1, 0, 6, 7, 5, 4}), Perm({4, 5, 7, 6, 1, 0, 2, 3})}},
      {"AGL(1,7)", 7,
       {Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
        Perm::from_cycles(7, {{1, 3, 2, 6, 4, 5}})}},
  };
}

}  // namespace

TEST_CASE("orders and membership agree with brute-force closure",
          "[perm_group]") {
  for (auto const& s : samples()) {
    INFO(s.name);
    PermGroup g(s.degree, s.gens);
    auto elems = oracle::closure(s.degree, s.gens);
    CHECK(g.order() == elems.size());
    for (auto const& x : elems) CHECK(g.contains(x));
    // a few non-members from the full symmetric group
    if (s.degree <= 6) {
      auto all = oracle::closure(
          s.degree, symmetric_group(s.degree).generators());
      for (auto const& x : all) CHECK(g.contains(x) == elems.contains(x));
    }
  }
}

TEST_CASE("rank and element_at are inverse bijections", "[perm_group]") {
  for (auto const& s : samples()) {
    INFO(s.name);
    PermGroup g(s.degree, s.gens);
    std::set<Perm> seen;
    for (std::uint64_t r = 0; r < g.order(); ++r) {
      Perm x = g.element_at(r);
      CHECK(g.rank(x) == r);
      seen.insert(x);
    }
    CHECK(seen.size() == g.order());
    CHECK(g.rank(g.identity()) == 0);
  }
}

TEST_CASE("streamed enumeration visits ranks in order", "[perm_group]") {
  PermGroup g(6, {Perm::from_cycles(6, {{0, 1, 2}}),
                  Perm::from_cycles(6, {{1, 2, 3, 4, 5}})});
  std::uint64_t expected = 0;
  g.for_each_element([&](Perm const& x, std::uint64_t r) {
    CHECK(r == expected);
    CHECK(x == g.element_at(r));
    ++expected;
  });
  CHECK(expected == 360);

  std::uint64_t count = 0;
  for (auto const& x : elements_streamed(g)) {
    CHECK(g.rank(x) == count);
    ++count;
  }
  CHECK(count == 360);

  std::vector<std::uint64_t> ranks;
  g.for_each_in_range(100, 105, [&](Perm const&, std::uint64_t r) {
    ranks.push_back(r);
  });
  CHECK(ranks == std::vector<std::uint64_t>{100, 101, 102, 103, 104});
}

TEST_CASE("stream cap is enforced", "[perm_group]") {
  Caps caps;
  caps.stream = 100;
  auto g = symmetric_group(5);
  CHECK_THROWS_AS(g.for_each_element([](Perm const&, std::uint64_t) {}, caps),
                  CapExceeded);
  caps.stored = 10;
  CHECK_THROWS_AS(g.elements(caps), CapExceeded);
}

TEST_CASE("base prefix is respected", "[perm_group]") {
  auto s6 = symmetric_group(6);
  Point const prefix[] = {4, 2};
  PermGroup g(6, s6.generators(), prefix);
  CHECK(g.order() == 720);
  REQUIRE(g.chain_length() >= 2);
  CHECK(g.level(0).base == 4);
  CHECK(g.level(1).base == 2);
}

TEST_CASE("stabilisers", "[perm_group]") {
  auto s5 = symmetric_group(5);
  CHECK(s5.stabilizer(3).order() == 24);
  Point const pts[] = {0, 4};
  auto pw = s5.pointwise_stabilizer(pts);
  CHECK(pw.order() == 6);
  for (auto const& x : pw.generators()) {
    CHECK(x[0] == 0);
    CHECK(x[4] == 4);
  }
  auto sw = setwise_stabilizer(s5, pts);
  CHECK(sw.order() == 12);
  CHECK(sw.contains(Perm::from_cycles(5, {{0, 4}})));

  Point const three[] = {0, 1, 2};
  CHECK(setwise_stabilizer(s5, three).order() == 12);

  // a group that cannot swap the two points
  auto c5 = cyclic_group(5);
  Point const pair[] = {0, 1};
  CHECK(setwise_stabilizer(c5, pair).order() == 1);
  auto d5 = dihedral_group(5);
  CHECK(setwise_stabilizer(d5, pair).order() == 2);
}

TEST_CASE("orbits", "[perm_group]") {
  PermGroup g(7, {Perm::from_cycles(7, {{0, 2}}), Perm::from_cycles(7, {{3, 4, 6}})});
  auto orbs = g.orbits();
  REQUIRE(orbs.size() == 4);
  CHECK(orbs[0] == std::vector<Point>{0, 2});
  CHECK(orbs[1] == std::vector<Point>{1});
  CHECK(orbs[2] == std::vector<Point>{3, 4, 6});
  CHECK(orbs[3] == std::vector<Point>{5});
  CHECK_FALSE(g.is_transitive());
  CHECK(symmetric_group(4).is_transitive());
}

TEST_CASE("standard groups", "[perm_group]") {
  CHECK(symmetric_group(7).order() == 5040);
  CHECK(alternating_group(7).order() == 2520);
  CHECK(cyclic_group(9).order() == 9);
  CHECK(dihedral_group(6).order() == 12);
  CHECK(symmetric_group(12).order() == 479001600);
  CHECK(alternating_group(1).order() == 1);
}

TEST_CASE("join and subgroup tests", "[perm_group]") {
  auto a4 = alternating_group(4);
  PermGroup t(4, {Perm::from_cycles(4, {{0, 1}})});
  auto s4 = join(a4, t);
  CHECK(s4.order() == 24);
  CHECK(a4.is_subgroup_of(s4));
  CHECK_FALSE(s4.is_subgroup_of(a4));
  CHECK(s4.same_elements(symmetric_group(4)));
  CHECK_THROWS_AS(PermGroup(4, {Perm(5)}), InvalidArgument);
}

TEST_CASE("large degree chain", "[perm_group]") {
  // S4 wr S3 in product-free imprimitive action on 12 points
  std::vector<Perm> gens{
      Perm::from_cycles(12, {{0, 1, 2, 3}}), Perm::from_cycles(12, {{0, 1}}),
      Perm::from_cycles(12, {{0, 4, 8}, {1, 5, 9}, {2, 6, 10}, {3, 7, 11}}),
      Perm::from_cycles(12, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})};
  PermGroup g(12, gens);
  CHECK(g.order() == 24ull * 24 * 24 * 6);
}
