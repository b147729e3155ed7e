#include <catch_amalgamated.hpp>

#include "semiprim/error.hpp"
#include "semiprim/numbers.hpp"
#include "semiprim/structure.hpp"
#include "support.hpp"

using namespace semiprim;

namespace {

struct Named {
  char const* name;
  PermGroup group;
};

std::vector<Named> small_groups() {
  return {
      {"S3", symmetric_group(3)},
      {"S4", symmetric_group(4)},
      {"A4", alternating_group(4)},
      {"D4", d4_square()},
      {"Q8", q8_regular()},
      {"D5", dihedral_group(5)},
      {"C9", cyclic_group(9)},
      {"D6", dihedral_group(6)},
      {"C2xC2xC2", PermGroup(6, {cyc(6, {{0, 1}}), cyc(6, {{2, 3}}), cyc(6, {{4, 5}})})},
      {"C4xC2", PermGroup(6, {cyc(6, {{0, 1, 2, 3}}), cyc(6, {{4, 5}})})},
      {"S3xC3", PermGroup(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{0, 1}}), cyc(6, {{3, 4, 5}})})},
      {"AGL(1,7)", PermGroup(7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}),
                                 cyc(7, {{1, 3, 2, 6, 4, 5}})})},
      {"A5", alternating_group(5)},
  };
}

std::set<oracle::Elements> as_sets(std::vector<PermGroup> const& gs) {
  std::set<oracle::Elements> out;
  for (auto const& g : gs) out.insert(as_set(g));
  return out;
}

}  // namespace

TEST_CASE("normal closures", "[structure]") {
  auto s4 = symmetric_group(4);
  Perm const t[] = {cyc(4, {{0, 1}})};
  CHECK(normal_closure(s4, t).order() == 24);
  Perm const dbl[] = {cyc(4, {{0, 1}, {2, 3}})};
  CHECK(normal_closure(s4, dbl).order() == 4);
  auto c9 = cyclic_group(9);
  Perm const cube[] = {c9.generators()[0].pow(3)};
  CHECK(normal_closure(c9, cube).order() == 3);
}

TEST_CASE("normal lattice matches brute force", "[structure]") {
  for (auto const& [name, g] : small_groups()) {
    INFO(name);
    auto lattice = all_normal_subgroups(g);
    auto expected = oracle::normal_subgroups(g.degree(), as_set(g));
    CHECK(lattice.members.size() == expected.size());
    CHECK(as_sets(lattice.members) ==
          std::set<oracle::Elements>(expected.begin(), expected.end()));
    CHECK(lattice.members.front().is_trivial());
    CHECK(lattice.members.back().order() == g.order());
    for (std::size_t i = 1; i < lattice.members.size(); ++i) {
      CHECK(lattice.members[i - 1].order() <= lattice.members[i].order());
    }
  }
  CHECK(all_normal_subgroups(symmetric_group(4)).members.size() == 4);
  CHECK(all_normal_subgroups(symmetric_group(3)).members.size() == 3);
  CHECK(all_normal_subgroups(q8_regular()).members.size() == 6);
}

TEST_CASE("class count cap", "[structure]") {
  Caps caps;
  caps.classes = 4;
  CHECK_THROWS_AS(all_normal_subgroups(symmetric_group(5), caps), CapExceeded);
  CHECK(class_representatives(symmetric_group(5)).size() == 7);
}

TEST_CASE("centralizers, centers, normalizers", "[structure]") {
  CHECK(center(q8_regular()).order() == 2);
  auto s4 = symmetric_group(4);
  Perm const x[] = {cyc(4, {{0, 1}, {2, 3}})};
  CHECK(centralizer(s4, x).order() == 8);
  auto c9 = cyclic_group(9);
  CHECK(center(c9).order() == 9);
  for (auto const& [name, g] : small_groups()) {
    INFO(name);
    auto ge = as_set(g);
    CHECK(as_set(center(g)) == oracle::center(ge));
    auto s = sylow(g, prime_divisors(g.order()).back());
    CHECK(as_set(normalizer(g, s)) == oracle::normalizer(ge, as_set(s)));
  }
}

TEST_CASE("derived and central series", "[structure]") {
  auto s3 = symmetric_group(3);
  CHECK(derived_subgroup(s3).order() == 3);
  CHECK(is_soluble(s3));
  CHECK_FALSE(is_nilpotent(s3));
  CHECK(is_nilpotent(q8_regular()));
  CHECK_FALSE(is_soluble(alternating_group(5)));
  CHECK(derived_subgroup(alternating_group(5)).order() == 60);
  CHECK(derived_subgroup(q8_regular()).order() == 2);
  for (auto const& [name, g] : small_groups()) {
    INFO(name);
    CHECK(is_nilpotent(g) == oracle::is_nilpotent(g.degree(), as_set(g)));
    CHECK(is_soluble(g) == oracle::is_soluble(g.degree(), as_set(g)));
    CHECK(as_set(derived_subgroup(g)) ==
          oracle::commutator_subgroup(g.degree(), as_set(g), as_set(g)));
  }
}

TEST_CASE("Sylow subgroups", "[structure]") {
  auto s4 = symmetric_group(4);
  CHECK(sylow(s4, 2).order() == 8);
  CHECK(sylow(s4, 3).order() == 3);
  CHECK(sylow(s4, 5).is_trivial());
  for (auto const& [name, g] : small_groups()) {
    for (auto p : prime_divisors(g.order())) {
      auto s = sylow(g, p);
      CHECK(s.order() == p_part(g.order(), p));
      CHECK(s.is_subgroup_of(g));
      for (auto const& c : conjugates(g, s)) CHECK(c.order() == s.order());
    }
  }
  // deterministic: same input, same generators
  CHECK(sylow(s4, 2).generators() == sylow(s4, 2).generators());
}

TEST_CASE("O_p, O_p' and Fitting against brute force", "[structure]") {
  auto s4 = symmetric_group(4);
  CHECK(core_p(s4, 2).order() == 4);
  CHECK(core_p(s4, 3).is_trivial());
  CHECK(core_p_prime(q8_regular(), 2).is_trivial());
  CHECK(fitting(s4).order() == 4);
  CHECK(fitting(dihedral_group(5)).order() == 5);
  CHECK(fitting(q8_regular()).order() == 8);
  for (auto const& [name, g] : small_groups()) {
    INFO(name);
    auto ge = as_set(g);
    for (auto p : prime_divisors(g.order())) {
      CHECK(as_set(core_p(g, p)) ==
            oracle::largest_normal_p_subgroup(g.degree(), ge, p));
      CHECK(as_set(core_p_prime(g, p)) ==
            oracle::largest_normal_p_prime_subgroup(g.degree(), ge, p));
    }
    CHECK(as_set(fitting(g)) == oracle::largest_normal_nilpotent(g.degree(), ge));
  }
}

TEST_CASE("Frattini, Omega Z and Thompson subgroups of p-groups", "[structure]") {
  auto q8 = q8_regular();
  auto d4 = d4_square();
  CHECK(frattini_p(q8, 2).order() == 2);
  CHECK(frattini_p(cyclic_group(9), 3).order() == 3);
  PermGroup e8(6, {cyc(6, {{0, 1}}), cyc(6, {{2, 3}}), cyc(6, {{4, 5}})});
  CHECK(frattini_p(e8, 2).is_trivial());
  CHECK(omega_center(q8, 2).order() == 2);
  CHECK(omega_center(cyclic_group(9), 3).order() == 3);
  CHECK(omega_center(e8, 2).order() == 8);
  CHECK(thompson(e8, 2).order() == 8);
  CHECK(thompson(d4, 2).order() == 8);
  CHECK(max_elementary_abelian(d4, 2).size() == 2);
  CHECK(thompson(q8, 2).same_elements(center(q8)));
  CHECK_THROWS_AS(frattini_p(symmetric_group(3), 2), InvalidArgument);

  std::vector<std::pair<PermGroup, std::uint64_t>> pgroups{
      {q8, 2}, {d4, 2}, {e8, 2}, {cyclic_group(9), 3},
      {sylow(symmetric_group(6), 2), 2}, {sylow(symmetric_group(6), 3), 3},
      {PermGroup(6, {cyc(6, {{0, 1, 2, 3}}), cyc(6, {{4, 5}})}), 2}};
  for (auto const& [s, p] : pgroups) {
    INFO(s.order());
    auto se = as_set(s);
    CHECK(as_set(frattini_p(s, p)) == oracle::frattini(s.degree(), se));
    CHECK(as_set(omega_center(s, p)) == oracle::omega_center(se, p));
    CHECK(as_set(thompson(s, p)) == oracle::thompson(s.degree(), se, p));
    auto ours = max_elementary_abelian(s, p);
    auto theirs = oracle::max_elementary_abelian(s.degree(), se, p);
    CHECK(as_sets(ours) == std::set<oracle::Elements>(theirs.begin(), theirs.end()));
  }
}

TEST_CASE("Thompson subgroup is invariant under conjugation", "[structure]") {
  auto s6 = symmetric_group(6);
  auto s = sylow(s6, 2);
  auto j = thompson(s, 2);
  auto n = normalizer(s6, s);
  for (auto const& g : n.generators()) {
    CHECK(conjugate(j, g).same_elements(j));
  }
  auto jf = thompson_of_group(symmetric_group(4), 2);
  CHECK(jf.order() == 24);
}

TEST_CASE("p-separability", "[structure]") {
  auto s4 = p_separability(symmetric_group(4), 2);
  CHECK(s4.separable);
  REQUIRE(s4.series.size() == 4);
  CHECK(s4.series[1].order() == 4);
  CHECK(s4.series[2].order() == 12);
  CHECK(s4.series[3].order() == 24);
  CHECK_FALSE(p_separability(alternating_group(5), 2).separable);
  CHECK(p_separability(q8_regular(), 2).separable);
  CHECK(p_separability(symmetric_group(4), 3).separable);
}

TEST_CASE("Thompson factorizable", "[structure]") {
  // S4 = O_2'(S4) C(Omega Z(S)) N(J(S)) with S = D4: N_S4(J(D4)) = D4,
  // C_S4(Z(D4)) = D4, O_2' = 1, so not factorizable
  CHECK_FALSE(is_thompson_factorizable(symmetric_group(4), 2));
  // p-groups factorize trivially
  CHECK(is_thompson_factorizable(q8_regular(), 2));
  CHECK(is_thompson_factorizable(symmetric_group(3), 3));
}
