#include "semiprim/corpus.hpp"

#include <functional>
#include <utility>

namespace semiprim {

namespace {

Perm cycles(std::size_t n, std::vector<std::vector<Point>> const& c) {
  return Perm::from_cycles(n, c);
}

PermGroup agl_1_5() {
  return PermGroup(5, {cycles(5, {{0, 1, 2, 3, 4}}), Perm({0, 2, 4, 1, 3})});
}

PermGroup square() {
  return PermGroup(4, {cycles(4, {{0, 1, 2, 3}}), cycles(4, {{0, 2}})});
}

struct Entry {
  std::string name;
  bool semiprimitive;
  std::function<GroupRecipe(Caps const&)> build;
};

/// K = C_n as a regular group with one automorphism x -> x^e.
GroupRecipe cyclic_power(std::string name, std::size_t n, std::uint64_t e,
                         Caps const& caps) {
  PermGroup k = cyclic_group(n);
  Perm const x = k.generators()[0];
  Perm img(n);
  for (std::uint64_t i = 0; i < e; ++i) img = img * x;
  return semidirect(std::move(name), k, {{img}}, caps);
}

std::vector<Entry> const& entries() {
  static std::vector<Entry> const list = [] {
    std::vector<Entry> out;
    auto inversion = [&](std::uint32_t q, std::string shape) {
      out.push_back({"inversion_q" + std::to_string(q) + "_" + shape, true,
                     [q, shape](Caps const& c) {
                       return family_inversion(q, parse_p_shape(shape), c);
                     }});
    };
    inversion(3, "c3");
    inversion(5, "c5");
    inversion(7, "c7");
    inversion(3, "c9");
    inversion(5, "c25");
    inversion(3, "c27");
    inversion(3, "c3xc3");
    inversion(3, "c9xc3");
    inversion(5, "c5xc5");
    struct V {
      std::uint32_t q, a, n, m;
    };
    for (V v : {V{2, 1, 1, 1}, V{2, 1, 2, 1}, V{2, 2, 1, 1}, V{3, 1, 1, 2},
                V{3, 2, 1, 1}, V{2, 1, 2, 2}, V{3, 1, 2, 1}, V{2, 1, 3, 1},
                V{5, 1, 1, 2}, V{2, 3, 1, 1}}) {
      std::string name = "vector_q" + std::to_string(v.q) + "_a" +
                         std::to_string(v.a) + "_n" + std::to_string(v.n) +
                         "_m" + std::to_string(v.m);
      out.push_back({name, true, [v](Caps const& c) {
                       return family_vector(v.q, v.a, v.n, v.m, c);
                     }});
    }
    out.push_back({"extraspecial_q3", true,
                   [](Caps const& c) { return family_extraspecial(3, 1, c); }});
    out.push_back({"c3_2", true, [](Caps const& c) { return family_c3({2}, c); }});
    out.push_back({"c3_5", true, [](Caps const& c) { return family_c3({5}, c); }});
    out.push_back(
        {"c3_2_5", true, [](Caps const& c) { return family_c3({2, 5}, c); }});
    // negatives
    out.push_back({"c4_inversion", false, [](Caps const& c) {
                     return cyclic_power("c4_inversion", 4, 3, c);
                   }});
    out.push_back({"c9_power4", false, [](Caps const& c) {
                     return cyclic_power("c9_power4", 9, 4, c);
                   }});
    out.push_back({"c8_power5", false, [](Caps const& c) {
                     return cyclic_power("c8_power5", 8, 5, c);
                   }});
    out.push_back({"v4_swap", false, [](Caps const& c) {
                     PermGroup v4(4, {cycles(4, {{0, 1}, {2, 3}}),
                                      cycles(4, {{0, 2}, {1, 3}})});
                     auto const& g = v4.generators();
                     return semidirect("v4_swap", v4, {{g[1], g[0]}}, c);
                   }});
    out.push_back({"c3xc3_diagonal", false, [](Caps const& c) {
                     PermGroup k(6, {cycles(6, {{0, 1, 2}}), cycles(6, {{3, 4, 5}})});
                     auto const& g = k.generators();
                     return semidirect("c3xc3_diagonal", k, {{g[0], g[1].inverse()}}, c);
                   }});
    return out;
  }();
  return list;
}

}  // namespace

std::vector<NamedGroup> small_groups() {
  return {
      {"c4", cyclic_group(4)},
      {"s3", symmetric_group(3)},
      {"d4", square()},
      {"q8", extraspecial_group(2, false)},
      {"a4", alternating_group(4)},
      {"d5", dihedral_group(5)},
      {"d6", dihedral_group(6)},
      {"agl_1_5", agl_1_5()},
      {"s4", symmetric_group(4)},
      {"a5", alternating_group(5)},
      {"s5", symmetric_group(5)},
      {"c3_wr_c2",
       PermGroup(6, {cycles(6, {{0, 1, 2}}), cycles(6, {{0, 3}, {1, 4}, {2, 5}})})},
  };
}

std::vector<std::string> semidirect_names() {
  std::vector<std::string> out;
  for (auto const& e : entries()) out.push_back(e.name);
  return out;
}

std::optional<SemidirectCase> semidirect_case(std::string const& name,
                                              Caps const& caps) {
  for (auto const& e : entries()) {
    if (e.name != name) continue;
    GroupRecipe r = e.build(caps);
    r.name = e.name;
    return SemidirectCase{std::move(r), e.semiprimitive};
  }
  return std::nullopt;
}

std::vector<SemidirectCase> semidirect_corpus(Caps const& caps) {
  std::vector<SemidirectCase> out;
  for (auto const& e : entries()) {
    GroupRecipe r = e.build(caps);
    r.name = e.name;
    out.push_back({std::move(r), e.semiprimitive});
  }
  return out;
}

Caps suite_caps() {
  Caps c = default_caps();
  if (c.classes < 400) c.classes = 400;
  return c;
}

}  // namespace semiprim
