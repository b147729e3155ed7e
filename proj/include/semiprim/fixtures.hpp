#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semiprim/graph.hpp"
#include "semiprim/perm_group.hpp"

namespace semiprim {

/// A graph together with a group of automorphisms. For the named graphs
/// the group is the full automorphism group, shipped as generator data;
/// for the Cayley graph it is the group described at cayley_f16_quintic().
struct Fixture {
  std::string name;
  Graph graph;
  PermGroup group;
};

Fixture heawood();
Fixture tutte_coxeter();
Fixture petersen();
/// K_n with Sym(n).
Fixture complete(std::size_t n);
/// K_{n,n} with Sym(n) wr Sym(2).
Fixture complete_bipartite(std::size_t n);
/// Cayley graph of (F_16, +) with connection set the multiplicative
/// subgroup of order 5, and the order-320 group generated by translations,
/// multiplication by that subgroup and the Frobenius map.
Fixture cayley_f16_quintic();

/// Names accepted by fixture_by_name for the graph corpus, in suite order.
std::vector<std::string> fixture_names();
/// "heawood", "tutte_coxeter", "petersen", "f16" (or "cayley_f16_quintic"),
/// "k<n>" and "k<n>_<n>". Throws InvalidArgument for unknown names.
Fixture fixture_by_name(std::string_view name);

}  // namespace semiprim
