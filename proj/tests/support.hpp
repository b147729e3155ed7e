#pragma once

#include "oracle/brute.hpp"
#include "semiprim/perm_group.hpp"

inline oracle::Elements as_set(semiprim::PermGroup const& g) {
  oracle::Elements out;
  g.for_each_element(
      [&](semiprim::Perm const& x, std::uint64_t) { out.insert(x); });
  return out;
}

inline semiprim::Perm cyc(std::size_t n,
                          std::vector<std::vector<semiprim::Point>> const& c) {
  return semiprim::Perm::from_cycles(n, c);
}

/// Q8 in its right regular representation on 8 points.
inline semiprim::PermGroup q8_regular() {
  return semiprim::PermGroup(
      8, {semiprim::Perm({2, 3, 1, 0, 6, 7, 5, 4}),
          semiprim::Perm({4, 5, 7, 6, 1, 0, 2, 3})});
}

/// Dihedral group of order 8 on the corners of a square.
inline semiprim::PermGroup d4_square() {
  return semiprim::PermGroup(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})});
}
