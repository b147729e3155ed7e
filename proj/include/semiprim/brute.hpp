#pragma once

// Brute-force group computations on explicit element sets. Nothing here
// touches a stabiliser chain, so the results serve as an independent
// reference for the chain-based code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "semiprim/perm.hpp"

namespace semiprim::brute {

using Elements = std::set<Perm>;

inline Elements closure(std::size_t degree, std::vector<Perm> const& gens) {
  Elements out{Perm(degree)};
  std::vector<Perm> todo{Perm(degree)};
  while (!todo.empty()) {
    Perm g = todo.back();
    todo.pop_back();
    for (auto const& s : gens) {
      Perm h = g * s;
      if (out.insert(h).second) todo.push_back(h);
    }
  }
  return out;
}

inline Elements closure(std::size_t degree, Elements const& gens) {
  return closure(degree, std::vector<Perm>(gens.begin(), gens.end()));
}

inline bool is_normal(Elements const& n, Elements const& g) {
  for (auto const& x : g) {
    for (auto const& y : n) {
      if (!n.contains(y.conjugate(x))) return false;
    }
  }
  return true;
}

inline Elements centralizer(Elements const& g, Elements const& s) {
  Elements out;
  for (auto const& x : g) {
    bool ok = std::all_of(s.begin(), s.end(),
                          [&](Perm const& y) { return x * y == y * x; });
    if (ok) out.insert(x);
  }
  return out;
}

inline Elements normalizer(Elements const& g, Elements const& h) {
  Elements out;
  for (auto const& x : g) {
    bool ok = std::all_of(h.begin(), h.end(), [&](Perm const& y) {
      return h.contains(y.conjugate(x));
    });
    if (ok) out.insert(x);
  }
  return out;
}

inline Elements intersect(Elements const& a, Elements const& b) {
  Elements out;
  for (auto const& x : a) {
    if (b.contains(x)) out.insert(x);
  }
  return out;
}

inline Elements commutator_subgroup(std::size_t degree, Elements const& a,
                                    Elements const& b) {
  Elements gens;
  for (auto const& x : a) {
    for (auto const& y : b) gens.insert(semiprim::commutator(x, y));
  }
  return closure(degree, gens);
}

inline Elements normal_closure(std::size_t degree, Elements const& g,
                               Elements const& s) {
  Elements gens;
  for (auto const& x : g) {
    for (auto const& y : s) gens.insert(y.conjugate(x));
  }
  return closure(degree, gens);
}

/// All normal subgroups, by closing conjugacy classes and joining.
inline std::vector<Elements> normal_subgroups(std::size_t degree,
                                              Elements const& g) {
  std::set<Elements> found;
  std::vector<Elements> principal;
  for (auto const& x : g) {
    Elements n = normal_closure(degree, g, {x});
    if (found.insert(n).second) principal.push_back(n);
  }
  std::vector<Elements> all(found.begin(), found.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto const& p : principal) {
      Elements gens = all[i];
      gens.insert(p.begin(), p.end());
      Elements j = closure(degree, gens);
      if (found.insert(j).second) all.push_back(j);
    }
  }
  std::sort(all.begin(), all.end(), [](Elements const& a, Elements const& b) {
    return a.size() < b.size();
  });
  return all;
}

inline std::uint64_t element_order(Perm const& g) {
  Perm id(g.degree());
  Perm x = g;
  std::uint64_t k = 1;
  while (x != id) {
    x *= g;
    ++k;
  }
  return k;
}

inline bool is_prime_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline Elements center(Elements const& g) { return centralizer(g, g); }

/// Nilpotent iff the upper central series reaches the whole group.
inline bool is_nilpotent(std::size_t degree, Elements const& g) {
  // A finite group is nilpotent iff elements of coprime prime-power order
  // commute; equivalently each Sylow is normal. Count p-elements instead.
  std::uint64_t n = g.size();
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (!prime) continue;
    std::uint64_t count = 0;
    for (auto const& x : g) {
      if (is_prime_power(element_order(x), p)) ++count;
    }
    if (count != p_part(n, p)) return false;
  }
  (void)degree;
  return true;
}

inline bool is_soluble(std::size_t degree, Elements g) {
  while (g.size() > 1) {
    Elements d = commutator_subgroup(degree, g, g);
    if (d.size() == g.size()) return false;
    g = std::move(d);
  }
  return true;
}

inline std::vector<std::size_t> orbit_lengths(std::size_t degree,
                                              Elements const& g) {
  std::vector<std::size_t> out;
  std::vector<bool> seen(degree, false);
  for (Point x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    std::set<Point> orb;
    for (auto const& h : g) orb.insert(h[x]);
    for (Point y : orb) seen[y] = true;
    out.push_back(orb.size());
  }
  return out;
}

inline bool is_transitive(std::size_t degree, Elements const& g) {
  return degree == 0 || orbit_lengths(degree, g).size() == 1;
}

inline bool is_semiregular(std::size_t degree, Elements const& g) {
  for (auto const& x : g) {
    if (x.is_identity()) continue;
    for (Point p = 0; p < degree; ++p) {
      if (x[p] == p) return false;
    }
  }
  return true;
}

/// Every normal subgroup transitive or semiregular.
inline bool is_semiprimitive(std::size_t degree, Elements const& g) {
  for (auto const& n : normal_subgroups(degree, g)) {
    if (!is_transitive(degree, n) && !is_semiregular(degree, n)) return false;
  }
  return true;
}

/// Every subgroup, by closing the cyclic subgroups under pairwise joins.
/// Only sensible for small groups.
inline std::vector<Elements> all_subgroups(std::size_t degree,
                                           Elements const& g) {
  std::set<Elements> found;
  std::vector<Elements> cyclic;
  for (auto const& x : g) {
    Elements c = closure(degree, std::vector<Perm>{x});
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::vector<Elements> all(found.begin(), found.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto const& c : cyclic) {
      if (std::includes(all[i].begin(), all[i].end(), c.begin(), c.end())) {
        continue;
      }
      Elements gens = all[i];
      gens.insert(c.begin(), c.end());
      Elements j = closure(degree, gens);
      if (found.insert(j).second) all.push_back(j);
    }
  }
  std::sort(all.begin(), all.end(), [](Elements const& a, Elements const& b) {
    return a.size() < b.size();
  });
  return all;
}

inline bool subset(Elements const& a, Elements const& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Largest normal subgroup whose order is a power of p (p a prime).
inline Elements largest_normal_p_subgroup(std::size_t degree,
                                          Elements const& g, std::uint64_t p) {
  Elements best{Perm(degree)};
  for (auto const& h : all_subgroups(degree, g)) {
    if (is_prime_power(h.size(), p) && is_normal(h, g) && h.size() > best.size()) {
      best = h;
    }
  }
  return best;
}

inline Elements largest_normal_p_prime_subgroup(std::size_t degree,
                                                Elements const& g,
                                                std::uint64_t p) {
  Elements best{Perm(degree)};
  for (auto const& h : all_subgroups(degree, g)) {
    if (h.size() % p != 0 && is_normal(h, g) && h.size() > best.size()) {
      best = h;
    }
  }
  return best;
}

inline Elements largest_normal_nilpotent(std::size_t degree,
                                         Elements const& g) {
  Elements best{Perm(degree)};
  for (auto const& h : all_subgroups(degree, g)) {
    if (h.size() > best.size() && is_normal(h, g) && is_nilpotent(degree, h)) {
      best = h;
    }
  }
  return best;
}

/// Intersection of the maximal subgroups.
inline Elements frattini(std::size_t degree, Elements const& g) {
  auto subs = all_subgroups(degree, g);
  Elements out = g;
  for (auto const& h : subs) {
    if (h.size() == g.size()) continue;
    bool maximal = true;
    for (auto const& k : subs) {
      if (k.size() > h.size() && k.size() < g.size() && subset(h, k)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out = intersect(out, h);
  }
  return out;
}

inline bool is_elementary_abelian(Elements const& h, std::uint64_t p) {
  for (auto const& x : h) {
    if (!x.pow(static_cast<std::int64_t>(p)).is_identity()) return false;
    for (auto const& y : h) {
      if (x * y != y * x) return false;
    }
  }
  return true;
}

/// Elementary abelian subgroups of maximal order.
inline std::vector<Elements> max_elementary_abelian(std::size_t degree,
                                                    Elements const& s,
                                                    std::uint64_t p) {
  std::vector<Elements> out;
  std::size_t best = 0;
  for (auto const& h : all_subgroups(degree, s)) {
    if (!is_elementary_abelian(h, p)) continue;
    if (h.size() > best) {
      best = h.size();
      out.clear();
    }
    if (h.size() == best) out.push_back(h);
  }
  return out;
}

inline Elements thompson(std::size_t degree, Elements const& s,
                         std::uint64_t p) {
  Elements gens;
  for (auto const& a : max_elementary_abelian(degree, s, p)) {
    gens.insert(a.begin(), a.end());
  }
  return closure(degree, gens);
}

inline Elements omega_center(Elements const& s, std::uint64_t p) {
  Elements out;
  for (auto const& x : center(s)) {
    if (x.pow(static_cast<std::int64_t>(p)).is_identity()) out.insert(x);
  }
  return out;
}

}  // namespace semiprim::brute
