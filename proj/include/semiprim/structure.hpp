#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semiprim/caps.hpp"
#include "semiprim/perm_group.hpp"

namespace semiprim {

/// The normal subgroups of a group, sorted by order (ties keep discovery
/// order). members.front() is trivial and members.back() is the parent.
struct NormalLattice {
  PermGroup parent;
  std::vector<PermGroup> members;
};

/// True iff every generator of `n` conjugated by every generator of `g`
/// stays in `n`.
bool is_normalized_by(PermGroup const& n, PermGroup const& g);
bool is_normal(PermGroup const& n, PermGroup const& g);

PermGroup normal_closure(PermGroup const& g, std::span<Perm const> s);
PermGroup normal_closure(PermGroup const& g, PermGroup const& sub);

/// One representative per conjugacy class, the smallest-rank element of each.
/// Throws CapExceeded above caps.classes classes.
std::vector<Perm> class_representatives(PermGroup const& g,
                                        Caps const& caps = default_caps());

/// Joins of the normal closures of class representatives.
NormalLattice all_normal_subgroups(PermGroup const& g,
                                   Caps const& caps = default_caps());

PermGroup centralizer(PermGroup const& g, std::span<Perm const> s,
                      Caps const& caps = default_caps());
PermGroup centralizer(PermGroup const& g, PermGroup const& sub,
                      Caps const& caps = default_caps());
PermGroup center(PermGroup const& g, Caps const& caps = default_caps());
PermGroup normalizer(PermGroup const& g, PermGroup const& sub,
                     Caps const& caps = default_caps());
/// Streams the smaller of the two groups.
PermGroup intersection(PermGroup const& a, PermGroup const& b,
                       Caps const& caps = default_caps());

/// [A, B]: normal closure in <A, B> of the commutators of generators.
PermGroup commutator_subgroup(PermGroup const& a, PermGroup const& b);
PermGroup derived_subgroup(PermGroup const& g);
/// G, G', G'', ... down to the first repeated term.
std::vector<PermGroup> derived_series(PermGroup const& g);
/// G, [G,G], [[G,G],G], ... down to the first repeated term.
std::vector<PermGroup> lower_central_series(PermGroup const& g);
bool is_abelian(PermGroup const& g);
bool is_soluble(PermGroup const& g);
bool is_nilpotent(PermGroup const& g);
bool is_p_group(PermGroup const& g, std::uint64_t p);
bool is_elementary_abelian(PermGroup const& g, std::uint64_t p);

/// A Sylow p-subgroup, grown one step at a time by the first element in
/// rank order that normalises the current p-subgroup and has p-th power
/// inside it.
PermGroup sylow(PermGroup const& g, std::uint64_t p,
                Caps const& caps = default_caps());

/// The distinct conjugates of `sub` under `g`, starting with `sub`.
std::vector<PermGroup> conjugates(PermGroup const& g, PermGroup const& sub,
                                  Caps const& caps = default_caps());
PermGroup conjugate(PermGroup const& sub, Perm const& by);

/// O_p(G) as the intersection of the Sylow p-subgroups.
PermGroup core_p(PermGroup const& g, std::uint64_t p,
                 Caps const& caps = default_caps());
/// O_p'(G), the largest p'-order member of the normal lattice.
PermGroup core_p_prime(PermGroup const& g, std::uint64_t p,
                       Caps const& caps = default_caps());
PermGroup fitting(PermGroup const& g, Caps const& caps = default_caps());

/// P' <g^p : g in gens>. Throws InvalidArgument unless P is a p-group.
PermGroup frattini_p(PermGroup const& pgroup, std::uint64_t p);
/// Elements of order dividing p in Z(P).
PermGroup omega_center(PermGroup const& pgroup, std::uint64_t p,
                       Caps const& caps = default_caps());

/// All elementary abelian subgroups of maximal order in the p-group S,
/// ordered by their element ranks in S. Throws CapExceeded if |S| is above
/// caps.thompson.
std::vector<PermGroup> max_elementary_abelian(PermGroup const& s,
                                              std::uint64_t p,
                                              Caps const& caps = default_caps());
/// J(S), generated by max_elementary_abelian(S).
PermGroup thompson(PermGroup const& s, std::uint64_t p,
                   Caps const& caps = default_caps());
/// J(F), generated by J(S) over all Sylow p-subgroups S of F.
PermGroup thompson_of_group(PermGroup const& f, std::uint64_t p,
                            Caps const& caps = default_caps());

struct PSeries {
  bool separable = false;
  /// 1 = X_0 < X_1 < ... with X_{i+1}/X_i alternately O_p and O_p' of G/X_i
  /// (steps that contribute nothing are skipped).
  std::vector<PermGroup> series;
};
PSeries p_separability(PermGroup const& g, std::uint64_t p,
                       Caps const& caps = default_caps());

/// Tests F = O_p'(F) C_F(ΩZ(S)) N_F(J(S)) for a Sylow p-subgroup S.
bool is_thompson_factorizable(PermGroup const& f, std::uint64_t p,
                              Caps const& caps = default_caps());

/// |A B| for subgroups A, B of a common group.
std::uint64_t product_order(PermGroup const& a, PermGroup const& b,
                            Caps const& caps = default_caps());

}  // namespace semiprim
