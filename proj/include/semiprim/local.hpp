#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiprim/action.hpp"
#include "semiprim/caps.hpp"
#include "semiprim/graph.hpp"
#include "semiprim/perm_group.hpp"
#include "semiprim/report.hpp"
#include "semiprim/semiprim.hpp"

namespace semiprim {

/// A connected graph with a group of automorphisms transitive on arcs.
struct ArcPair {
  Graph graph;
  PermGroup group;
  std::size_t valency = 0;
};

/// Throws InvalidArgument unless `group` preserves `graph`, the graph is
/// connected and regular, and the orbit of one arc has all 2|E| arcs.
ArcPair check_arc_transitive(Graph graph, PermGroup group);

/// G_x acting on Γ(x); the kernel is G_x^[1].
InducedAction local_action(ArcPair const& pair, Point x);

struct LocalHypothesis {
  bool holds = false;
  PermGroup local;  ///< G_x^Γ(x)
  SpVerdict semiprimitivity;
  /// The regular normal nilpotent subgroup of the local action, if any.
  std::optional<PermGroup> regular_nilpotent;
  /// Number of regular normal nilpotent subgroups found; at most one for a
  /// semiprimitive local action.
  std::size_t regular_nilpotent_count = 0;
  std::string detail;
};

/// Local action semiprimitive with a regular normal nilpotent subgroup.
LocalHypothesis local_hypothesis(ArcPair const& pair, Point x = 0,
                                 Caps const& caps = default_caps());

struct EdgeKernels {
  PermGroup gx1;   ///< fixes x and Γ(x) pointwise
  PermGroup gy1;   ///< fixes y and Γ(y) pointwise
  PermGroup gxy;   ///< fixes x and y
  PermGroup gxy1;  ///< fixes x, y, Γ(x) and Γ(y) pointwise
};

/// Throws InvalidArgument if {x, y} is not an edge.
EdgeKernels kernels(ArcPair const& pair, Edge e);

/// The subgroups of G_x built from an edge {x, y} with G_xy^[1] != 1.
struct Anatomy {
  Edge edge;
  std::uint64_t p = 0;
  std::uint64_t q = 0;  ///< 5 - p when p is 2 or 3, else 0
  PermGroup gx, gy;
  EdgeKernels k;
  InducedAction local_x, local_y;
  PermGroup regular_local;  ///< the regular normal nilpotent subgroup of G_x^Γ(x)

  PermGroup qx;    ///< O_p(G_x^[1])
  PermGroup qy;    ///< O_p(G_y^[1])
  PermGroup qxqy;
  PermGroup lx;    ///< normal closure of Q_x Q_y in G_x
  PermGroup r0;    ///< O_p'(L_x)
  PermGroup r;     ///< preimage of regular_local in L_x
  PermGroup zxy;   ///< ΩZ(Q_x Q_y)
  PermGroup zx;    ///< normal closure of Z_xy in G_x
  PermGroup mx;    ///< C_{L_x}(Z_x)
  PermGroup jlx;   ///< J(L_x)
  PermGroup jx;    ///< J(L_x) M_x
  PermGroup v;     ///< generated by ΩZ(S) over S in Syl_p(L_x)
  PermGroup s;     ///< a Sylow p-subgroup of L_x
  std::vector<PermGroup> thompson_family;  ///< elementary abelian of maximal order in S
  PermGroup js;    ///< J(S)
};

struct AnatomyOutcome {
  /// pass when the anatomy was built; skip if the local hypothesis fails;
  /// vacuous if G_xy^[1] = 1; fail if |G_xy^[1]| is not a prime power or
  /// Q_x Q_y is not a p-group.
  CheckResult result;
  std::optional<Anatomy> anatomy;
};

AnatomyOutcome anatomy(ArcPair const& pair, Edge e,
                       Caps const& caps = default_caps());

Json to_json(Anatomy const& a);

/// One result per structural claim about the anatomy subgroups: kernels
/// are p-groups, Q_y moves Γ(x), L_x is transitive and p-separable with
/// Sylow subgroup Q_x Q_y, O_p(L_x / R_0) is the image of Q_x, L_x / R_0
/// is not Thompson factorizable, J_x is transitive on Γ(x), and so on.
std::vector<CheckResult> verify_local_lemmas(Anatomy const& a,
                                             Caps const& caps = default_caps());
std::vector<CheckResult> verify_local_lemmas(ArcPair const& pair, Edge e,
                                             Caps const& caps = default_caps());

/// H = J_x / M_x acting on V = Z_x, split into direct factors E_i.
struct KernelStructure {
  CheckResult result;
  std::uint64_t p = 0;
  std::size_t r = 0;
  std::vector<std::uint64_t> factor_orders;      ///< |E_i|
  std::vector<std::uint64_t> commutator_orders;  ///< |[V, E_i]|
  std::uint64_t centralised_order = 0;           ///< |C_V(H)|
  std::uint64_t v_order = 0;
  std::size_t thompson_subgroups_checked = 0;
};

/// H is a direct product of copies of SL_2(p), V splits as
/// C_V(H) x [V, E_1] x ... with |[V, E_i]| = p^2, and every elementary
/// abelian subgroup A of maximal order in a Sylow p-subgroup of H factors
/// over the E_i with |A| |C_V(A)| = |V|. That last family is one reading of
/// the set it quantifies over; a failure of that part alone is reported as
/// skip with "convention-sensitive" in the detail.
KernelStructure verify_kernel_structure(Anatomy const& a,
                                        Caps const& caps = default_caps());
KernelStructure verify_kernel_structure(ArcPair const& pair, Edge e,
                                        Caps const& caps = default_caps());

struct LocalSections {
  CheckResult result;
  std::optional<PermGroup> j, f, r;  ///< inside G_x^Γ(x)
  std::size_t factors = 0;
};

/// Normal subgroups F < R < J of the local action with J / F a direct
/// product of copies of Sym(3) (p = 2) or Alt(4) (p = 3), where J is the
/// image of J_x and F the image of the preimage of Z(J_x / M_x).
LocalSections verify_local_sections(Anatomy const& a,
                                    Caps const& caps = default_caps());
LocalSections verify_local_sections(ArcPair const& pair, Edge e,
                                    Caps const& caps = default_caps());

struct StabiliserBound {
  CheckResult result;
  std::size_t d = 0;
  std::uint64_t bound = 0;  ///< d! (d-1)!
  std::uint64_t stabiliser_order = 0;
  std::uint64_t kernel_order = 0;  ///< |G_xy^[1]|
};

/// For a local action with a regular normal nilpotent subgroup and
/// gcd(d, 6) = 1: G_xy^[1] = 1 and |G_x| <= d! (d-1)!. Skip otherwise.
StabiliserBound verify_stabiliser_bound(ArcPair const& pair,
                                        Caps const& caps = default_caps());

/// Default edge: vertex 0 and its first neighbour.
Edge default_edge(ArcPair const& pair);

}  // namespace semiprim
