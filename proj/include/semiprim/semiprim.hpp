#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiprim/action.hpp"
#include "semiprim/caps.hpp"
#include "semiprim/perm_group.hpp"
#include "semiprim/report.hpp"
#include "semiprim/structure.hpp"

namespace semiprim {

/// Every orbit has length |g|.
bool is_semiregular(PermGroup const& g);
/// Transitive and semiregular.
bool is_regular(PermGroup const& g);

enum class CheckedBy { definition, criterion, both };

struct SpVerdict {
  bool semiprimitive = false;
  /// A normal subgroup that is neither transitive nor semiregular, in the
  /// action being judged. Present iff !semiprimitive.
  std::optional<PermGroup> witness;
  std::vector<std::uint64_t> regular_normals;  ///< orders, ascending
  CheckedBy checked_by = CheckedBy::definition;
  /// For the criterion: whether the quotient-faithfulness form and the
  /// K = [K, N] form agreed.
  std::optional<bool> forms_agree;
  std::string detail;
};

/// Quantifies over all normal subgroups. Throws InvalidArgument if g is
/// intransitive.
SpVerdict is_semiprimitive_definition(PermGroup const& g,
                                      Caps const& caps = default_caps());

/// Same test for the action given by `hom`: the normal lattice is computed
/// in hom.source() and each member is judged by its image. Needs a faithful
/// hom; used when the source is a much smaller representation.
SpVerdict is_semiprimitive_definition(ActionHom const& hom,
                                      Caps const& caps = default_caps());

/// K ⋊ H acting on Ω = K, with K by right multiplication and H by
/// automorphisms. Point i of Ω is the element of rank i in K, so point 0 is
/// the identity and is fixed by H.
class SemidirectSpec {
 public:
  /// `h_images[j][i]` is the image of K's i-th generator under the j-th
  /// generator of H. Throws InvalidArgument if any of them does not define
  /// an automorphism, or CapExceeded if |K| is above caps.stored.
  SemidirectSpec(PermGroup k, std::vector<std::vector<Perm>> const& h_images,
                 Caps const& caps = default_caps());

  std::size_t degree() const { return elements_.size(); }
  /// K in its given (small) representation.
  PermGroup const& k() const { return k_; }
  /// K acting regularly on Ω.
  PermGroup const& k_regular() const { return k_regular_; }
  /// H acting on Ω; the stabiliser of point 0 in group().
  PermGroup const& h() const { return h_; }
  PermGroup const& group() const { return group_; }

  Perm const& element(Point omega) const { return elements_.at(omega); }
  Point point(Perm const& k_element) const;
  /// Image of a K element under an element of h().
  Perm apply(Perm const& h_element, Perm const& k_element) const;
  /// The K-subgroup `m` as a subgroup of k_regular().
  PermGroup regular_image(PermGroup const& m) const;

 private:
  PermGroup k_;
  std::vector<Perm> elements_;
  PermGroup k_regular_;
  PermGroup h_;
  PermGroup group_;
};

/// Faithfulness of H on every H-invariant proper quotient K/M, together
/// with the rephrased test K = [K, N] for every nontrivial normal N of H.
/// On failure the witness is B M with B the kernel of H on K/M.
SpVerdict is_semiprimitive_criterion(SemidirectSpec const& spec,
                                     Caps const& caps = default_caps());

struct RegularNormalReport {
  std::vector<PermGroup> regular;  ///< regular normal subgroups, in lattice order
  /// Index into `regular` of a soluble member, if any.
  std::optional<std::size_t> soluble;
  /// Filled only when a soluble regular normal subgroup exists.
  bool transitive_contain_k = true;
  bool semiregular_inside_k = true;
  bool unique = true;
  std::string detail;
};

RegularNormalReport regular_normal_analysis(PermGroup const& g,
                                            Caps const& caps = default_caps());
/// As above for the action given by a faithful hom; the returned subgroups
/// live in hom.source().
RegularNormalReport regular_normal_analysis(ActionHom const& hom,
                                            Caps const& caps = default_caps());

/// G/N acting on the cosets of HN/N is faithful and semiprimitive, for G
/// semiprimitive with point stabiliser H and N normal and intransitive.
/// Unmet hypotheses give Status::skip naming the hypothesis.
CheckResult verify_quotient_lemma(PermGroup const& g, PermGroup const& h,
                                  PermGroup const& n,
                                  std::optional<bool> g_semiprimitive = {},
                                  Caps const& caps = default_caps());

/// Every normal nilpotent subgroup lies in K and F(G) = F(K), for G
/// semiprimitive with soluble regular normal K.
CheckResult verify_fitting_lemma(PermGroup const& g, PermGroup const& k,
                                 std::optional<bool> g_semiprimitive = {},
                                 Caps const& caps = default_caps());

/// O_p(H) != 1 implies p does not divide |K|, for G semiprimitive with
/// point stabiliser H and regular normal nilpotent K. Status::vacuous when
/// O_p(H) = 1 for every p.
CheckResult verify_coprime_lemma(PermGroup const& g, PermGroup const& h,
                                 PermGroup const& k,
                                 std::optional<bool> g_semiprimitive = {},
                                 Caps const& caps = default_caps());

}  // namespace semiprim
