#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "semiprim/caps.hpp"
#include "semiprim/perm_group.hpp"

namespace semiprim {

/// A homomorphism from a permutation group onto a permutation group of
/// another degree, given by a function on elements.
///
/// The image is generated by the images of the source generators. The
/// kernel and lifts go through the diagonal group {(g, act(g))} on
/// degree + image_degree points, built on first use.
class ActionHom {
 public:
  using Act = std::function<Perm(Perm const&)>;

  ActionHom() = default;
  ActionHom(PermGroup source, std::size_t image_degree, Act act);

  PermGroup const& source() const { return state_->source; }
  PermGroup const& image() const { return state_->image; }
  std::size_t image_degree() const { return state_->image_degree; }

  /// Image of an element of the source.
  Perm operator()(Perm const& g) const { return state_->act(g); }

  bool is_faithful() const { return image().order() == source().order(); }
  PermGroup const& kernel() const;

  /// Some element of the source mapping to u, or nullopt if u is not in
  /// the image.
  std::optional<Perm> lift(Perm const& u) const;

  /// Image of a subgroup of the source.
  PermGroup image_of(PermGroup const& sub) const;
  /// Full preimage of a subgroup of the image.
  PermGroup preimage(PermGroup const& sub) const;

 private:
  struct Diagonal;
  struct State {
    PermGroup source;
    std::size_t image_degree = 0;
    Act act;
    PermGroup image;
    PermGroup trivial_kernel;
    std::once_flag once;
    std::unique_ptr<Diagonal> diagonal;
  };
  Diagonal const& diagonal() const;

  std::shared_ptr<State> state_;
};

/// A group acting on an invariant subset of its points.
struct InducedAction {
  PermGroup source;
  std::vector<Point> domain;  ///< point i of the image is domain[i]
  PermGroup image;
  PermGroup kernel;
  ActionHom hom;
};

/// Throws InvalidArgument if `domain` is not invariant or has repeats.
InducedAction induced_action(PermGroup const& g, std::span<Point const> domain);

/// Action of a group on the right cosets Hx of a subgroup.
class CosetAction {
 public:
  /// Throws InvalidArgument unless h <= g, and CapExceeded if the index is
  /// above caps.coset_index.
  CosetAction(PermGroup const& g, PermGroup const& h,
              Caps const& caps = default_caps());

  PermGroup const& group() const { return hom_.source(); }
  PermGroup const& subgroup() const;
  std::size_t index() const;
  /// Coset representatives in discovery order; reps()[0] is the identity.
  std::vector<Perm> const& reps() const;

  /// Index of the coset containing g.
  std::size_t coset_of(Perm const& g) const;
  /// The smallest element of the coset Hg, comparing images of H's base.
  Perm canonical(Perm const& g) const;

  ActionHom const& hom() const { return hom_; }
  PermGroup const& image() const { return hom_.image(); }
  /// The core of H in G.
  PermGroup const& kernel() const { return hom_.kernel(); }

 private:
  struct Data;
  std::shared_ptr<Data const> data_;
  ActionHom hom_;
};

/// Faithful permutation representation of G/N on the cosets of N.
/// N must be normal in G.
CosetAction quotient(PermGroup const& g, PermGroup const& n,
                     Caps const& caps = default_caps());

}  // namespace semiprim
