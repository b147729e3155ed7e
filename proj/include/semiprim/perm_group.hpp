#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "semiprim/caps.hpp"
#include "semiprim/perm.hpp"

namespace semiprim {

/// One level of a stabiliser chain: the group G^(i) fixing the earlier base
/// points, its orbit on the base point and a transversal for G^(i+1) in G^(i).
struct ChainLevel {
  Point base = 0;
  std::vector<Perm> generators;        ///< strong generators of G^(i)
  std::vector<Point> orbit;            ///< orbit of `base`, base first
  std::vector<std::int32_t> position;  ///< point -> index in orbit, or -1
  std::vector<Perm> transversal;       ///< transversal[j] maps base to orbit[j]
};

class ElementCursor;

/// A permutation group given by generators, with its stabiliser chain built
/// eagerly by a deterministic Schreier-Sims.
///
/// Base points are chosen as the smallest point moved by the element that
/// needs a new level, after any prescribed prefix. Immutable after
/// construction, so copies are cheap (the chain is shared) and all queries
/// are safe to run concurrently.
class PermGroup {
 public:
  /// Trivial group of degree 0.
  PermGroup();
  /// Trivial group of the given degree.
  explicit PermGroup(std::size_t degree);
  /// Throws InvalidArgument if a generator has the wrong degree. Points in
  /// `base_prefix` that are moved by the group become the first base points,
  /// in the order given.
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::span<Point const> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Perm> const& generators() const noexcept { return gens_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }
  Perm identity() const { return Perm(degree_); }

  /// Membership by sifting through the chain.
  bool contains(Perm const& g) const;

  std::size_t chain_length() const noexcept;
  ChainLevel const& level(std::size_t i) const;
  std::vector<Point> base() const;

  /// Orbit of x under the generators, in breadth-first order.
  std::vector<Point> orbit(Point x) const;
  /// All orbits, each in BFS order, listed by smallest point.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  PermGroup stabilizer(Point x) const;
  PermGroup pointwise_stabilizer(std::span<Point const> points) const;

  /// Index of g in the transversal-product enumeration; nullopt if g is not
  /// an element. rank(identity) == 0.
  std::optional<std::uint64_t> rank(Perm const& g) const;
  Perm element_at(std::uint64_t rank) const;

  /// Visits every element exactly once, in rank order, without storing them.
  /// `f(Perm const&, std::uint64_t rank)`. Throws CapExceeded if the order
  /// exceeds caps.stream.
  template <class F>
  void for_each_element(F&& f, Caps const& caps = default_caps()) const;
  /// Visits ranks [lo, hi) in order.
  template <class F>
  void for_each_in_range(std::uint64_t lo, std::uint64_t hi, F&& f) const;

  /// All elements in rank order. Throws CapExceeded above caps.stored.
  std::vector<Perm> elements(Caps const& caps = default_caps()) const;

  bool is_subgroup_of(PermGroup const& other) const;
  /// Same set of elements (order and generator containment).
  bool same_elements(PermGroup const& other) const;

 private:
  struct Chain;
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::shared_ptr<Chain const> chain);

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::shared_ptr<Chain const> chain_;
  std::uint64_t order_ = 1;

  friend class ElementCursor;
};

/// Walks the transversal-product enumeration of a group; each step costs one
/// product per changed level.
class ElementCursor {
 public:
  ElementCursor(PermGroup const& group, std::uint64_t start);
  Perm const& current() const noexcept { return prefix_.front(); }
  std::uint64_t rank() const noexcept { return rank_; }
  /// Advances to the next rank; returns false once past the last element.
  bool advance();

 private:
  void rebuild_from(std::size_t level);

  std::vector<ChainLevel> const* levels_;
  std::vector<std::size_t> digits_;
  std::vector<Perm> prefix_;
  std::uint64_t rank_;
  std::uint64_t order_;
};

/// Input range over the elements of a group, for range-for loops.
class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Perm;
    using difference_type = std::ptrdiff_t;
    using pointer = Perm const*;
    using reference = Perm const&;

    iterator() = default;
    explicit iterator(std::shared_ptr<ElementCursor> cursor)
        : cursor_(std::move(cursor)) {}
    reference operator*() const { return cursor_->current(); }
    iterator& operator++() {
      if (!cursor_->advance()) cursor_.reset();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(iterator const& a, iterator const& b) {
      return a.cursor_ == b.cursor_;
    }

   private:
    std::shared_ptr<ElementCursor> cursor_;
  };

  explicit ElementRange(PermGroup group) : group_(std::move(group)) {}
  iterator begin() const {
    return iterator(std::make_shared<ElementCursor>(group_, 0));
  }
  iterator end() const { return iterator(); }

 private:
  PermGroup group_;
};

/// Streams the elements of `group`. Throws CapExceeded above caps.stream.
ElementRange elements_streamed(PermGroup const& group,
                               Caps const& caps = default_caps());

PermGroup join(PermGroup const& a, PermGroup const& b);
PermGroup join(std::span<PermGroup const> groups, std::size_t degree);

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n acting on n points.
PermGroup dihedral_group(std::size_t n);

/// Subgroup preserving `points` setwise. Two-point sets use a transversal
/// walk; larger sets fall back to a streamed filter.
PermGroup setwise_stabilizer(PermGroup const& group,
                             std::span<Point const> points,
                             Caps const& caps = default_caps());

// ---------------------------------------------------------------------------

template <class F>
void PermGroup::for_each_in_range(std::uint64_t lo, std::uint64_t hi,
                                  F&& f) const {
  if (lo >= hi || lo >= order_) return;
  if (hi > order_) hi = order_;
  ElementCursor cursor(*this, lo);
  for (;;) {
    f(cursor.current(), cursor.rank());
    if (cursor.rank() + 1 >= hi) break;
    cursor.advance();
  }
}

void check_stream_cap(PermGroup const& group, Caps const& caps);

template <class F>
void PermGroup::for_each_element(F&& f, Caps const& caps) const {
  check_stream_cap(*this, caps);
  for_each_in_range(0, order_, std::forward<F>(f));
}

}  // namespace semiprim
