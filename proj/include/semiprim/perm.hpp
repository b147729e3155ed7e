#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace semiprim {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as its image list.
///
/// Products are read left to right: `(g * h)[x] == h[g[x]]`, i.e. apply g
/// first, then h. Conjugation and commutators follow the same convention:
/// `x.conjugate(g) == g^-1 * x * g` and `commutator(a, b) == a^-1 b^-1 a b`.
class Perm {
 public:
  Perm() = default;

  /// Identity of the given degree.
  explicit Perm(std::size_t degree);

  /// Validates that `images` is a bijection of {0..n-1}.
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<Point>> const& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Apply *this, then `other`. Throws InvalidArgument on degree mismatch.
  Perm operator*(Perm const& other) const;
  Perm& operator*=(Perm const& other);

  Perm inverse() const;
  Perm pow(std::int64_t e) const;
  Perm conjugate(Perm const& by) const;

  /// Order of the element (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Points moved by the permutation, ascending.
  std::vector<Point> support() const;
  /// Smallest moved point or degree() if identity.
  Point first_moved() const noexcept;

  /// Cycle notation with 0-based points, "()" for the identity.
  std::string to_string() const;

  friend void multiply_into(Perm const& g, Perm const& h, Perm& out);
  friend void multiply_inverse_into(Perm const& g, Perm const& h, Perm& out,
                                    std::vector<Point>& scratch);

  friend bool operator==(Perm const&, Perm const&) = default;
  friend auto operator<=>(Perm const& a, Perm const& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

Perm commutator(Perm const& a, Perm const& b);

/// Restriction of `g` to the first `n` points; they must be invariant.
Perm restrict_prefix(Perm const& g, std::size_t n);

/// The permutation acting as `a` on the first deg(a) points and as `b`,
/// shifted, on the next deg(b) points.
Perm direct_sum(Perm const& a, Perm const& b);

/// out = g * h, reusing the storage of `out`. `out` must not alias g or h.
void multiply_into(Perm const& g, Perm const& h, Perm& out);

/// out = g * h^-1, reusing the storage of `out` and `scratch`.
void multiply_inverse_into(Perm const& g, Perm const& h, Perm& out,
                           std::vector<Point>& scratch);

struct PermHash {
  std::size_t operator()(Perm const& p) const noexcept;
};

}  // namespace semiprim
