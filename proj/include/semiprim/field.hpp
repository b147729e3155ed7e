#pragma once

#include <cstdint>
#include <vector>

namespace semiprim {

/// The field with q^a elements, q prime, for small q^a.
///
/// Elements are integers in [0, q^a): the base-q digits are the
/// coefficients of a polynomial in the primitive element x, constant term
/// first. The defining polynomial is the first primitive monic polynomial
/// of degree a in lexicographic order of its lower coefficients, so x
/// generates the multiplicative group.
class SmallField {
 public:
  using Elem = std::uint32_t;

  SmallField(std::uint32_t q, std::uint32_t a);

  std::uint32_t characteristic() const { return q_; }
  std::uint32_t degree() const { return a_; }
  std::uint32_t size() const { return size_; }

  Elem add(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  /// x^k for the primitive element x; k taken mod size - 1.
  Elem primitive_power(std::uint64_t k) const;
  /// Element with a single digit 1 in position b, i.e. x^b for b < a.
  Elem basis(std::uint32_t b) const;
  std::uint32_t digit(Elem x, std::uint32_t b) const;

 private:
  std::uint32_t q_, a_, size_;
  std::vector<std::uint32_t> pow_;  // q^b
  std::vector<Elem> exp_;           // exp_[k] = x^k, k < size - 1
  std::vector<std::uint32_t> log_;
};

}  // namespace semiprim
