#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semiprim/action.hpp"
#include "semiprim/caps.hpp"
#include "semiprim/perm_group.hpp"
#include "semiprim/report.hpp"
#include "semiprim/semiprim.hpp"

namespace semiprim {

enum class Family { inversion, vector, extraspecial, c3, diagonal, custom };

std::string_view to_string(Family f);

/// A family member realised as K ⋊ H on Ω = K.
struct GroupRecipe {
  Family family = Family::custom;
  std::string name;
  Json params;
  /// Closed-form |K| * |H|; checked against the realisation on construction.
  std::uint64_t expected_order = 0;
  SemidirectSpec spec;
  /// A faithful representation of smaller degree whose image is exactly
  /// spec.group(). Only set where the lattice is cheaper to compute there.
  std::optional<ActionHom> small;

  PermGroup const& group() const { return spec.group(); }
};

/// Wraps a user-supplied semidirect product.
GroupRecipe semidirect(std::string name, PermGroup k,
                       std::vector<std::vector<Perm>> const& h_images,
                       Caps const& caps = default_caps());

/// Extraspecial group of order q^(1+2m) in its right regular representation.
/// Generators are x then y with z = [x, y] central. For odd q only the plus
/// type (exponent q) is supported; for q = 2 plus gives D8 and minus gives
/// Q8. Throws InvalidArgument on other parameters and CapExceeded for
/// m >= 2 or an order above 3^5.
PermGroup extraspecial_group(std::uint32_t q, bool plus_type, std::uint32_t m = 1);

/// Abelian q-group P = C_{c_1} x ... x C_{c_k} inverted by C2. `cyclic_orders`
/// are powers of the odd prime q.
GroupRecipe family_inversion(std::uint32_t q,
                             std::vector<std::uint64_t> const& cyclic_orders,
                             Caps const& caps = default_caps());

/// Parses shapes like "c5", "c9xc3" into cyclic orders.
std::vector<std::uint64_t> parse_p_shape(std::string_view shape);

/// W = V^m with V = (F_{q^a})^n, extended by GL(V) acting on each copy.
/// Needs q^(a n m) <= 10^5.
GroupRecipe family_vector(std::uint32_t q, std::uint32_t a, std::uint32_t n,
                          std::uint32_t m, Caps const& caps = default_caps());

/// E = q_+^(1+2m) for odd q, extended by SL_2(q) acting through the
/// standard transvections and fixing Z(E). Only m = 1.
GroupRecipe family_extraspecial(std::uint32_t q, std::uint32_t m = 1,
                                Caps const& caps = default_caps());

/// (V_1 x ... x V_r) ⋊ C3 for primes p_i = 2 mod 3, ascending: V_i is
/// Q8 for p_i = 2 and p_i^(1+2) of exponent p_i otherwise, and the C3 acts
/// through the companion matrix of x^2 + x + 1 on each V_i / Z(V_i).
GroupRecipe family_c3(std::vector<std::uint32_t> const& primes,
                      Caps const& caps = default_caps());

/// (T1 x T2 x T3) : <x> with T_i = Alt(5) and x acting as a transposition
/// on each factor, on the cosets of H = <D, x> for D the full diagonal.
/// Realised as T1 T2 ⋊ H of degree 3600 and order 432000; `small` is the
/// 15-point representation inside Sym(5)^3.
GroupRecipe diagonal_counterexample(Caps const& caps = default_caps());

}  // namespace semiprim
