#pragma once

#include <cstdint>
#include <vector>

namespace semiprim {

bool is_prime(std::uint64_t n);
/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
/// True iff n == p^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);
/// p if n is a nontrivial power of the prime p, otherwise 0.
std::uint64_t prime_of_power(std::uint64_t n);
std::uint64_t factorial(std::uint64_t n);

}  // namespace semiprim
