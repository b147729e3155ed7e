#include "semiprim/numbers.hpp"

#include "semiprim/error.hpp"

namespace semiprim {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  return n != 0 && p_part(n, p) == n;
}

std::uint64_t prime_of_power(std::uint64_t n) {
  auto ps = prime_divisors(n);
  return ps.size() == 1 ? ps.front() : 0;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (__builtin_mul_overflow(r, k, &r)) throw Error("factorial overflow");
  }
  return r;
}

}  // namespace semiprim
