#include "semiprim/field.hpp"

#include <string>

#include "semiprim/error.hpp"
#include "semiprim/numbers.hpp"

namespace semiprim {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant first

// Multiply by x modulo the monic polynomial x^a + low(x).
void times_x(Poly& v, Poly const& low, std::uint32_t q) {
  std::size_t const a = v.size();
  std::uint32_t const top = v[a - 1];
  for (std::size_t i = a - 1; i > 0; --i) v[i] = v[i - 1];
  v[0] = 0;
  for (std::size_t i = 0; i < a; ++i) {
    v[i] = (v[i] + (q - low[i]) * top) % q;
  }
}

}  // namespace

SmallField::SmallField(std::uint32_t q, std::uint32_t a) : q_(q), a_(a) {
  if (!is_prime(q) || a == 0) {
    throw InvalidArgument("field needs a prime characteristic and degree >= 1");
  }
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < a; ++i) {
    pow_.push_back(static_cast<std::uint32_t>(size));
    size *= q;
    if (size > (1u << 24)) throw CapExceeded("field too large");
  }
  size_ = static_cast<std::uint32_t>(size);
  auto encode = [&](Poly const& v) {
    Elem e = 0;
    for (std::uint32_t i = 0; i < a; ++i) e += v[i] * pow_[i];
    return e;
  };
  std::uint32_t const units = size_ - 1;
  for (std::uint32_t code = 0; code < size_; ++code) {
    Poly low(a);
    for (std::uint32_t i = 0; i < a; ++i) low[i] = code / pow_[i] % q;
    if (low[0] == 0) continue;  // divisible by x
    Poly v(a, 0);
    v[0] = 1;
    std::vector<Elem> exp;
    exp.reserve(units);
    bool primitive = true;
    for (std::uint32_t k = 0; k < units; ++k) {
      Elem e = encode(v);
      if (k > 0 && e == 1) {
        primitive = false;
        break;
      }
      exp.push_back(e);
      if (a == 1) {
        v[0] = (v[0] * ((q - low[0]) % q)) % q;
      } else {
        times_x(v, low, q);
      }
    }
    if (!primitive || encode(v) != 1) continue;
    exp_ = std::move(exp);
    log_.assign(size_, 0);
    for (std::uint32_t k = 0; k < units; ++k) log_[exp_[k]] = k;
    return;
  }
  throw InvalidArgument("no primitive polynomial found for q=" +
                        std::to_string(q) + ", a=" + std::to_string(a));
}

SmallField::Elem SmallField::add(Elem x, Elem y) const {
  Elem out = 0;
  for (std::uint32_t i = 0; i < a_; ++i) {
    out += (digit(x, i) + digit(y, i)) % q_ * pow_[i];
  }
  return out;
}

SmallField::Elem SmallField::neg(Elem x) const {
  Elem out = 0;
  for (std::uint32_t i = 0; i < a_; ++i) out += (q_ - digit(x, i)) % q_ * pow_[i];
  return out;
}

SmallField::Elem SmallField::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  return exp_[(log_[x] + log_[y]) % (size_ - 1)];
}

SmallField::Elem SmallField::inv(Elem x) const {
  if (x == 0) throw InvalidArgument("zero has no inverse");
  return exp_[(size_ - 1 - log_[x]) % (size_ - 1)];
}

SmallField::Elem SmallField::primitive_power(std::uint64_t k) const {
  return exp_[k % (size_ - 1)];
}

SmallField::Elem SmallField::basis(std::uint32_t b) const { return pow_.at(b); }

std::uint32_t SmallField::digit(Elem x, std::uint32_t b) const {
  return x / pow_[b] % q_;
}

}  // namespace semiprim
