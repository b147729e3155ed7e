#include "semiprim/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "semiprim/error.hpp"

namespace semiprim {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InvalidArgument("image list is not a permutation of {0.." +
                            std::to_string(images_.size()) + "-1}");
    }
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<Point>> const& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]]) {
        throw InvalidArgument("cycles are not disjoint or exceed the degree");
      }
      used[c[i]] = true;
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::operator*(Perm const& other) const {
  Perm out;
  multiply_into(*this, other, out);
  return out;
}

Perm& Perm::operator*=(Perm const& other) {
  if (other.degree() != degree()) {
    throw InvalidArgument("degree mismatch in product");
  }
  for (auto& x : images_) x = other.images_[x];
  return *this;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[images_[i]] = static_cast<Point>(i);
  }
  return out;
}

Perm Perm::pow(std::int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e)
                          : static_cast<std::uint64_t>(e);
  Perm result(degree());
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Perm Perm::conjugate(Perm const& by) const {
  // by^-1 * this * by maps by[x] to by[this[x]]
  if (by.degree() != degree()) {
    throw InvalidArgument("degree mismatch in conjugation");
  }
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[by.images_[i]] = by.images_[images_[i]];
  }
  return out;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<Point> Perm::support() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) out.push_back(static_cast<Point>(i));
  }
  return out;
}

Point Perm::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    Point x = static_cast<Point>(i);
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Perm commutator(Perm const& a, Perm const& b) {
  return a.inverse() * b.inverse() * a * b;
}

Perm restrict_prefix(Perm const& g, std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = g[static_cast<Point>(i)];
    if (img[i] >= n) {
      throw InvalidArgument("restriction to a non-invariant prefix");
    }
  }
  return Perm(std::move(img));
}

Perm direct_sum(Perm const& a, Perm const& b) {
  std::vector<Point> img;
  img.reserve(a.degree() + b.degree());
  for (Point x : a.images()) img.push_back(x);
  auto const shift = static_cast<Point>(a.degree());
  for (Point x : b.images()) img.push_back(x + shift);
  return Perm(std::move(img));
}

void multiply_into(Perm const& g, Perm const& h, Perm& out) {
  if (g.degree() != h.degree()) {
    throw InvalidArgument("degree mismatch in product");
  }
  out.images_.resize(g.images_.size());
  Point const* gi = g.images_.data();
  Point const* hi = h.images_.data();
  Point* oi = out.images_.data();
  for (std::size_t i = 0, n = g.images_.size(); i < n; ++i) oi[i] = hi[gi[i]];
}

void multiply_inverse_into(Perm const& g, Perm const& h, Perm& out,
                           std::vector<Point>& scratch) {
  if (g.degree() != h.degree()) {
    throw InvalidArgument("degree mismatch in product");
  }
  std::size_t const n = g.images_.size();
  scratch.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    scratch[h.images_[i]] = static_cast<Point>(i);
  }
  out.images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.images_[i] = scratch[g.images_[i]];
}

std::size_t PermHash::operator()(Perm const& p) const noexcept {
  // FNV-1a over the image list
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace semiprim
