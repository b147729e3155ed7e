#pragma once

// Streamed element filters over a group, in a serial reference version and
// an OpenMP version. Both walk the rank order of the stabiliser chain; the
// parallel one splits it into fixed chunks so results never depend on the
// thread count.

#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "semiprim/caps.hpp"
#include "semiprim/perm_group.hpp"

namespace semiprim {

/// Fixed-size bitset indexed by element rank.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::uint64_t size) : size_(size), words_((size + 63) / 64) {}

  std::uint64_t size() const noexcept { return size_; }
  bool test(std::uint64_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::uint64_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::uint64_t count() const noexcept {
    std::uint64_t n = 0;
    for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
  }
  /// First set index at or after `from`, or size().
  std::uint64_t next(std::uint64_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    for (;;) {
      if (bits) {
        std::uint64_t i = (std::uint64_t{w} << 6) + std::countr_zero(bits);
        return i < size_ ? i : size_;
      }
      if (++w == words_.size()) return size_;
      bits = words_[w];
    }
  }

  friend bool operator==(Bitset const&, Bitset const&) = default;

 private:
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace kernels {

/// Ranks per parallel work item. A multiple of 64 so chunks never share a
/// bitset word.
inline constexpr std::uint64_t kChunk = 4096;

namespace serial {

template <class Pred>
Bitset mark(PermGroup const& g, Pred&& pred, Caps const& caps = default_caps()) {
  Bitset out(g.order());
  g.for_each_element(
      [&](Perm const& x, std::uint64_t r) {
        if (pred(x)) out.set(r);
      },
      caps);
  return out;
}

template <class Pred>
std::uint64_t count(PermGroup const& g, Pred&& pred,
                    Caps const& caps = default_caps()) {
  std::uint64_t n = 0;
  g.for_each_element(
      [&](Perm const& x, std::uint64_t) {
        if (pred(x)) ++n;
      },
      caps);
  return n;
}

/// Smallest rank whose element satisfies `pred`.
template <class Pred>
std::optional<std::uint64_t> find_first(PermGroup const& g, Pred&& pred,
                                        Caps const& caps = default_caps()) {
  check_stream_cap(g, caps);
  ElementCursor cur(g, 0);
  do {
    if (pred(cur.current())) return cur.rank();
  } while (cur.advance());
  return std::nullopt;
}

}  // namespace serial

namespace parallel {

template <class Pred>
Bitset mark(PermGroup const& g, Pred&& pred, Caps const& caps = default_caps()) {
  check_stream_cap(g, caps);
  Bitset out(g.order());
  auto const chunks = static_cast<std::int64_t>((g.order() + kChunk - 1) / kChunk);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::uint64_t const lo = static_cast<std::uint64_t>(c) * kChunk;
    g.for_each_in_range(lo, lo + kChunk, [&](Perm const& x, std::uint64_t r) {
      if (pred(x)) out.set(r);
    });
  }
  return out;
}

template <class Pred>
std::uint64_t count(PermGroup const& g, Pred&& pred,
                    Caps const& caps = default_caps()) {
  check_stream_cap(g, caps);
  auto const chunks = static_cast<std::int64_t>((g.order() + kChunk - 1) / kChunk);
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::uint64_t const lo = static_cast<std::uint64_t>(c) * kChunk;
    std::uint64_t n = 0;
    g.for_each_in_range(lo, lo + kChunk, [&](Perm const& x, std::uint64_t) {
      if (pred(x)) ++n;
    });
    total += n;
  }
  return total;
}

template <class Pred>
std::optional<std::uint64_t> find_first(PermGroup const& g, Pred&& pred,
                                        Caps const& caps = default_caps()) {
  check_stream_cap(g, caps);
  auto const chunks = static_cast<std::int64_t>((g.order() + kChunk - 1) / kChunk);
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{none};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::uint64_t const lo = static_cast<std::uint64_t>(c) * kChunk;
    if (lo > best.load(std::memory_order_relaxed)) continue;
    std::uint64_t const hi = std::min(lo + kChunk, g.order());
    ElementCursor cur(g, lo);
    for (;;) {
      if (pred(cur.current())) {
        std::uint64_t r = cur.rank();
        std::uint64_t prev = best.load(std::memory_order_relaxed);
        while (r < prev && !best.compare_exchange_weak(prev, r)) {
        }
        break;
      }
      if (cur.rank() + 1 >= hi) break;
      cur.advance();
    }
  }
  std::uint64_t r = best.load();
  if (r == none) return std::nullopt;
  return r;
}

}  // namespace parallel

/// The subgroup of `g` whose elements are the marked ranks. The marks must
/// form a subgroup; generators are the marked elements, in rank order, that
/// are not already in the span of the earlier ones.
PermGroup subgroup_from_marks(PermGroup const& g, Bitset const& marks);

/// The subgroup {x in g : pred(x)}; `pred` must cut out a subgroup.
template <class Pred>
PermGroup filter_subgroup(PermGroup const& g, Pred&& pred,
                          Caps const& caps = default_caps()) {
  return subgroup_from_marks(g, parallel::mark(g, pred, caps));
}

}  // namespace kernels
}  // namespace semiprim
