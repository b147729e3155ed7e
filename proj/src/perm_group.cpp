#include "semiprim/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "semiprim/error.hpp"

namespace semiprim {

struct PermGroup::Chain {
  std::vector<ChainLevel> levels;
};

namespace {

using Levels = std::vector<ChainLevel>;

ChainLevel make_level(std::size_t degree, Point base) {
  ChainLevel lvl;
  lvl.base = base;
  lvl.orbit.push_back(base);
  lvl.position.assign(degree, -1);
  lvl.position[base] = 0;
  lvl.transversal.emplace_back(degree);
  return lvl;
}

// Closes the orbit of the level under its current generators.
void extend_orbit(ChainLevel& lvl) {
  for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
    Point const beta = lvl.orbit[i];
    for (auto const& s : lvl.generators) {
      Point const gamma = s[beta];
      if (lvl.position[gamma] >= 0) continue;
      lvl.position[gamma] = static_cast<std::int32_t>(lvl.orbit.size());
      lvl.orbit.push_back(gamma);
      lvl.transversal.push_back(lvl.transversal[i] * s);
    }
  }
}

// Sifts g through levels [from, end). Returns the residue and the level at
// which sifting stopped (levels.size() if it went all the way through).
std::pair<Perm, std::size_t> sift(Levels const& levels, Perm g,
                                  std::size_t from) {
  Perm tmp;
  std::vector<Point> scratch;
  for (std::size_t l = from; l < levels.size(); ++l) {
    auto const& lvl = levels[l];
    std::int32_t const pos = lvl.position[g[lvl.base]];
    if (pos < 0) return {std::move(g), l};
    if (pos == 0) continue;
    multiply_inverse_into(g, lvl.transversal[static_cast<std::size_t>(pos)],
                          tmp, scratch);
    std::swap(g, tmp);
  }
  return {std::move(g), levels.size()};
}

// Deterministic Schreier-Sims. If `first_base` is set and moved by the
// group it becomes the first base point.
Levels schreier_sims(std::size_t degree, std::vector<Perm> const& input,
                     std::optional<Point> first_base) {
  std::vector<Perm> gens;
  for (auto const& g : input) {
    if (!g.is_identity()) gens.push_back(g);
  }
  Levels levels;
  if (gens.empty()) return levels;

  if (first_base) {
    bool moved = std::any_of(gens.begin(), gens.end(), [&](Perm const& g) {
      return g[*first_base] != *first_base;
    });
    if (moved) levels.push_back(make_level(degree, *first_base));
  }
  for (auto const& g : gens) {
    bool fixes_base = std::all_of(levels.begin(), levels.end(),
                                  [&](ChainLevel const& l) {
                                    return g[l.base] == l.base;
                                  });
    if (fixes_base) levels.push_back(make_level(degree, g.first_moved()));
  }
  // S_i = generators fixing the first i base points
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (auto const& g : gens) {
      bool fixes = true;
      for (std::size_t j = 0; j < l && fixes; ++j) {
        fixes = g[levels[j].base] == levels[j].base;
      }
      if (fixes) levels[l].generators.push_back(g);
    }
    extend_orbit(levels[l]);
  }

  // checked[l][j]: number of level-l generators already paired with orbit
  // point j in a Schreier generator test.
  std::vector<std::vector<std::size_t>> checked(levels.size());
  std::vector<Point> scratch;
  Perm schreier;
  Perm tmp;

  std::size_t i = levels.size();
  while (i > 0) {
    std::size_t const l = i - 1;
    checked.resize(levels.size());
    bool complete = true;
    for (std::size_t j = 0; j < levels[l].orbit.size() && complete; ++j) {
      auto& done = checked[l];
      if (done.size() < levels[l].orbit.size()) {
        done.resize(levels[l].orbit.size(), 0);
      }
      while (done[j] < levels[l].generators.size()) {
        std::size_t const s_idx = done[j]++;
        auto const& lvl = levels[l];
        Perm const& s = lvl.generators[s_idx];
        Point const img = s[lvl.orbit[j]];
        auto const pos = static_cast<std::size_t>(lvl.position[img]);
        multiply_into(lvl.transversal[j], s, tmp);
        multiply_inverse_into(tmp, lvl.transversal[pos], schreier, scratch);
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(levels, schreier, l + 1);
        if (stop == levels.size() && residue.is_identity()) continue;

        if (stop == levels.size()) {
          Point b = residue.first_moved();
          // residue fixes every base point, so b is new
          levels.push_back(make_level(degree, b));
          checked.resize(levels.size());
        }
        for (std::size_t t = l + 1; t <= stop && t < levels.size(); ++t) {
          levels[t].generators.push_back(residue);
          extend_orbit(levels[t]);
        }
        i = std::min(stop, levels.size() - 1) + 1;
        complete = false;
        break;
      }
    }
    if (complete) --i;
  }
  return levels;
}

Levels build_chain(std::size_t degree, std::vector<Perm> const& gens,
                   std::span<Point const> prefix) {
  if (prefix.empty()) return schreier_sims(degree, gens, std::nullopt);
  Levels levels;
  std::vector<Perm> current;
  for (auto const& g : gens) {
    if (!g.is_identity()) current.push_back(g);
  }
  for (Point delta : prefix) {
    if (current.empty()) break;
    if (delta >= degree) throw InvalidArgument("base point out of range");
    bool moved = std::any_of(current.begin(), current.end(),
                             [&](Perm const& g) { return g[delta] != delta; });
    if (!moved) continue;
    Levels part = schreier_sims(degree, current, delta);
    std::vector<Perm> next;
    if (part.size() > 1) next = part[1].generators;
    levels.push_back(std::move(part[0]));
    current = std::move(next);
  }
  if (!current.empty()) {
    Levels rest = schreier_sims(degree, current, std::nullopt);
    for (auto& lvl : rest) levels.push_back(std::move(lvl));
  }
  return levels;
}

std::uint64_t chain_order(Levels const& levels) {
  std::uint64_t order = 1;
  for (auto const& l : levels) {
    if (__builtin_mul_overflow(order, l.orbit.size(), &order)) {
      throw CapExceeded("group order does not fit in 64 bits");
    }
  }
  return order;
}

}  // namespace

PermGroup::PermGroup() : chain_(std::make_shared<Chain>()) {}

PermGroup::PermGroup(std::size_t degree)
    : degree_(degree), chain_(std::make_shared<Chain>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators,
                     std::span<Point const> base_prefix)
    : degree_(degree), gens_(std::move(generators)) {
  for (auto const& g : gens_) {
    if (g.degree() != degree_) {
      throw InvalidArgument("generator of degree " + std::to_string(g.degree()) +
                            " in a group of degree " + std::to_string(degree_));
    }
  }
  auto chain = std::make_shared<Chain>();
  chain->levels = build_chain(degree_, gens_, base_prefix);
  order_ = chain_order(chain->levels);
  chain_ = std::move(chain);
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators,
                     std::shared_ptr<Chain const> chain)
    : degree_(degree),
      gens_(std::move(generators)),
      chain_(std::move(chain)),
      order_(chain_order(chain_->levels)) {}

bool PermGroup::contains(Perm const& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = sift(chain_->levels, g, 0);
  return stop == chain_->levels.size() && residue.is_identity();
}

std::size_t PermGroup::chain_length() const noexcept {
  return chain_->levels.size();
}

ChainLevel const& PermGroup::level(std::size_t i) const {
  return chain_->levels.at(i);
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (auto const& l : chain_->levels) out.push_back(l.base);
  return out;
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw InvalidArgument("point out of range");
  std::vector<Point> out{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto const& g : gens_) {
      Point const y = g[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit(x);
    for (Point y : orb) seen[y] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ == 0 || orbit(0).size() == degree_;
}

PermGroup PermGroup::stabilizer(Point x) const {
  Point const pts[] = {x};
  return pointwise_stabilizer(pts);
}

PermGroup PermGroup::pointwise_stabilizer(std::span<Point const> points) const {
  for (Point p : points) {
    if (p >= degree_) throw InvalidArgument("point out of range");
  }
  Levels levels = build_chain(degree_, gens_, points);
  std::size_t skip = 0;
  while (skip < levels.size() &&
         std::find(points.begin(), points.end(), levels[skip].base) !=
             points.end()) {
    ++skip;
  }
  auto tail = std::make_shared<Chain>();
  for (std::size_t l = skip; l < levels.size(); ++l) {
    tail->levels.push_back(std::move(levels[l]));
  }
  std::vector<Perm> gens;
  if (!tail->levels.empty()) gens = tail->levels.front().generators;
  return PermGroup(degree_, std::move(gens), std::move(tail));
}

std::optional<std::uint64_t> PermGroup::rank(Perm const& g) const {
  if (g.degree() != degree_) return std::nullopt;
  Perm cur = g;
  Perm tmp;
  std::vector<Point> scratch;
  std::uint64_t r = 0;
  std::uint64_t stride = 1;
  for (auto const& lvl : chain_->levels) {
    std::int32_t const pos = lvl.position[cur[lvl.base]];
    if (pos < 0) return std::nullopt;
    r += stride * static_cast<std::uint64_t>(pos);
    stride *= lvl.orbit.size();
    if (pos != 0) {
      multiply_inverse_into(cur, lvl.transversal[static_cast<std::size_t>(pos)],
                            tmp, scratch);
      std::swap(cur, tmp);
    }
  }
  if (!cur.is_identity()) return std::nullopt;
  return r;
}

Perm PermGroup::element_at(std::uint64_t r) const {
  if (r >= order_) throw InvalidArgument("rank out of range");
  auto const& levels = chain_->levels;
  std::vector<std::size_t> digits(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    digits[l] = static_cast<std::size_t>(r % levels[l].orbit.size());
    r /= levels[l].orbit.size();
  }
  Perm g(degree_);
  for (std::size_t l = levels.size(); l-- > 0;) {
    if (digits[l] != 0) g *= levels[l].transversal[digits[l]];
  }
  return g;
}

void check_stream_cap(PermGroup const& group, Caps const& caps) {
  if (group.order() > caps.stream) {
    throw CapExceeded("streaming " + std::to_string(group.order()) +
                      " elements exceeds the cap of " +
                      std::to_string(caps.stream));
  }
}

std::vector<Perm> PermGroup::elements(Caps const& caps) const {
  if (order_ > caps.stored) {
    throw CapExceeded("storing " + std::to_string(order_) +
                      " elements exceeds the cap of " +
                      std::to_string(caps.stored));
  }
  std::vector<Perm> out;
  out.reserve(order_);
  for_each_in_range(0, order_, [&](Perm const& g, std::uint64_t) {
    out.push_back(g);
  });
  return out;
}

bool PermGroup::is_subgroup_of(PermGroup const& other) const {
  if (other.degree_ != degree_) return false;
  if (other.order_ % order_ != 0) return false;
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](Perm const& g) { return other.contains(g); });
}

bool PermGroup::same_elements(PermGroup const& other) const {
  return order_ == other.order_ && is_subgroup_of(other);
}

ElementCursor::ElementCursor(PermGroup const& group, std::uint64_t start)
    : levels_(&group.chain_->levels), rank_(start), order_(group.order()) {
  auto const& levels = *levels_;
  digits_.resize(levels.size());
  std::uint64_t r = start;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    digits_[l] = static_cast<std::size_t>(r % levels[l].orbit.size());
    r /= levels[l].orbit.size();
  }
  prefix_.assign(levels.size() + 1, Perm(group.degree()));
  if (!levels.empty()) rebuild_from(levels.size() - 1);
}

void ElementCursor::rebuild_from(std::size_t level) {
  auto const& levels = *levels_;
  for (std::size_t l = level + 1; l-- > 0;) {
    multiply_into(prefix_[l + 1], levels[l].transversal[digits_[l]],
                  prefix_[l]);
  }
}

bool ElementCursor::advance() {
  if (rank_ + 1 >= order_) {
    rank_ = order_;
    return false;
  }
  ++rank_;
  auto const& levels = *levels_;
  std::size_t l = 0;
  for (;; ++l) {
    if (++digits_[l] < levels[l].orbit.size()) break;
    digits_[l] = 0;
  }
  rebuild_from(l);
  return true;
}

ElementRange elements_streamed(PermGroup const& group, Caps const& caps) {
  check_stream_cap(group, caps);
  return ElementRange(group);
}

PermGroup join(PermGroup const& a, PermGroup const& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("degree mismatch in join");
  if (a.is_trivial()) return b;
  if (b.is_trivial()) return a;
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  std::vector<Perm> gens = a.generators();
  for (auto const& g : b.generators()) {
    if (!a.contains(g)) gens.push_back(g);
  }
  return PermGroup(a.degree(), std::move(gens));
}

PermGroup join(std::span<PermGroup const> groups, std::size_t degree) {
  PermGroup out(degree);
  for (auto const& g : groups) out = join(out, g);
  return out;
}

PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup(n);
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  std::vector<Perm> gens{Perm::from_cycles(n, {cyc})};
  if (n > 2) gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3) return PermGroup(n);
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n < 2) return PermGroup(n);
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return PermGroup(n, {Perm::from_cycles(n, {cyc})});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InvalidArgument("dihedral group needs n >= 3");
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {Perm::from_cycles(n, {cyc}), Perm(refl)});
}

PermGroup setwise_stabilizer(PermGroup const& group,
                             std::span<Point const> points, Caps const& caps) {
  for (Point p : points) {
    if (p >= group.degree()) throw InvalidArgument("point out of range");
  }
  if (points.size() <= 1) return group.pointwise_stabilizer(points);
  if (points.size() == 2 && points[0] != points[1]) {
    Point const a = points[0];
    Point const b = points[1];
    PermGroup pointwise = group.pointwise_stabilizer(points);
    // g = h u with a^u = b, h in G_a, b^h = a^(u^-1) swaps a and b
    Point const first[] = {a};
    PermGroup rebased(group.degree(), group.generators(), first);
    if (rebased.chain_length() == 0 || rebased.level(0).base != a) {
      return pointwise;
    }
    auto const& top = rebased.level(0);
    if (top.position[b] < 0) return pointwise;
    Perm const& u = top.transversal[static_cast<std::size_t>(top.position[b])];
    Point const target = u.inverse()[a];
    PermGroup stab_a = group.stabilizer(a);
    Point const second[] = {b};
    PermGroup rebased_a(group.degree(), stab_a.generators(), second);
    Perm h(group.degree());
    if (target != b) {
      if (rebased_a.chain_length() == 0 || rebased_a.level(0).base != b) {
        return pointwise;
      }
      auto const& lvl = rebased_a.level(0);
      if (lvl.position[target] < 0) return pointwise;
      h = lvl.transversal[static_cast<std::size_t>(lvl.position[target])];
    }
    std::vector<Perm> gens = pointwise.generators();
    gens.push_back(h * u);
    return PermGroup(group.degree(), std::move(gens));
  }
  check_stream_cap(group, caps);
  std::vector<bool> in_set(group.degree(), false);
  for (Point p : points) in_set[p] = true;
  std::vector<Perm> gens;
  PermGroup current(group.degree());
  group.for_each_element([&](Perm const& g, std::uint64_t) {
    for (Point p : points) {
      if (!in_set[g[p]]) return;
    }
    if (!current.contains(g)) {
      gens.push_back(g);
      current = PermGroup(group.degree(), gens);
    }
  }, caps);
  return current;
}

}  // namespace semiprim
