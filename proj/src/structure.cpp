#include "semiprim/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "semiprim/action.hpp"
#include "semiprim/error.hpp"
#include "semiprim/kernels.hpp"
#include "semiprim/numbers.hpp"

namespace semiprim {

namespace {

bool same_subgroup(PermGroup const& a, PermGroup const& b) {
  return a.order() == b.order() && a.is_subgroup_of(b);
}

bool commutes_with_all(Perm const& x, std::span<Perm const> s) {
  return std::all_of(s.begin(), s.end(),
                     [&](Perm const& y) { return x * y == y * x; });
}

void require_p_group(PermGroup const& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (!is_power_of(g.order(), p)) {
    throw InvalidArgument("group of order " + std::to_string(g.order()) +
                          " is not a " + std::to_string(p) + "-group");
  }
}

}  // namespace

bool is_normalized_by(PermGroup const& n, PermGroup const& g) {
  for (auto const& x : g.generators()) {
    for (auto const& y : n.generators()) {
      if (!n.contains(y.conjugate(x))) return false;
    }
  }
  return true;
}

bool is_normal(PermGroup const& n, PermGroup const& g) {
  return n.is_subgroup_of(g) && is_normalized_by(n, g);
}

PermGroup normal_closure(PermGroup const& g, std::span<Perm const> s) {
  std::vector<Perm> gens;
  for (auto const& x : s) {
    if (!x.is_identity()) gens.push_back(x);
  }
  PermGroup n(g.degree(), gens);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (auto const& x : g.generators()) {
        Perm c = gens[i].conjugate(x);
        if (n.contains(c)) continue;
        gens.push_back(std::move(c));
        n = PermGroup(g.degree(), gens);
        grew = true;
      }
    }
  }
  return n;
}

PermGroup normal_closure(PermGroup const& g, PermGroup const& sub) {
  return normal_closure(g, std::span<Perm const>(sub.generators()));
}

std::vector<Perm> class_representatives(PermGroup const& g, Caps const& caps) {
  check_stream_cap(g, caps);
  Bitset seen(g.order());
  std::vector<Perm> reps;
  std::deque<Perm> queue;
  for (std::uint64_t r = 0; r < g.order(); ++r) {
    if (seen.test(r)) continue;
    if (reps.size() == caps.classes) {
      throw CapExceeded("more than " + std::to_string(caps.classes) +
                        " conjugacy classes");
    }
    Perm rep = g.element_at(r);
    reps.push_back(rep);
    seen.set(r);
    queue.push_back(std::move(rep));
    while (!queue.empty()) {
      Perm x = std::move(queue.front());
      queue.pop_front();
      for (auto const& s : g.generators()) {
        Perm y = x.conjugate(s);
        std::uint64_t ry = *g.rank(y);
        if (seen.test(ry)) continue;
        seen.set(ry);
        queue.push_back(std::move(y));
      }
    }
  }
  return reps;
}

NormalLattice all_normal_subgroups(PermGroup const& g, Caps const& caps) {
  auto reps = class_representatives(g, caps);
  std::vector<PermGroup> members;
  auto add = [&](PermGroup n) {
    for (auto const& m : members) {
      if (same_subgroup(m, n)) return false;
    }
    members.push_back(std::move(n));
    return true;
  };
  for (auto const& r : reps) {
    Perm const one[] = {r};
    add(normal_closure(g, one));
  }
  std::size_t const principal = members.size();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < principal; ++j) {
      if (members[j].is_subgroup_of(members[i])) continue;
      add(join(members[i], members[j]));
    }
  }
  std::stable_sort(members.begin(), members.end(),
                   [](PermGroup const& a, PermGroup const& b) {
                     return a.order() < b.order();
                   });
  return NormalLattice{g, std::move(members)};
}

PermGroup centralizer(PermGroup const& g, std::span<Perm const> s,
                      Caps const& caps) {
  std::vector<Perm> set(s.begin(), s.end());
  return kernels::filter_subgroup(
      g, [&set](Perm const& x) { return commutes_with_all(x, set); }, caps);
}

PermGroup centralizer(PermGroup const& g, PermGroup const& sub,
                      Caps const& caps) {
  return centralizer(g, std::span<Perm const>(sub.generators()), caps);
}

PermGroup center(PermGroup const& g, Caps const& caps) {
  return centralizer(g, g, caps);
}

PermGroup normalizer(PermGroup const& g, PermGroup const& sub,
                     Caps const& caps) {
  auto const& gens = sub.generators();
  return kernels::filter_subgroup(
      g,
      [&](Perm const& x) {
        return std::all_of(gens.begin(), gens.end(), [&](Perm const& y) {
          return sub.contains(y.conjugate(x));
        });
      },
      caps);
}

PermGroup intersection(PermGroup const& a, PermGroup const& b,
                       Caps const& caps) {
  if (a.degree() != b.degree()) {
    throw InvalidArgument("degree mismatch in intersection");
  }
  PermGroup const& small = a.order() <= b.order() ? a : b;
  PermGroup const& large = a.order() <= b.order() ? b : a;
  if (small.is_subgroup_of(large)) return small;
  return kernels::filter_subgroup(
      small, [&](Perm const& x) { return large.contains(x); }, caps);
}

PermGroup commutator_subgroup(PermGroup const& a, PermGroup const& b) {
  std::vector<Perm> comms;
  for (auto const& x : a.generators()) {
    for (auto const& y : b.generators()) {
      Perm c = commutator(x, y);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(join(a, b), comms);
}

PermGroup derived_subgroup(PermGroup const& g) {
  return commutator_subgroup(g, g);
}

std::vector<PermGroup> derived_series(PermGroup const& g) {
  std::vector<PermGroup> out{g};
  for (;;) {
    PermGroup next = derived_subgroup(out.back());
    if (next.order() == out.back().order()) break;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<PermGroup> lower_central_series(PermGroup const& g) {
  std::vector<PermGroup> out{g};
  for (;;) {
    PermGroup next = commutator_subgroup(out.back(), g);
    if (next.order() == out.back().order()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_abelian(PermGroup const& g) {
  auto const& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

bool is_soluble(PermGroup const& g) {
  return derived_series(g).back().is_trivial();
}

bool is_nilpotent(PermGroup const& g) {
  return lower_central_series(g).back().is_trivial();
}

bool is_p_group(PermGroup const& g, std::uint64_t p) {
  return is_power_of(g.order(), p);
}

bool is_elementary_abelian(PermGroup const& g, std::uint64_t p) {
  if (!is_p_group(g, p) || !is_abelian(g)) return false;
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [p](Perm const& x) {
                       return x.pow(static_cast<std::int64_t>(p)).is_identity();
                     });
}

PermGroup sylow(PermGroup const& g, std::uint64_t p, Caps const& caps) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  std::uint64_t const target = p_part(g.order(), p);
  PermGroup s(g.degree());
  auto const e = static_cast<std::int64_t>(p);
  while (s.order() < target) {
    auto found = kernels::parallel::find_first(
        g,
        [&](Perm const& x) {
          if (s.contains(x) || !s.contains(x.pow(e))) return false;
          for (auto const& y : s.generators()) {
            if (!s.contains(y.conjugate(x))) return false;
          }
          return true;
        },
        caps);
    if (!found) throw Error("Sylow search found no extending element");
    std::vector<Perm> gens = s.generators();
    gens.push_back(g.element_at(*found));
    s = PermGroup(g.degree(), std::move(gens));
  }
  return s;
}

PermGroup conjugate(PermGroup const& sub, Perm const& by) {
  std::vector<Perm> gens;
  for (auto const& x : sub.generators()) gens.push_back(x.conjugate(by));
  return PermGroup(sub.degree(), std::move(gens));
}

std::vector<PermGroup> conjugates(PermGroup const& g, PermGroup const& sub,
                                  Caps const& caps) {
  std::vector<PermGroup> out{sub};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto const& x : g.generators()) {
      PermGroup c = conjugate(out[i], x);
      bool seen = std::any_of(out.begin(), out.end(), [&](PermGroup const& o) {
        return same_subgroup(o, c);
      });
      if (seen) continue;
      if (out.size() >= caps.coset_index) {
        throw CapExceeded("too many conjugates");
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

PermGroup core_p(PermGroup const& g, std::uint64_t p, Caps const& caps) {
  PermGroup s = sylow(g, p, caps);
  PermGroup core = s;
  for (auto const& c : conjugates(g, s, caps)) {
    if (core.is_trivial()) break;
    core = intersection(core, c, caps);
  }
  return core;
}

PermGroup core_p_prime(PermGroup const& g, std::uint64_t p, Caps const& caps) {
  if (g.order() % p != 0) return g;
  auto lattice = all_normal_subgroups(g, caps);
  PermGroup best(g.degree());
  for (auto const& m : lattice.members) {
    if (m.order() % p != 0 && m.order() > best.order()) best = m;
  }
  return best;
}

PermGroup fitting(PermGroup const& g, Caps const& caps) {
  PermGroup f(g.degree());
  for (auto p : prime_divisors(g.order())) f = join(f, core_p(g, p, caps));
  return f;
}

PermGroup frattini_p(PermGroup const& pgroup, std::uint64_t p) {
  require_p_group(pgroup, p);
  std::vector<Perm> powers;
  for (auto const& x : pgroup.generators()) {
    Perm y = x.pow(static_cast<std::int64_t>(p));
    if (!y.is_identity()) powers.push_back(std::move(y));
  }
  return join(derived_subgroup(pgroup), PermGroup(pgroup.degree(), powers));
}

PermGroup omega_center(PermGroup const& pgroup, std::uint64_t p,
                       Caps const& caps) {
  require_p_group(pgroup, p);
  PermGroup z = center(pgroup, caps);
  auto const e = static_cast<std::int64_t>(p);
  return kernels::filter_subgroup(
      z, [e](Perm const& x) { return x.pow(e).is_identity(); }, caps);
}

namespace {

// Depth-first growth of elementary abelian subgroups of a p-group from
// Omega Z(S), over the order-p elements that commute with the current one.
class ElementaryAbelianSearch {
 public:
  ElementaryAbelianSearch(PermGroup const& s, std::uint64_t p, Caps const& caps)
      : s_(s), p_(p), elems_(s.elements(caps)) {
    auto const e = static_cast<std::int64_t>(p);
    for (std::size_t i = 1; i < elems_.size(); ++i) {
      if (elems_[i].pow(e).is_identity()) order_p_.push_back(i);
    }
  }

  std::vector<PermGroup> run(PermGroup const& start) {
    State st;
    st.members.assign(elems_.size(), false);
    st.gens = start.generators();
    start.for_each_in_range(0, start.order(), [&](Perm const& x, std::uint64_t) {
      std::size_t r = *s_.rank(x);
      st.members[r] = true;
      st.list.push_back(r);
    });
    for (auto i : order_p_) {
      if (!st.members[i]) st.cand.push_back(i);
    }
    visit(st);
    std::vector<PermGroup> out;
    for (auto const& [key, gens] : best_) out.emplace_back(s_.degree(), gens);
    return out;
  }

 private:
  struct State {
    std::vector<bool> members;
    std::vector<std::size_t> list;
    std::vector<std::size_t> cand;
    std::vector<Perm> gens;
  };

  void visit(State const& st) {
    std::vector<std::size_t> key = st.list;
    std::sort(key.begin(), key.end());
    if (!visited_.insert(key).second) return;
    if (st.list.size() + st.cand.size() < best_order_) return;
    if (st.list.size() > best_order_) {
      best_order_ = st.list.size();
      best_.clear();
    }
    if (st.list.size() == best_order_) best_.emplace(key, st.gens);
    for (std::size_t ci = 0; ci < st.cand.size(); ++ci) {
      Perm const& c = elems_[st.cand[ci]];
      State next;
      next.members = st.members;
      next.gens = st.gens;
      next.gens.push_back(c);
      Perm power = c;
      for (std::uint64_t k = 1; k < p_; ++k) {
        for (std::size_t a : st.list) {
          std::size_t r = *s_.rank(elems_[a] * power);
          next.members[r] = true;
          next.list.push_back(r);
        }
        power *= c;
      }
      for (std::size_t a : st.list) next.list.push_back(a);
      for (std::size_t d : st.cand) {
        if (next.members[d]) continue;
        Perm const& y = elems_[d];
        if (y * c == c * y) next.cand.push_back(d);
      }
      visit(next);
    }
  }

  PermGroup const& s_;
  std::uint64_t p_;
  std::vector<Perm> elems_;  // indexed by rank in s_
  std::vector<std::size_t> order_p_;
  std::set<std::vector<std::size_t>> visited_;
  std::size_t best_order_ = 0;
  std::map<std::vector<std::size_t>, std::vector<Perm>> best_;
};

}  // namespace

std::vector<PermGroup> max_elementary_abelian(PermGroup const& s,
                                              std::uint64_t p,
                                              Caps const& caps) {
  require_p_group(s, p);
  if (s.order() > caps.thompson) {
    throw CapExceeded("p-group of order " + std::to_string(s.order()) +
                      " exceeds the Thompson search cap of " +
                      std::to_string(caps.thompson));
  }
  if (is_elementary_abelian(s, p)) return {s};
  ElementaryAbelianSearch search(s, p, caps);
  return search.run(omega_center(s, p, caps));
}

PermGroup thompson(PermGroup const& s, std::uint64_t p, Caps const& caps) {
  PermGroup j(s.degree());
  for (auto const& a : max_elementary_abelian(s, p, caps)) j = join(j, a);
  return j;
}

PermGroup thompson_of_group(PermGroup const& f, std::uint64_t p,
                            Caps const& caps) {
  PermGroup js = thompson(sylow(f, p, caps), p, caps);
  PermGroup j(f.degree());
  for (auto const& c : conjugates(f, js, caps)) j = join(j, c);
  return j;
}

PSeries p_separability(PermGroup const& g, std::uint64_t p, Caps const& caps) {
  PSeries out;
  PermGroup x(g.degree());
  out.series.push_back(x);
  bool want_p = true;
  int idle = 0;
  while (x.order() < g.order()) {
    PermGroup next;
    if (x.is_trivial()) {
      next = want_p ? core_p(g, p, caps) : core_p_prime(g, p, caps);
    } else {
      CosetAction q = quotient(g, x, caps);
      PermGroup o = want_p ? core_p(q.image(), p, caps)
                           : core_p_prime(q.image(), p, caps);
      next = q.hom().preimage(o);
    }
    want_p = !want_p;
    if (next.order() == x.order()) {
      if (++idle == 2) return out;
      continue;
    }
    idle = 0;
    x = std::move(next);
    out.series.push_back(x);
  }
  out.separable = true;
  return out;
}

std::uint64_t product_order(PermGroup const& a, PermGroup const& b,
                            Caps const& caps) {
  return a.order() * b.order() / intersection(a, b, caps).order();
}

bool is_thompson_factorizable(PermGroup const& f, std::uint64_t p,
                              Caps const& caps) {
  PermGroup s = sylow(f, p, caps);
  PermGroup x = join(core_p_prime(f, p, caps),
                     centralizer(f, omega_center(s, p, caps), caps));
  PermGroup y = normalizer(f, thompson(s, p, caps), caps);
  return product_order(x, y, caps) == f.order();
}

}  // namespace semiprim
