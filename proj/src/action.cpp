#include "semiprim/action.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "semiprim/error.hpp"

namespace semiprim {

struct ActionHom::Diagonal {
  PermGroup group;             // {(g, act(g))} on n + m points
  std::size_t image_levels = 0;  // leading chain levels with base >= n
  PermGroup kernel;
};

ActionHom::ActionHom(PermGroup source, std::size_t image_degree, Act act)
    : state_(std::make_shared<State>()) {
  state_->source = std::move(source);
  state_->image_degree = image_degree;
  state_->act = std::move(act);
  std::vector<Perm> gens;
  for (auto const& g : state_->source.generators()) {
    Perm img = state_->act(g);
    if (img.degree() != image_degree) {
      throw InvalidArgument("action produced a permutation of the wrong degree");
    }
    gens.push_back(std::move(img));
  }
  state_->image = PermGroup(image_degree, std::move(gens));
  state_->trivial_kernel = PermGroup(state_->source.degree());
}

ActionHom::Diagonal const& ActionHom::diagonal() const {
  std::call_once(state_->once, [this] {
    auto const& src = state_->source;
    std::size_t const n = src.degree();
    std::size_t const m = state_->image_degree;
    std::vector<Perm> gens;
    for (auto const& g : src.generators()) {
      gens.push_back(direct_sum(g, state_->act(g)));
    }
    std::vector<Point> prefix(m);
    for (std::size_t i = 0; i < m; ++i) prefix[i] = static_cast<Point>(n + i);
    auto d = std::make_unique<Diagonal>();
    d->group = PermGroup(n + m, std::move(gens), prefix);
    while (d->image_levels < d->group.chain_length() &&
           d->group.level(d->image_levels).base >= n) {
      ++d->image_levels;
    }
    std::vector<Perm> kgens;
    if (d->image_levels < d->group.chain_length()) {
      for (auto const& g : d->group.level(d->image_levels).generators) {
        kgens.push_back(restrict_prefix(g, n));
      }
    }
    d->kernel = PermGroup(n, std::move(kgens));
    if (d->kernel.order() * state_->image.order() != src.order()) {
      throw Error("action is not a homomorphism: |kernel|*|image| != |source|");
    }
    state_->diagonal = std::move(d);
  });
  return *state_->diagonal;
}

PermGroup const& ActionHom::kernel() const {
  if (is_faithful()) return state_->trivial_kernel;
  return diagonal().kernel;
}

std::optional<Perm> ActionHom::lift(Perm const& u) const {
  if (u.degree() != image_degree() || !image().contains(u)) return std::nullopt;
  auto const& d = diagonal();
  std::size_t const n = source().degree();
  Perm r = u;
  std::vector<Perm const*> used;
  for (std::size_t l = 0; l < d.image_levels; ++l) {
    auto const& lvl = d.group.level(l);
    Point const b = lvl.base - static_cast<Point>(n);
    Point const img = r[b] + static_cast<Point>(n);
    std::int32_t const pos = lvl.position[img];
    if (pos < 0) return std::nullopt;
    if (pos == 0) continue;
    Perm const& t = lvl.transversal[static_cast<std::size_t>(pos)];
    std::vector<Point> part(image_degree());
    for (std::size_t i = 0; i < image_degree(); ++i) {
      part[i] = t[static_cast<Point>(n + i)] - static_cast<Point>(n);
    }
    r = r * Perm(std::move(part)).inverse();
    used.push_back(&t);
  }
  if (!r.is_identity()) return std::nullopt;
  Perm out(n + image_degree());
  for (auto it = used.rbegin(); it != used.rend(); ++it) out *= **it;
  return restrict_prefix(out, n);
}

PermGroup ActionHom::image_of(PermGroup const& sub) const {
  std::vector<Perm> gens;
  for (auto const& g : sub.generators()) gens.push_back((*this)(g));
  return PermGroup(image_degree(), std::move(gens));
}

PermGroup ActionHom::preimage(PermGroup const& sub) const {
  std::vector<Perm> gens = kernel().generators();
  for (auto const& u : sub.generators()) {
    auto x = lift(u);
    if (!x) throw InvalidArgument("subgroup is not contained in the image");
    gens.push_back(std::move(*x));
  }
  return PermGroup(source().degree(), std::move(gens));
}

InducedAction induced_action(PermGroup const& g, std::span<Point const> domain) {
  std::vector<std::int32_t> where(g.degree(), -1);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] >= g.degree() || where[domain[i]] >= 0) {
      throw InvalidArgument("domain has repeated or out-of-range points");
    }
    where[domain[i]] = static_cast<std::int32_t>(i);
  }
  for (auto const& s : g.generators()) {
    for (Point x : domain) {
      if (where[s[x]] < 0) throw InvalidArgument("domain is not invariant");
    }
  }
  std::vector<Point> dom(domain.begin(), domain.end());
  auto act = [dom, where](Perm const& x) {
    std::vector<Point> img(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) {
      img[i] = static_cast<Point>(where[x[dom[i]]]);
    }
    return Perm(std::move(img));
  };
  ActionHom hom(g, dom.size(), act);
  // the kernel is the pointwise stabiliser of the domain
  PermGroup kernel = g.pointwise_stabilizer(dom);
  if (kernel.order() * hom.image().order() != g.order()) {
    throw Error("induced action: |kernel|*|image| != |source|");
  }
  return InducedAction{g, std::move(dom), hom.image(), std::move(kernel), hom};
}

struct CosetAction::Data {
  PermGroup subgroup;
  std::vector<Perm> reps;
  std::unordered_map<Perm, std::size_t, PermHash> index;

  Perm canonical(Perm const& g) const {
    Perm c = g;
    Perm tmp;
    for (std::size_t l = 0; l < subgroup.chain_length(); ++l) {
      auto const& lvl = subgroup.level(l);
      std::size_t best = 0;
      for (std::size_t j = 1; j < lvl.orbit.size(); ++j) {
        if (c[lvl.orbit[j]] < c[lvl.orbit[best]]) best = j;
      }
      if (best != 0) {
        multiply_into(lvl.transversal[best], c, tmp);
        std::swap(c, tmp);
      }
    }
    return c;
  }

  std::size_t coset_of(Perm const& g) const {
    auto it = index.find(canonical(g));
    if (it == index.end()) throw InvalidArgument("element outside the group");
    return it->second;
  }
};

CosetAction::CosetAction(PermGroup const& g, PermGroup const& h,
                         Caps const& caps) {
  if (!h.is_subgroup_of(g)) throw InvalidArgument("not a subgroup");
  std::uint64_t const idx = g.order() / h.order();
  if (idx > caps.coset_index) {
    throw CapExceeded("coset action of index " + std::to_string(idx) +
                      " exceeds the cap of " + std::to_string(caps.coset_index));
  }
  auto data = std::make_shared<Data>();
  data->subgroup = h;
  data->reps.push_back(g.identity());
  data->index.emplace(data->canonical(g.identity()), 0);
  for (std::size_t i = 0; i < data->reps.size(); ++i) {
    for (auto const& s : g.generators()) {
      Perm next = data->canonical(data->reps[i] * s);
      if (data->index.contains(next)) continue;
      data->index.emplace(next, data->reps.size());
      data->reps.push_back(std::move(next));
    }
  }
  if (data->reps.size() != idx) throw Error("coset enumeration incomplete");
  std::shared_ptr<Data const> shared = data;
  data_ = shared;
  hom_ = ActionHom(g, idx, [shared](Perm const& x) {
    std::vector<Point> img(shared->reps.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = static_cast<Point>(shared->coset_of(shared->reps[i] * x));
    }
    return Perm(std::move(img));
  });
}

PermGroup const& CosetAction::subgroup() const { return data_->subgroup; }
std::size_t CosetAction::index() const { return data_->reps.size(); }
std::vector<Perm> const& CosetAction::reps() const { return data_->reps; }
std::size_t CosetAction::coset_of(Perm const& g) const {
  return data_->coset_of(g);
}
Perm CosetAction::canonical(Perm const& g) const {
  return data_->canonical(g);
}

CosetAction quotient(PermGroup const& g, PermGroup const& n, Caps const& caps) {
  for (auto const& x : g.generators()) {
    for (auto const& y : n.generators()) {
      if (!n.contains(y.conjugate(x))) {
        throw InvalidArgument("quotient by a subgroup that is not normal");
      }
    }
  }
  return CosetAction(g, n, caps);
}

}  // namespace semiprim
