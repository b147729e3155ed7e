#include "semiprim/semiprim.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "semiprim/error.hpp"
#include "semiprim/kernels.hpp"
#include "semiprim/numbers.hpp"

namespace semiprim {

bool is_semiregular(PermGroup const& g) {
  for (auto const& orb : g.orbits()) {
    if (orb.size() != g.order()) return false;
  }
  return true;
}

bool is_regular(PermGroup const& g) {
  return g.is_transitive() && g.order() == g.degree();
}

namespace {

using ImageOf = std::function<PermGroup(PermGroup const&)>;

SpVerdict definition_on(NormalLattice const& lattice, ImageOf const& image_of) {
  SpVerdict v;
  v.checked_by = CheckedBy::definition;
  for (auto const& n : lattice.members) {
    PermGroup img = image_of(n);
    bool const transitive = img.is_transitive();
    bool const semiregular = is_semiregular(img);
    if (transitive && semiregular) v.regular_normals.push_back(img.order());
    if (!transitive && !semiregular && !v.witness) v.witness = img;
  }
  std::sort(v.regular_normals.begin(), v.regular_normals.end());
  v.semiprimitive = !v.witness;
  std::ostringstream out;
  out << lattice.members.size() << " normal subgroups";
  if (v.witness) {
    out << "; normal subgroup of order " << v.witness->order()
        << " is intransitive with " << v.witness->orbits().size()
        << " orbits and not semiregular";
  }
  v.detail = out.str();
  return v;
}

RegularNormalReport regular_on(NormalLattice const& lattice,
                               ImageOf const& image_of) {
  RegularNormalReport rep;
  std::vector<PermGroup> images;
  for (auto const& n : lattice.members) images.push_back(image_of(n));
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (is_regular(images[i])) {
      rep.regular.push_back(lattice.members[i]);
      if (!rep.soluble && is_soluble(lattice.members[i])) {
        rep.soluble = rep.regular.size() - 1;
      }
    }
  }
  std::ostringstream out;
  out << rep.regular.size() << " regular normal subgroup(s)";
  if (rep.soluble) {
    PermGroup const& k = rep.regular[*rep.soluble];
    for (std::size_t i = 0; i < images.size(); ++i) {
      auto const& n = lattice.members[i];
      if (images[i].is_transitive() && !k.is_subgroup_of(n)) {
        rep.transitive_contain_k = false;
      }
      if (is_semiregular(images[i]) && !n.is_subgroup_of(k)) {
        rep.semiregular_inside_k = false;
      }
    }
    rep.unique = rep.regular.size() == 1;
    out << "; soluble one of order " << k.order();
  } else {
    out << "; none soluble";
  }
  rep.detail = out.str();
  return rep;
}

ImageOf identity_image() {
  return [](PermGroup const& n) { return n; };
}

ImageOf hom_image(ActionHom const& hom) {
  if (!hom.is_faithful()) {
    throw InvalidArgument("semiprimitivity through a hom needs a faithful action");
  }
  return [&hom](PermGroup const& n) { return hom.image_of(n); };
}

bool semiprimitive_or_compute(PermGroup const& g, std::optional<bool> known,
                              Caps const& caps) {
  if (known) return *known;
  return g.is_transitive() && is_semiprimitive_definition(g, caps).semiprimitive;
}

CheckResult skipped(std::string check, std::string why) {
  CheckResult r;
  r.check = std::move(check);
  r.status = Status::skip;
  r.detail = "hypothesis-not-met: " + std::move(why);
  return r;
}

}  // namespace

SpVerdict is_semiprimitive_definition(PermGroup const& g, Caps const& caps) {
  if (!g.is_transitive()) throw InvalidArgument("group is not transitive");
  return definition_on(all_normal_subgroups(g, caps), identity_image());
}

SpVerdict is_semiprimitive_definition(ActionHom const& hom, Caps const& caps) {
  if (!hom.image().is_transitive()) {
    throw InvalidArgument("action is not transitive");
  }
  auto image_of = hom_image(hom);
  return definition_on(all_normal_subgroups(hom.source(), caps), image_of);
}

RegularNormalReport regular_normal_analysis(PermGroup const& g,
                                            Caps const& caps) {
  return regular_on(all_normal_subgroups(g, caps), identity_image());
}

RegularNormalReport regular_normal_analysis(ActionHom const& hom,
                                            Caps const& caps) {
  auto image_of = hom_image(hom);
  return regular_on(all_normal_subgroups(hom.source(), caps), image_of);
}

SemidirectSpec::SemidirectSpec(PermGroup k,
                               std::vector<std::vector<Perm>> const& h_images,
                               Caps const& caps)
    : k_(std::move(k)), elements_(k_.elements(caps)) {
  std::size_t const n = elements_.size();
  auto const& kgens = k_.generators();
  std::vector<std::vector<Point>> step(kgens.size(), std::vector<Point>(n));
  std::vector<Perm> right;
  for (std::size_t i = 0; i < kgens.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      step[i][x] = point(elements_[x] * kgens[i]);
    }
    right.emplace_back(step[i]);
  }
  std::vector<Perm> autos;
  for (auto const& images : h_images) {
    if (images.size() != kgens.size()) {
      throw InvalidArgument("automorphism needs one image per K generator");
    }
    std::vector<Point> img_pts;
    for (auto const& y : images) {
      if (!k_.contains(y)) throw InvalidArgument("generator image outside K");
      img_pts.push_back(point(y));
    }
    // extend along the Cayley graph: phi(x s_i) = phi(x) phi(s_i)
    constexpr Point unset = ~Point{0};
    std::vector<Point> phi(n, unset);
    phi[0] = 0;
    std::vector<Point> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Point const x = queue[qi];
      for (std::size_t i = 0; i < kgens.size(); ++i) {
        Point const y = step[i][x];
        Point const fy = point(elements_[phi[x]] * images[i]);
        if (phi[y] == unset) {
          phi[y] = fy;
          queue.push_back(y);
        } else if (phi[y] != fy) {
          throw InvalidArgument("generator images do not define a homomorphism");
        }
      }
    }
    try {
      autos.emplace_back(std::move(phi));
    } catch (InvalidArgument const&) {
      throw InvalidArgument("generator images do not define an automorphism");
    }
  }
  k_regular_ = PermGroup(n, right);
  h_ = PermGroup(n, autos);
  std::vector<Perm> all = right;
  all.insert(all.end(), autos.begin(), autos.end());
  group_ = PermGroup(n, std::move(all));
}

Point SemidirectSpec::point(Perm const& k_element) const {
  auto r = k_.rank(k_element);
  if (!r) throw InvalidArgument("element is not in K");
  return static_cast<Point>(*r);
}

Perm SemidirectSpec::apply(Perm const& h_element, Perm const& k_element) const {
  return elements_[h_element[point(k_element)]];
}

PermGroup SemidirectSpec::regular_image(PermGroup const& m) const {
  std::vector<Perm> gens;
  for (auto const& x : m.generators()) {
    std::vector<Point> img(degree());
    for (std::size_t i = 0; i < degree(); ++i) img[i] = point(elements_[i] * x);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(degree(), std::move(gens));
}

SpVerdict is_semiprimitive_criterion(SemidirectSpec const& spec,
                                     Caps const& caps) {
  SpVerdict v;
  v.checked_by = CheckedBy::criterion;
  auto const& k = spec.k();
  auto const& h = spec.h();
  auto const& kgens = k.generators();

  auto lattice = all_normal_subgroups(k, caps);
  std::size_t invariant_count = 0;
  std::ostringstream out;
  for (auto const& m : lattice.members) {
    if (m.order() == k.order()) continue;
    bool invariant = true;
    for (auto const& hg : h.generators()) {
      for (auto const& x : m.generators()) {
        if (!m.contains(spec.apply(hg, x))) invariant = false;
      }
    }
    if (!invariant) continue;
    ++invariant_count;
    PermGroup b = kernels::filter_subgroup(
        h,
        [&](Perm const& x) {
          for (auto const& s : kgens) {
            if (!m.contains(s.inverse() * spec.apply(x, s))) return false;
          }
          return true;
        },
        caps);
    if (!b.is_trivial() && !v.witness) {
      v.witness = join(b, spec.regular_image(m));
      out << "H has a kernel of order " << b.order()
          << " on K/M with |M| = " << m.order() << "; ";
    }
  }
  bool const quotient_form = !v.witness;

  bool commutator_form = true;
  auto hl = all_normal_subgroups(h, caps);
  for (auto const& n : hl.members) {
    if (n.is_trivial()) continue;
    if (commutator_subgroup(spec.k_regular(), n).order() != k.order()) {
      commutator_form = false;
      out << "[K,N] < K for a normal N of H of order " << n.order() << "; ";
      break;
    }
  }
  v.semiprimitive = quotient_form;
  v.forms_agree = quotient_form == commutator_form;
  out << invariant_count << " H-invariant proper normal subgroups of K, "
      << hl.members.size() << " normal subgroups of H";
  v.detail = out.str();
  return v;
}

CheckResult verify_quotient_lemma(PermGroup const& g, PermGroup const& h,
                                  PermGroup const& n,
                                  std::optional<bool> g_semiprimitive,
                                  Caps const& caps) {
  std::string const check = "semiprim.quotient_lemma";
  if (!is_normal(n, g)) return skipped(check, "N is not normal in G");
  if (n.is_transitive()) return skipped(check, "N is transitive");
  if (!semiprimitive_or_compute(g, g_semiprimitive, caps)) {
    return skipped(check, "G is not semiprimitive");
  }
  CosetAction ca(g, join(h, n), caps);
  bool const faithful = ca.image().order() * n.order() == g.order();
  SpVerdict sp = is_semiprimitive_definition(ca.image(), caps);
  CheckResult r;
  r.check = check;
  r.status = faithful && sp.semiprimitive ? Status::pass : Status::fail;
  std::ostringstream out;
  out << "|N| = " << n.order() << ", quotient degree " << ca.index()
      << ", image order " << ca.image().order()
      << (faithful ? ", faithful" : ", NOT faithful")
      << (sp.semiprimitive ? ", semiprimitive" : ", NOT semiprimitive");
  r.detail = out.str();
  if (sp.witness) r.witness = group_witness(*sp.witness);
  return r;
}

CheckResult verify_fitting_lemma(PermGroup const& g, PermGroup const& k,
                                 std::optional<bool> g_semiprimitive,
                                 Caps const& caps) {
  std::string const check = "semiprim.fitting_lemma";
  if (!is_normal(k, g) || !is_regular(k)) {
    return skipped(check, "K is not a regular normal subgroup");
  }
  if (!is_soluble(k)) return skipped(check, "K is not soluble");
  if (!semiprimitive_or_compute(g, g_semiprimitive, caps)) {
    return skipped(check, "G is not semiprimitive");
  }
  CheckResult r;
  r.check = check;
  auto lattice = all_normal_subgroups(g, caps);
  std::size_t nilpotent = 0;
  for (auto const& n : lattice.members) {
    if (!is_nilpotent(n)) continue;
    ++nilpotent;
    if (!n.is_subgroup_of(k)) {
      r.status = Status::fail;
      r.witness = group_witness(n);
      r.detail = "normal nilpotent subgroup not contained in K";
      return r;
    }
  }
  PermGroup fg = fitting(g, caps);
  PermGroup fk = fitting(k, caps);
  std::ostringstream out;
  out << nilpotent << " normal nilpotent subgroups inside K; |F(G)| = "
      << fg.order() << ", |F(K)| = " << fk.order();
  r.detail = out.str();
  r.status = fg.same_elements(fk) ? Status::pass : Status::fail;
  return r;
}

CheckResult verify_coprime_lemma(PermGroup const& g, PermGroup const& h,
                                 PermGroup const& k,
                                 std::optional<bool> g_semiprimitive,
                                 Caps const& caps) {
  std::string const check = "semiprim.coprime_lemma";
  if (!is_normal(k, g) || !is_regular(k)) {
    return skipped(check, "K is not a regular normal subgroup");
  }
  if (!is_nilpotent(k)) return skipped(check, "K is not nilpotent");
  if (!semiprimitive_or_compute(g, g_semiprimitive, caps)) {
    return skipped(check, "G is not semiprimitive");
  }
  CheckResult r;
  r.check = check;
  std::ostringstream out;
  bool any = false;
  bool ok = true;
  for (auto p : prime_divisors(h.order())) {
    PermGroup o = core_p(h, p, caps);
    if (o.is_trivial()) continue;
    any = true;
    bool const coprime = k.order() % p != 0;
    ok = ok && coprime;
    out << "|O_" << p << "(H)| = " << o.order() << ", " << p
        << (coprime ? " does not divide " : " DIVIDES ") << "|K| = "
        << k.order() << "; ";
  }
  if (!any) {
    r.status = Status::vacuous;
    r.detail = "O_p(H) = 1 for every prime p";
    return r;
  }
  r.status = ok ? Status::pass : Status::fail;
  r.detail = out.str();
  r.detail.resize(r.detail.size() - 2);
  return r;
}

}  // namespace semiprim
