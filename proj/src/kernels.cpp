#include "semiprim/kernels.hpp"

#include "semiprim/error.hpp"

namespace semiprim::kernels {

PermGroup subgroup_from_marks(PermGroup const& g, Bitset const& marks) {
  if (marks.size() != g.order()) {
    throw InvalidArgument("mark set does not match the group order");
  }
  std::uint64_t const target = marks.count();
  PermGroup current(g.degree());
  std::vector<Perm> gens;
  for (std::uint64_t r = marks.next(0); r < marks.size() && current.order() < target;
       r = marks.next(r + 1)) {
    Perm x = g.element_at(r);
    if (current.contains(x)) continue;
    gens.push_back(std::move(x));
    current = PermGroup(g.degree(), gens);
  }
  if (current.order() != target) {
    throw InvalidArgument("marked elements do not form a subgroup");
  }
  return current;
}

}  // namespace semiprim::kernels
