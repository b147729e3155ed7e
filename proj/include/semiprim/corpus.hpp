#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiprim/caps.hpp"
#include "semiprim/constructions.hpp"
#include "semiprim/perm_group.hpp"

namespace semiprim {

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// Small transitive groups with well-known structure, in suite order.
std::vector<NamedGroup> small_groups();

/// A semidirect product K ⋊ H on Ω = K with the expected verdict.
struct SemidirectCase {
  GroupRecipe recipe;
  bool semiprimitive = true;
};

/// Family instances within the construction limits followed by the
/// negative cases. Building the whole list takes a few seconds.
std::vector<SemidirectCase> semidirect_corpus(Caps const& caps = default_caps());

/// Names of semidirect_corpus() members, without building them.
std::vector<std::string> semidirect_names();

/// Builds one member of semidirect_corpus() by name; nullopt if unknown.
std::optional<SemidirectCase> semidirect_case(std::string const& name,
                                              Caps const& caps = default_caps());

/// Caps the verification suite runs with: the defaults, with room for the
/// larger normal lattices in the corpus.
Caps suite_caps();

}  // namespace semiprim
