#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace semiprim {

/// Resource limits for the searches that enumerate group elements.
///
/// Exceeding any limit raises CapExceeded. The process-wide defaults can be
/// overridden from the SEMIPRIM_CAPS environment variable, a comma separated
/// list such as "stream=20000000,classes=400".
struct Caps {
  std::uint64_t stream = 10'000'000;    ///< elements visited by one streamed pass
  std::uint64_t stored = 1'000'000;     ///< elements held in memory at once
  std::uint64_t coset_index = 100'000;  ///< degree of a coset action
  std::size_t classes = 40;             ///< conjugacy classes for the normal lattice
  std::uint64_t thompson = 4096;        ///< order of a p-group handed to thompson()
};

/// Current process-wide defaults.
Caps const& default_caps();

/// Replace the process-wide defaults. Not thread-safe; call at startup.
void set_default_caps(Caps const& caps);

/// Apply "key=value,..." overrides on top of `base`. Throws ParseError on
/// unknown keys or malformed numbers.
Caps parse_caps(std::string_view spec, Caps base);

/// `base` with the overrides from SEMIPRIM_CAPS applied (if set).
Caps caps_from_env(Caps base);

std::string to_string(Caps const& caps);

}  // namespace semiprim
