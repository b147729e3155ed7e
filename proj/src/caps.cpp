#include "semiprim/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "semiprim/error.hpp"

namespace semiprim {

namespace {

Caps& mutable_caps() {
  static Caps caps;
  return caps;
}

std::uint64_t parse_number(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw ParseError("bad value for cap '" + std::string(key) + "': '" +
                     std::string(text) + "'");
  }
  return value;
}

}  // namespace

Caps const& default_caps() { return mutable_caps(); }

void set_default_caps(Caps const& caps) { mutable_caps() = caps; }

Caps parse_caps(std::string_view spec, Caps base) {
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{}
                                           : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("cap override without '=': '" + std::string(item) + "'");
    }
    auto key = item.substr(0, eq);
    auto value = parse_number(key, item.substr(eq + 1));
    if (key == "stream") {
      base.stream = value;
    } else if (key == "stored") {
      base.stored = value;
    } else if (key == "coset_index") {
      base.coset_index = value;
    } else if (key == "classes") {
      base.classes = static_cast<std::size_t>(value);
    } else if (key == "thompson") {
      base.thompson = value;
    } else {
      throw ParseError("unknown cap '" + std::string(key) + "'");
    }
  }
  return base;
}

Caps caps_from_env(Caps base) {
  char const* env = std::getenv("SEMIPRIM_CAPS");
  if (env == nullptr) return base;
  return parse_caps(env, base);
}

std::string to_string(Caps const& caps) {
  std::ostringstream os;
  os << "stream=" << caps.stream << ",stored=" << caps.stored
     << ",coset_index=" << caps.coset_index << ",classes=" << caps.classes
     << ",thompson=" << caps.thompson;
  return os.str();
}

}  // namespace semiprim
