#include "semiprim/fixtures.hpp"

#include <charconv>

#include <json.hpp>

#include "fixture_data.hpp"
#include "semiprim/error.hpp"
#include "semiprim/field.hpp"

namespace semiprim {

namespace {

Fixture from_bundle(char const* text) {
  auto const j = nlohmann::json::parse(text);
  std::size_t const n = j.at("vertices").get<std::size_t>();
  std::vector<Edge> edges;
  for (auto const& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<Point>(), e.at(1).get<Point>());
  }
  std::vector<Perm> gens;
  for (auto const& g : j.at("generators")) {
    gens.emplace_back(g.get<std::vector<Point>>());
  }
  Fixture f{j.at("name").get<std::string>(), Graph(n, edges),
            PermGroup(n, std::move(gens))};
  if (f.group.order() != j.at("order").get<std::uint64_t>()) {
    throw std::logic_error("fixture " + f.name + ": group order mismatch");
  }
  return f;
}

std::vector<Point> iota(std::size_t from, std::size_t to) {
  std::vector<Point> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(static_cast<Point>(i));
  return out;
}

}  // namespace

Fixture heawood() { return from_bundle(fixture_data::heawood); }
Fixture tutte_coxeter() { return from_bundle(fixture_data::tutte_coxeter); }
Fixture petersen() { return from_bundle(fixture_data::petersen); }

Fixture complete(std::size_t n) {
  if (n < 2) throw InvalidArgument("complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (Point u = 0; u < n; ++u)
    for (Point v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Fixture{"k" + std::to_string(n), Graph(n, edges), symmetric_group(n)};
}

Fixture complete_bipartite(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete bipartite graph needs n >= 1");
  std::vector<Edge> edges;
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) edges.emplace_back(u, static_cast<Point>(n + v));
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(2 * n, {iota(0, n)}));
    gens.push_back(Perm::from_cycles(2 * n, {{0, 1}}));
  }
  std::vector<Point> swap(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = static_cast<Point>(n + i);
    swap[n + i] = static_cast<Point>(i);
  }
  gens.emplace_back(std::move(swap));
  std::string const s = std::to_string(n);
  return Fixture{"k" + s + "_" + s, Graph(2 * n, edges),
                 PermGroup(2 * n, std::move(gens))};
}

Fixture cayley_f16_quintic() {
  SmallField f(2, 4);
  std::vector<SmallField::Elem> conn;
  for (std::uint64_t k = 0; k < 5; ++k) conn.push_back(f.primitive_power(3 * k));
  std::vector<Edge> edges;
  for (SmallField::Elem u = 0; u < 16; ++u) {
    for (auto s : conn) {
      SmallField::Elem v = f.add(u, s);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  auto map = [&](auto fn) {
    std::vector<Point> img(16);
    for (SmallField::Elem u = 0; u < 16; ++u) img[u] = fn(u);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (std::uint32_t b = 0; b < 4; ++b) {
    gens.push_back(map([&](auto u) { return f.add(u, f.basis(b)); }));
  }
  gens.push_back(map([&](auto u) { return f.mul(u, conn[1]); }));
  gens.push_back(map([&](auto u) { return f.mul(u, u); }));
  Fixture out{"f16", Graph(16, edges), PermGroup(16, std::move(gens))};
  if (out.group.order() != 320) {
    throw std::logic_error("f16 fixture: group order mismatch");
  }
  return out;
}

std::vector<std::string> fixture_names() {
  return {"heawood", "tutte_coxeter", "petersen", "f16", "k4", "k3_3"};
}

Fixture fixture_by_name(std::string_view name) {
  if (name == "heawood") return heawood();
  if (name == "tutte_coxeter") return tutte_coxeter();
  if (name == "petersen") return petersen();
  if (name == "f16" || name == "cayley_f16_quintic") return cayley_f16_quintic();
  auto number = [](std::string_view s, std::size_t& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size() && out > 0 && out <= 64;
  };
  if (name.size() > 1 && name[0] == 'k') {
    std::string_view rest = name.substr(1);
    std::size_t n = 0, m = 0;
    auto us = rest.find('_');
    if (us == std::string_view::npos) {
      if (number(rest, n)) return complete(n);
    } else if (number(rest.substr(0, us), n) &&
               number(rest.substr(us + 1), m) && n == m) {
      return complete_bipartite(n);
    }
  }
  throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace semiprim
