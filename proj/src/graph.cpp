#include "semiprim/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <string>

#include "semiprim/error.hpp"

namespace semiprim {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> const& edges)
    : adj_(vertex_count), edges_(edges.size()) {
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw InvalidArgument("repeated edge");
    }
  }
}

bool Graph::has_edge(Point u, Point v) const {
  auto const& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Point u = 0; u < adj_.size(); ++u) {
    for (Point v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::valency() const {
  if (adj_.empty()) return 0;
  std::size_t const d = adj_[0].size();
  for (auto const& nb : adj_) {
    if (nb.size() != d) return 0;
  }
  return d;
}

bool Graph::is_connected() const {
  if (adj_.empty()) return true;
  std::vector<char> seen(adj_.size(), 0);
  std::vector<Point> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point u = stack.back();
    stack.pop_back();
    for (Point v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == adj_.size();
}

std::size_t Graph::girth() const {
  std::size_t best = 0;
  std::size_t const n = adj_.size();
  std::vector<std::size_t> dist(n);
  std::vector<Point> parent(n);
  for (Point s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[s] = 0;
    parent[s] = s;
    std::deque<Point> queue{s};
    while (!queue.empty()) {
      Point u = queue.front();
      queue.pop_front();
      for (Point v : adj_[u]) {
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          std::size_t const len = dist[u] + dist[v] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

bool Graph::preserved_by(PermGroup const& g) const {
  if (g.degree() != adj_.size()) return false;
  auto const all = edges();
  for (auto const& s : g.generators()) {
    for (auto [u, v] : all) {
      if (!has_edge(s[u], s[v])) return false;
    }
  }
  return true;
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  bool explicit_n = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key;
      std::size_t value;
      if (ls >> key >> value && key == "vertices") {
        n = value;
        explicit_n = true;
      }
      continue;
    }
    long long u, v;
    std::istringstream fs(first);
    std::string rest;
    if (!(fs >> u) || !(ls >> v) || (ls >> rest) || u < 0 || v < 0) {
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": expected two vertex numbers");
    }
    edges.emplace_back(static_cast<Point>(u), static_cast<Point>(v));
    if (!explicit_n) n = std::max<std::size_t>(n, std::max(u, v) + 1);
  }
  try {
    return Graph(n, edges);
  } catch (InvalidArgument const& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

void write_edge_list(std::ostream& out, Graph const& g) {
  out << "# vertices " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

CosetGraph coset_graph(PermGroup const& g, PermGroup const& h, Perm const& a,
                       Caps const& caps) {
  if (!g.contains(a)) throw InvalidArgument("a is not in G");
  if (h.contains(a)) throw InvalidArgument("a lies in H");
  if (!h.contains(a * a)) throw InvalidArgument("a^2 is not in H");
  std::vector<Perm> gens = h.generators();
  gens.push_back(a);
  if (PermGroup(g.degree(), std::move(gens)).order() != g.order()) {
    throw InvalidArgument("<H, a> is a proper subgroup: the coset graph is disconnected");
  }
  CosetAction ca(g, h, caps);
  // Γ(H) is the H-orbit of the coset Ha
  std::vector<Perm> hgens;
  for (auto const& s : h.generators()) hgens.push_back(ca.hom()(s));
  std::vector<Point> base_nb{static_cast<Point>(ca.coset_of(a))};
  std::set<Point> seen(base_nb.begin(), base_nb.end());
  for (std::size_t i = 0; i < base_nb.size(); ++i) {
    for (auto const& s : hgens) {
      if (seen.insert(s[base_nb[i]]).second) base_nb.push_back(s[base_nb[i]]);
    }
  }
  std::set<Edge> edges;
  for (std::size_t v = 0; v < ca.index(); ++v) {
    Perm const t = ca.hom()(ca.reps()[v]);
    for (Point n : base_nb) {
      Point const u = t[n];
      edges.emplace(std::min<Point>(u, v), std::max<Point>(u, v));
    }
  }
  Graph graph(ca.index(), {edges.begin(), edges.end()});
  return CosetGraph{std::move(graph), std::move(ca)};
}

}  // namespace semiprim
