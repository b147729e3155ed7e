#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

#include "semiprim/action.hpp"
#include "semiprim/caps.hpp"
#include "semiprim/perm.hpp"
#include "semiprim/perm_group.hpp"

namespace semiprim {

using Edge = std::pair<Point, Point>;

/// Finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument on loops, repeated edges or out-of-range ends.
  Graph(std::size_t vertex_count, std::vector<Edge> const& edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  /// Γ(v), sorted.
  std::vector<Point> const& neighbours(Point v) const { return adj_.at(v); }
  bool has_edge(Point u, Point v) const;
  /// Each edge once, as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  /// Common valency, or 0 if the graph is not regular.
  std::size_t valency() const;
  bool is_connected() const;
  /// Length of a shortest cycle; 0 for forests.
  std::size_t girth() const;
  /// True if every generator maps edges to edges.
  bool preserved_by(PermGroup const& g) const;

  bool operator==(Graph const&) const = default;

 private:
  std::vector<std::vector<Point>> adj_;
  std::size_t edges_ = 0;
};

/// "u v" per line, 0-based; blank lines and lines starting with '#'
/// ignored. The vertex count is one more than the largest endpoint unless
/// a "# vertices N" line is present. Throws ParseError.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, Graph const& g);

/// The graph on the right cosets of H in G with Hx ~ Hy iff y x^-1 lies in
/// H a H, together with G acting on it.
struct CosetGraph {
  Graph graph;
  CosetAction action;
};

/// Needs a^2 in H so that adjacency is symmetric, a not in H, and
/// <H, a> = G so that the graph is connected; throws InvalidArgument
/// otherwise.
CosetGraph coset_graph(PermGroup const& g, PermGroup const& h, Perm const& a,
                       Caps const& caps = default_caps());

}  // namespace semiprim
