#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spg/ids.hpp"

namespace spg {

struct Edge {
  std::string id;
  std::string tail;
  std::string head;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Abstract multigraph: loops and parallel edges allowed, plus vertexless circle
/// components. Construction checks the incidence invariants and normalizes the
/// element order, so two graphs with the same elements compare equal.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws std::invalid_argument on duplicate ids or edges with unknown endpoints.
  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges,
             std::vector<std::string> circles = {});

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& circles() const { return circles_; }

  bool has_vertex(std::string_view v) const;
  const Edge* find_edge(std::string_view id) const;
  bool has_circle(std::string_view id) const;

  /// Loops contribute two to the degree of their vertex.
  std::size_t degree(std::string_view v) const;

  bool empty() const { return vertices_.empty() && edges_.empty() && circles_.empty(); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::string> circles_;
};

/// Same vertex ids, same multiset of (unordered) edge endpoint pairs and the same
/// number of circles. Edge and circle ids are ignored.
bool same_incidence(const Multigraph& a, const Multigraph& b);

std::string summarize(const Multigraph& g);

struct Component {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<std::string> circles;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Connected components, ordered by their smallest vertex, then by circle id.
std::vector<Component> components(const Multigraph& g);

struct CutPointReport {
  bool connected = false;
  std::vector<std::string> cut_vertices;
  std::vector<std::string> bridge_edges;
  /// (vertex, loop edge) for every loop sitting at a vertex of degree >= 3.
  std::vector<std::pair<std::string, std::string>> loops_at_branch_vertices;

  bool empty() const {
    return cut_vertices.empty() && bridge_edges.empty() && loops_at_branch_vertices.empty();
  }
  friend bool operator==(const CutPointReport&, const CutPointReport&) = default;
};

/// Points of |g| whose removal increases the number of components, found by
/// articulation analysis of the graph with every edge subdivided twice.
CutPointReport cut_points(const Multigraph& g);

std::string describe(const CutPointReport& report);

/// Connected (a lone vertex or lone circle counts) and free of topological cut points.
bool is_base_irreducible(const Multigraph& g);

/// Whether the standard planar embedding of g admits a separating or cutting sphere.
bool trivial_embedding_reducible(const Multigraph& g);

struct Puncture {
  std::string edge;  ///< edge or circle id
  int position = 0;  ///< distinct per edge; order along the edge
  friend bool operator==(const Puncture&, const Puncture&) = default;
};

/// Quotient of g by a disk bounded by `cycle` (a simple closed walk of edges, or a
/// single circle id) whose interior meets g at `punctures`. The collapsed point gets
/// the smallest unused id of the form v<k>. Pieces of punctured edge e are named
/// e/0, e/1, ... in position order. Throws std::invalid_argument on a bad cycle or
/// a puncture on the cycle.
Multigraph contract_abstract(const Multigraph& g, const std::vector<std::string>& cycle,
                             const std::vector<Puncture>& punctures);

}  // namespace spg
