#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spg/multigraph.hpp"

namespace spg {

/// One end of an arc. As a dart it means "leave the node holding this end along the arc".
struct ArcEnd {
  int arc = 0;
  int end = 0;

  ArcEnd other() const { return {arc, 1 - end}; }
  auto operator<=>(const ArcEnd&) const = default;
};

std::string to_string(ArcEnd e);

enum class NodeKind { vertex, crossing };

/// Which opposite-slot pair of a crossing carries the over-strand.
enum class OverPair { slots02, slots13 };

/// A graph vertex or a crossing. Slots are listed counterclockwise; a crossing has
/// exactly four, and slots 0/2 and 1/3 each belong to one strand.
struct Node {
  std::string id;
  NodeKind kind = NodeKind::vertex;
  std::vector<ArcEnd> slots;
  OverPair over = OverPair::slots02;

  bool is_crossing() const { return kind == NodeKind::crossing; }
  bool slot_is_over(std::size_t slot) const {
    return (slot % 2 == 0) == (over == OverPair::slots02);
  }
  friend bool operator==(const Node&, const Node&) = default;
};

struct SlotRef {
  std::size_t node = 0;
  std::size_t slot = 0;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

/// Spatial-graph diagram on the 2-sphere stored as a combinatorial map.
/// Construction accepts any node list; use validate() before relying on the
/// queries below, which assume every arc end is placed exactly once.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Node> nodes, std::map<int, std::string> labels = {});

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  std::optional<std::size_t> find_node(std::string_view id) const;

  /// Arc labels (display names for the strand through that arc).
  const std::map<int, std::string>& labels() const { return labels_; }

  /// Where an arc end sits (first placement if duplicated).
  std::optional<SlotRef> locate(ArcEnd e) const;
  SlotRef where(ArcEnd e) const;
  ArcEnd at(SlotRef s) const { return nodes_.at(s.node).slots.at(s.slot); }

  /// The arc end one step counterclockwise around the same node.
  ArcEnd next_ccw(ArcEnd e) const;
  /// Face permutation: follow the arc to its far end, then turn to the next slot.
  ArcEnd face_next(ArcEnd e) const { return next_ccw(e.other()); }

  /// Arc ids present in any slot, ascending.
  std::vector<int> arcs() const;
  std::size_t crossing_count() const;
  std::size_t vertex_count() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.nodes_ == b.nodes_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<Node> nodes_;
  std::map<int, std::string> labels_;
  std::map<ArcEnd, SlotRef> where_;
};

enum class IssueKind {
  empty_diagram,
  duplicate_arc_end,
  dangling_arc_end,
  bad_crossing_degree,
  duplicate_node_id,
  disconnected,
  nonplanar,
};

std::string to_string(IssueKind kind);

struct Issue {
  IssueKind kind;
  std::string location;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;
  std::size_t vertices = 0;  ///< nodes
  std::size_t arcs = 0;
  std::size_t faces = 0;
  bool ok() const { return issues.empty(); }
  bool has(IssueKind kind) const;
};

ValidationReport validate(const Diagram& d);
std::string describe(const ValidationReport& report);

/// Number of connected pieces of the node/arc incidence structure. Requires
/// every arc end to be placed exactly once.
std::size_t map_component_count(const Diagram& d);

struct Face {
  ArcEnd canonical;              ///< smallest dart of the orbit
  std::vector<ArcEnd> boundary;  ///< face-traversal order starting at `canonical`
};

/// All faces, sorted by canonical dart. Face k (1-based) is printed F<k>.
/// A diagram without arcs has a single empty face.
std::vector<Face> faces(const Diagram& d);

/// dart -> index into faces(d)
std::map<ArcEnd, std::size_t> face_index(const std::vector<Face>& fs);

enum class StrandKind { open, closed };

/// A maximal run of arcs passing straight through crossings.
struct Strand {
  int id = 0;  ///< 1-based; printed s<id>
  StrandKind kind = StrandKind::open;
  /// Traversal order. For open strands the first dart leaves `start` and the walk
  /// ends at `finish`; closed strands start on their smallest arc, from end 0.
  std::vector<ArcEnd> darts;
  std::optional<std::size_t> start;
  std::optional<std::size_t> finish;

  std::vector<int> arcs() const;
  std::string name() const { return "s" + std::to_string(id); }
};

/// Strands ordered by their smallest arc id.
std::vector<Strand> strands(const Diagram& d);

/// Graph vertices become vertices, open strands become edges s<k>, closed
/// strands become circles s<k>.
Multigraph abstract(const Diagram& d);

/// Relabels arcs a1, a2, ... by first appearance in node order (nodes sorted by
/// id, slots in order); the end met first becomes end 0.
Diagram canonicalize(const Diagram& d);

}  // namespace spg
