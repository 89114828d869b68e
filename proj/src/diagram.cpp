#include "spg/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spg {

std::string to_string(ArcEnd e) { return "a" + std::to_string(e.arc) + "." + std::to_string(e.end); }

Diagram::Diagram(std::vector<Node> nodes, std::map<int, std::string> labels)
    : nodes_(std::move(nodes)), labels_(std::move(labels)) {
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    for (std::size_t s = 0; s < nodes_[n].slots.size(); ++s) {
      where_.try_emplace(nodes_[n].slots[s], SlotRef{n, s});
    }
  }
}

std::optional<std::size_t> Diagram::find_node(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<SlotRef> Diagram::locate(ArcEnd e) const {
  auto it = where_.find(e);
  if (it == where_.end()) return std::nullopt;
  return it->second;
}

SlotRef Diagram::where(ArcEnd e) const {
  auto it = where_.find(e);
  if (it == where_.end()) throw std::out_of_range("arc end " + to_string(e) + " is not placed");
  return it->second;
}

ArcEnd Diagram::next_ccw(ArcEnd e) const {
  const SlotRef s = where(e);
  const auto& slots = nodes_[s.node].slots;
  return slots[(s.slot + 1) % slots.size()];
}

std::vector<int> Diagram::arcs() const {
  std::set<int> ids;
  for (const auto& [e, s] : where_) ids.insert(e.arc);
  return {ids.begin(), ids.end()};
}

std::size_t Diagram::crossing_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_crossing(); }));
}

std::size_t Diagram::vertex_count() const { return nodes_.size() - crossing_count(); }

std::string to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::empty_diagram: return "empty-diagram";
    case IssueKind::duplicate_arc_end: return "duplicate-arc-end";
    case IssueKind::dangling_arc_end: return "dangling-arc-end";
    case IssueKind::bad_crossing_degree: return "bad-crossing-degree";
    case IssueKind::duplicate_node_id: return "duplicate-node-id";
    case IssueKind::disconnected: return "disconnected";
    case IssueKind::nonplanar: return "nonplanar";
  }
  return "unknown";
}

bool ValidationReport::has(IssueKind kind) const {
  return std::any_of(issues.begin(), issues.end(), [kind](const Issue& i) { return i.kind == kind; });
}

namespace {

std::vector<std::size_t> node_components(const Diagram& d, std::size_t& count) {
  const std::size_t n = d.nodes().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : d.node(i).slots) {
      if (auto far = d.locate(e.other())) parent[find(i)] = find(far->node);
    }
  }
  std::vector<std::size_t> comp(n);
  std::map<std::size_t, std::size_t> label;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = label.try_emplace(find(i), label.size());
    comp[i] = it->second;
  }
  count = label.size();
  return comp;
}

/// The arc end across a crossing from `e`; nullopt at graph vertices.
std::optional<ArcEnd> through(const Diagram& d, ArcEnd e) {
  const SlotRef s = d.where(e);
  const Node& node = d.node(s.node);
  if (!node.is_crossing()) return std::nullopt;
  return node.slots[(s.slot + 2) % 4];
}

}  // namespace

std::size_t map_component_count(const Diagram& d) {
  std::size_t count = 0;
  node_components(d, count);
  return count;
}

ValidationReport validate(const Diagram& d) {
  ValidationReport report;
  report.vertices = d.nodes().size();
  if (d.nodes().empty()) {
    report.issues.push_back({IssueKind::empty_diagram, "", "diagram has no nodes"});
    return report;
  }

  std::set<std::string> ids;
  std::map<ArcEnd, int> seen;
  for (const auto& node : d.nodes()) {
    if (!ids.insert(node.id).second) {
      report.issues.push_back({IssueKind::duplicate_node_id, node.id, "node id used twice"});
    }
    if (node.is_crossing() && node.slots.size() != 4) {
      report.issues.push_back({IssueKind::bad_crossing_degree, node.id,
                               "crossing has " + std::to_string(node.slots.size()) + " slots"});
    }
    for (const auto& e : node.slots) ++seen[e];
  }
  std::set<int> arc_ids;
  for (const auto& [e, count] : seen) {
    arc_ids.insert(e.arc);
    if (count > 1) {
      report.issues.push_back({IssueKind::duplicate_arc_end, to_string(e),
                               "arc end placed " + std::to_string(count) + " times"});
    }
    if (!seen.contains(e.other())) {
      report.issues.push_back({IssueKind::dangling_arc_end, to_string(e),
                               "arc end " + to_string(e.other()) + " is missing"});
    }
  }
  report.arcs = arc_ids.size();
  if (!report.ok()) return report;

  std::size_t components = 0;
  node_components(d, components);
  if (components != 1) {
    report.issues.push_back({IssueKind::disconnected, "",
                             "incidence map has " + std::to_string(components) + " components"});
  }
  // an arcless node is a component with one face and no darts
  report.faces = d.arcs().empty() ? 0 : faces(d).size();
  report.faces += static_cast<std::size_t>(std::count_if(
      d.nodes().begin(), d.nodes().end(), [](const Node& n) { return n.slots.empty(); }));
  const long euler = static_cast<long>(report.vertices) - static_cast<long>(report.arcs) +
                     static_cast<long>(report.faces);
  if (euler != 2 * static_cast<long>(components)) {
    report.issues.push_back({IssueKind::nonplanar, "",
                             "V - E + F = " + std::to_string(euler) + ", expected " +
                                 std::to_string(2 * components)});
  }
  return report;
}

std::string describe(const ValidationReport& report) {
  std::ostringstream os;
  os << "nodes=" << report.vertices << " arcs=" << report.arcs << " faces=" << report.faces;
  if (report.ok()) {
    os << " euler=" << (static_cast<long>(report.vertices) - static_cast<long>(report.arcs) +
                        static_cast<long>(report.faces))
       << "\nvalid\n";
    return os.str();
  }
  os << '\n';
  for (const auto& issue : report.issues) {
    os << "error: " << to_string(issue.kind);
    if (!issue.location.empty()) os << " at " << issue.location;
    os << ": " << issue.message << '\n';
  }
  os << "invalid\n";
  return os.str();
}

std::vector<Face> faces(const Diagram& d) {
  std::vector<Face> out;
  const auto arcs = d.arcs();
  if (arcs.empty()) {
    out.push_back(Face{});
    return out;
  }
  std::set<ArcEnd> visited;
  for (int a : arcs) {
    for (int end = 0; end < 2; ++end) {
      const ArcEnd start{a, end};
      if (visited.contains(start)) continue;
      Face face;
      face.canonical = start;
      ArcEnd cur = start;
      do {
        visited.insert(cur);
        face.boundary.push_back(cur);
        cur = d.face_next(cur);
      } while (cur != start);
      out.push_back(std::move(face));
    }
  }
  // darts are visited in ascending order, so each orbit starts at its smallest dart
  return out;
}

std::map<ArcEnd, std::size_t> face_index(const std::vector<Face>& fs) {
  std::map<ArcEnd, std::size_t> index;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (const auto& e : fs[i].boundary) index.emplace(e, i);
  }
  return index;
}

std::vector<int> Strand::arcs() const {
  std::vector<int> out;
  out.reserve(darts.size());
  for (const auto& e : darts) out.push_back(e.arc);
  return out;
}

std::vector<Strand> strands(const Diagram& d) {
  std::vector<Strand> out;
  std::set<int> visited;
  for (int a : d.arcs()) {
    if (visited.contains(a)) continue;

    // walk backwards to the strand's tail or around the circle
    ArcEnd first{a, 0};
    bool closed = false;
    while (true) {
      auto prev = through(d, first);
      if (!prev) break;
      first = prev->other();
      if (first == ArcEnd{a, 0}) {
        closed = true;
        break;
      }
    }

    Strand strand;
    strand.kind = closed ? StrandKind::closed : StrandKind::open;
    ArcEnd cur = first;
    while (true) {
      strand.darts.push_back(cur);
      auto next = through(d, cur.other());
      if (!next || *next == first) break;
      cur = *next;
    }
    if (!closed) {
      const ArcEnd reversed_start = strand.darts.back().other();
      if (reversed_start < strand.darts.front()) {
        std::vector<ArcEnd> rev;
        rev.reserve(strand.darts.size());
        for (auto it = strand.darts.rbegin(); it != strand.darts.rend(); ++it) rev.push_back(it->other());
        strand.darts = std::move(rev);
      }
      strand.start = d.where(strand.darts.front()).node;
      strand.finish = d.where(strand.darts.back().other()).node;
    }
    for (const auto& e : strand.darts) visited.insert(e.arc);
    strand.id = static_cast<int>(out.size()) + 1;
    out.push_back(std::move(strand));
  }
  return out;
}

Multigraph abstract(const Diagram& d) {
  std::vector<std::string> vertices;
  for (const auto& node : d.nodes()) {
    if (!node.is_crossing()) vertices.push_back(node.id);
  }
  std::vector<Edge> edges;
  std::vector<std::string> circles;
  for (const auto& s : strands(d)) {
    if (s.kind == StrandKind::closed) {
      circles.push_back(s.name());
    } else {
      edges.push_back({s.name(), d.node(*s.start).id, d.node(*s.finish).id});
    }
  }
  return Multigraph(std::move(vertices), std::move(edges), std::move(circles));
}

Diagram canonicalize(const Diagram& d) {
  std::vector<std::size_t> order(d.nodes().size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&d](std::size_t x, std::size_t y) {
    return natural_less(d.node(x).id, d.node(y).id);
  });

  std::map<int, ArcEnd> renamed;  // old arc -> (new arc, old end that became end 0)
  std::vector<Node> nodes;
  nodes.reserve(order.size());
  for (auto i : order) {
    Node node = d.node(i);
    for (auto& slot : node.slots) {
      auto [it, inserted] = renamed.try_emplace(slot.arc, ArcEnd{static_cast<int>(renamed.size()) + 1, slot.end});
      slot = ArcEnd{it->second.arc, slot.end == it->second.end ? 0 : 1};
    }
    nodes.push_back(std::move(node));
  }
  std::map<int, std::string> labels;
  for (const auto& [arc, text] : d.labels()) {
    if (auto it = renamed.find(arc); it != renamed.end()) labels.emplace(it->second.arc, text);
  }
  return Diagram(std::move(nodes), std::move(labels));
}

}  // namespace spg
