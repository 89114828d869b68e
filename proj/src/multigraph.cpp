#include "spg/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

bool natural_less_edge(const Edge& a, const Edge& b) { return natural_less(a.id, b.id); }

template <typename Range>
std::string join(const Range& items, std::string_view sep = ",") {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

}  // namespace

Multigraph::Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges,
                       std::vector<std::string> circles)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), circles_(std::move(circles)) {
  std::sort(vertices_.begin(), vertices_.end(), natural_less);
  std::sort(edges_.begin(), edges_.end(), natural_less_edge);
  std::sort(circles_.begin(), circles_.end(), natural_less);
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("duplicate vertex id");
  }
  IdSet strand_ids;
  for (const auto& e : edges_) {
    if (!has_vertex(e.tail) || !has_vertex(e.head)) {
      throw std::invalid_argument("edge " + e.id + " has an endpoint that is not a vertex");
    }
    if (!strand_ids.insert(e.id).second) throw std::invalid_argument("duplicate edge id " + e.id);
  }
  for (const auto& c : circles_) {
    if (!strand_ids.insert(c).second) throw std::invalid_argument("duplicate edge/circle id " + c);
  }
}

bool Multigraph::has_vertex(std::string_view v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v, NaturalLess{});
}

const Edge* Multigraph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view key) { return natural_less(e.id, key); });
  if (it != edges_.end() && it->id == id) return &*it;
  return nullptr;
}

bool Multigraph::has_circle(std::string_view id) const {
  return std::binary_search(circles_.begin(), circles_.end(), id, NaturalLess{});
}

std::size_t Multigraph::degree(std::string_view v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (e.tail == v) ++d;
    if (e.head == v) ++d;
  }
  return d;
}

bool same_incidence(const Multigraph& a, const Multigraph& b) {
  if (a.vertices() != b.vertices() || a.circles().size() != b.circles().size()) return false;
  auto pairs = [](const Multigraph& g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : g.edges()) {
      auto p = std::minmax(e.tail, e.head, natural_less);
      out.emplace_back(p.first, p.second);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return pairs(a) == pairs(b);
}

std::string summarize(const Multigraph& g) {
  std::ostringstream os;
  os << g.vertices().size() << " vertices, " << g.edges().size() << " edges, " << g.circles().size()
     << " circles";
  if (!g.edges().empty()) {
    os << " [";
    bool first = true;
    for (const auto& e : g.edges()) {
      if (!first) os << ' ';
      first = false;
      os << e.id << ':' << e.tail << '-' << e.head;
    }
    os << ']';
  }
  return os.str();
}

std::vector<Component> components(const Multigraph& g) {
  const auto& vs = g.vertices();
  std::map<std::string, std::size_t, NaturalLess> index;
  for (std::size_t i = 0; i < vs.size(); ++i) index.emplace(vs[i], i);
  DisjointSets sets(vs.size());
  for (const auto& e : g.edges()) sets.unite(index.at(e.tail), index.at(e.head));

  std::map<std::size_t, Component> by_root;
  std::vector<std::size_t> root_order;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto root = sets.find(i);
    auto [it, inserted] = by_root.try_emplace(root);
    if (inserted) root_order.push_back(root);
    it->second.vertices.push_back(vs[i]);
  }
  for (const auto& e : g.edges()) by_root[sets.find(index.at(e.tail))].edges.push_back(e.id);

  std::vector<Component> out;
  out.reserve(root_order.size() + g.circles().size());
  for (auto root : root_order) out.push_back(std::move(by_root[root]));
  for (const auto& c : g.circles()) out.push_back(Component{{}, {}, {c}});
  return out;
}

CutPointReport cut_points(const Multigraph& g) {
  CutPointReport report;
  report.connected = components(g).size() == 1;

  // Subdivide every edge twice: vertex i -> node i, edge k -> nodes n+2k, n+2k+1.
  const auto& vs = g.vertices();
  const auto& es = g.edges();
  const std::size_t n = vs.size();
  const std::size_t total = n + 2 * es.size();
  std::map<std::string, std::size_t, NaturalLess> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(vs[i], i);
  std::vector<std::vector<std::size_t>> adj(total);
  auto link = [&adj](std::size_t a, std::size_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (std::size_t k = 0; k < es.size(); ++k) {
    const std::size_t s1 = n + 2 * k;
    const std::size_t s2 = s1 + 1;
    link(index.at(es[k].tail), s1);
    link(s1, s2);
    link(s2, index.at(es[k].head));
  }

  // Iterative Tarjan articulation points; the subdivided graph is simple.
  std::vector<int> disc(total, -1);
  std::vector<int> low(total, 0);
  std::vector<std::size_t> parent(total, total);
  std::vector<bool> articulation(total, false);
  int timer = 0;
  struct Frame {
    std::size_t node;
    std::size_t next;
    std::size_t children;
  };
  for (std::size_t root = 0; root < total; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& top = stack.back();
      if (top.next < adj[top.node].size()) {
        const std::size_t w = adj[top.node][top.next++];
        if (disc[w] == -1) {
          parent[w] = top.node;
          disc[w] = low[w] = timer++;
          ++top.children;
          stack.push_back({w, 0, 0});
        } else if (w != parent[top.node]) {
          low[top.node] = std::min(low[top.node], disc[w]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) articulation[done.node] = true;
        break;
      }
      const std::size_t p = stack.back().node;
      low[p] = std::min(low[p], low[done.node]);
      if (stack.size() >= 2 && low[done.node] >= disc[p]) articulation[p] = true;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (articulation[i]) report.cut_vertices.push_back(vs[i]);
  }
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (!es[k].is_loop() && (articulation[n + 2 * k] || articulation[n + 2 * k + 1])) {
      report.bridge_edges.push_back(es[k].id);
    }
    if (es[k].is_loop() && g.degree(es[k].tail) >= 3) {
      report.loops_at_branch_vertices.emplace_back(es[k].tail, es[k].id);
    }
  }
  return report;
}

std::string describe(const CutPointReport& report) {
  std::vector<std::string> loops;
  for (const auto& [v, e] : report.loops_at_branch_vertices) loops.push_back(v + ":" + e);
  std::ostringstream os;
  os << "connected=" << (report.connected ? "yes" : "no") << " cut_vertices={"
     << join(report.cut_vertices) << "} bridges={" << join(report.bridge_edges)
     << "} loops_at_branch_vertices={" << join(loops) << "}";
  return os.str();
}

bool is_base_irreducible(const Multigraph& g) {
  if (g.empty()) return false;
  const auto report = cut_points(g);
  return report.connected && report.empty();
}

bool trivial_embedding_reducible(const Multigraph& g) {
  const auto report = cut_points(g);
  return !report.connected || !report.empty();
}

Multigraph contract_abstract(const Multigraph& g, const std::vector<std::string>& cycle,
                             const std::vector<Puncture>& punctures) {
  if (cycle.empty()) throw std::invalid_argument("empty cycle");

  IdSet cycle_ids(cycle.begin(), cycle.end());
  if (cycle_ids.size() != cycle.size()) throw std::invalid_argument("cycle repeats an edge");

  std::set<std::string, NaturalLess> cycle_vertices;
  std::string collapsed_circle;
  if (cycle.size() == 1 && g.has_circle(cycle.front())) {
    collapsed_circle = cycle.front();
  } else {
    std::map<std::string, int, NaturalLess> cycle_degree;
    for (const auto& id : cycle) {
      const Edge* e = g.find_edge(id);
      if (e == nullptr) throw std::invalid_argument("cycle element " + id + " is not an edge");
      ++cycle_degree[e->tail];
      ++cycle_degree[e->head];
    }
    for (const auto& [v, d] : cycle_degree) {
      if (d != 2) throw std::invalid_argument("cycle is not simple and closed at vertex " + v);
      cycle_vertices.insert(v);
    }
    // degree 2 everywhere plus connectivity makes it a single simple cycle
    std::vector<std::string> cv(cycle_vertices.begin(), cycle_vertices.end());
    std::map<std::string, std::size_t, NaturalLess> idx;
    for (std::size_t i = 0; i < cv.size(); ++i) idx.emplace(cv[i], i);
    DisjointSets sets(cv.size());
    for (const auto& id : cycle) {
      const Edge* e = g.find_edge(id);
      sets.unite(idx.at(e->tail), idx.at(e->head));
    }
    for (std::size_t i = 1; i < cv.size(); ++i) {
      if (sets.find(i) != sets.find(0)) throw std::invalid_argument("cycle is not connected");
    }
  }

  std::map<std::string, std::vector<int>, NaturalLess> positions;
  for (const auto& p : punctures) {
    if (cycle_ids.contains(p.edge)) throw std::invalid_argument("puncture on cycle edge " + p.edge);
    if (g.find_edge(p.edge) == nullptr && !g.has_circle(p.edge)) {
      throw std::invalid_argument("puncture on unknown edge " + p.edge);
    }
    positions[p.edge].push_back(p.position);
  }
  for (auto& [edge, pos] : positions) {
    std::sort(pos.begin(), pos.end());
    if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) {
      throw std::invalid_argument("repeated puncture position on " + edge);
    }
  }

  IdSet used;
  std::vector<std::string> vertices;
  for (const auto& v : g.vertices()) {
    if (!cycle_vertices.contains(v)) {
      used.insert(v);
      vertices.push_back(v);
    }
  }
  const std::string star = fresh_id("v", used);
  vertices.push_back(star);
  auto image = [&](const std::string& v) { return cycle_vertices.contains(v) ? star : v; };

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (cycle_ids.contains(e.id)) continue;
    auto it = positions.find(e.id);
    if (it == positions.end()) {
      edges.push_back({e.id, image(e.tail), image(e.head)});
      continue;
    }
    const std::size_t k = it->second.size();
    for (std::size_t piece = 0; piece <= k; ++piece) {
      const std::string tail = piece == 0 ? image(e.tail) : star;
      const std::string head = piece == k ? image(e.head) : star;
      edges.push_back({e.id + "/" + std::to_string(piece), tail, head});
    }
  }
  std::vector<std::string> circles;
  for (const auto& c : g.circles()) {
    if (c == collapsed_circle) continue;
    auto it = positions.find(c);
    if (it == positions.end()) {
      circles.push_back(c);
      continue;
    }
    for (std::size_t piece = 0; piece < it->second.size(); ++piece) {
      edges.push_back({c + "/" + std::to_string(piece), star, star});
    }
  }
  return Multigraph(std::move(vertices), std::move(edges), std::move(circles));
}

}  // namespace spg
