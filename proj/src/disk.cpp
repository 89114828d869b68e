#include "spg/disk.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "collapse.hpp"
#include "spg/sgd.hpp"

namespace spg {

std::string to_string(const FaceRef& face) {
  if (const int* k = std::get_if<int>(&face)) return "F" + std::to_string(*k);
  return to_string(std::get<ArcEnd>(face));
}

std::string to_string(const DiskSpec& spec) {
  std::string out = "cycle=";
  for (std::size_t i = 0; i < spec.cycle.size(); ++i) {
    if (i > 0) out += ',';
    out += "s" + std::to_string(spec.cycle[i]);
  }
  return out + " face=" + to_string(spec.face);
}

namespace {

int parse_prefixed(std::string_view token, char prefix) {
  int value = 0;
  if (token.size() >= 2 && token[0] == prefix) {
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), value);
    if (ec == std::errc{} && ptr == token.data() + token.size() && value > 0) return value;
  }
  throw std::invalid_argument("expected " + std::string(1, prefix) + "<number>, got '" +
                              std::string(token) + "'");
}

}  // namespace

DiskSpec parse_disk_spec(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; is >> t;) tokens.push_back(t);
  std::size_t i = 0;
  if (!tokens.empty() && (tokens[0] == "disk" || tokens[0] == "step")) ++i;

  std::optional<std::vector<int>> cycle;
  std::optional<FaceRef> face;
  for (; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + tok + "'");
    const std::string_view key = std::string_view(tok).substr(0, eq);
    const std::string_view value = std::string_view(tok).substr(eq + 1);
    if (key == "cycle") {
      if (cycle) throw std::invalid_argument("cycle given twice");
      cycle.emplace();
      std::size_t pos = 0;
      while (pos <= value.size()) {
        auto comma = value.find(',', pos);
        if (comma == std::string_view::npos) comma = value.size();
        cycle->push_back(parse_prefixed(value.substr(pos, comma - pos), 's'));
        pos = comma + 1;
      }
    } else if (key == "face") {
      if (face) throw std::invalid_argument("face given twice");
      if (!value.empty() && value[0] == 'F') {
        face = parse_prefixed(value, 'F');
      } else {
        face = parse_arc_end(value);
      }
    } else {
      throw std::invalid_argument("unknown key '" + std::string(key) + "'");
    }
  }
  if (!cycle) throw std::invalid_argument("missing cycle=");
  if (!face) throw std::invalid_argument("missing face=");
  return {std::move(*cycle), *face};
}

std::string to_string(ChordKind kind) {
  switch (kind) {
    case ChordKind::piercing: return "piercing";
    case ChordKind::above: return "above";
    case ChordKind::below: return "below";
  }
  return "?";
}

std::string to_string(DiskErrorKind kind) {
  switch (kind) {
    case DiskErrorKind::malformed_spec: return "malformed-spec";
    case DiskErrorKind::cycle_self_crossing: return "cycle-self-crossing";
    case DiskErrorKind::region_not_disk: return "region-not-disk";
    case DiskErrorKind::vertex_inside_region: return "vertex-inside-region";
    case DiskErrorKind::chords_cross: return "chords-cross";
    case DiskErrorKind::chord_unclassifiable: return "chord-unclassifiable";
    case DiskErrorKind::obstructed_chord: return "obstructed-chord";
    case DiskErrorKind::splits_diagram: return "splits-diagram";
  }
  return "?";
}

DiskError::DiskError(DiskErrorKind kind, const std::string& message)
    : std::runtime_error(to_string(kind) + ": " + message), kind_(kind) {}

std::size_t VerifiedDisk::puncture_count() const {
  return static_cast<std::size_t>(std::count_if(
      chords.begin(), chords.end(), [](const Chord& c) { return c.kind == ChordKind::piercing; }));
}

std::size_t VerifiedDisk::above_count() const {
  return static_cast<std::size_t>(
      std::count_if(chords.begin(), chords.end(), [](const Chord& c) { return c.kind == ChordKind::above; }));
}

std::size_t VerifiedDisk::below_count() const {
  return static_cast<std::size_t>(
      std::count_if(chords.begin(), chords.end(), [](const Chord& c) { return c.kind == ChordKind::below; }));
}

std::vector<Puncture> VerifiedDisk::punctures() const {
  std::vector<Puncture> out;
  for (const auto& c : chords) {
    if (c.kind == ChordKind::piercing) out.push_back({"s" + std::to_string(c.strand), c.position});
  }
  return out;
}

bool theorem_precondition(const VerifiedDisk& v) {
  return v.puncture_count() >= 1 || v.attachments.size() != 1;
}

namespace {

struct Context {
  explicit Context(const Diagram& diagram)
      : d(diagram), strands(spg::strands(diagram)), faces(spg::faces(diagram)), face_of(face_index(faces)) {}

  const Diagram& d;
  std::vector<Strand> strands;
  std::vector<Face> faces;
  std::map<ArcEnd, std::size_t> face_of;
};

[[noreturn]] void fail(DiskErrorKind kind, const std::string& message) { throw DiskError(kind, message); }

/// Darts of the boundary curve in walk order, strands taken in ascending id order.
std::vector<ArcEnd> cycle_walk(const Context& c, std::vector<int> cycle) {
  if (cycle.empty()) fail(DiskErrorKind::malformed_spec, "empty cycle");
  std::sort(cycle.begin(), cycle.end());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] < 1 || static_cast<std::size_t>(cycle[i]) > c.strands.size()) {
      fail(DiskErrorKind::malformed_spec, "no strand s" + std::to_string(cycle[i]));
    }
    if (i > 0 && cycle[i] == cycle[i - 1]) {
      fail(DiskErrorKind::malformed_spec, "strand s" + std::to_string(cycle[i]) + " listed twice");
    }
  }
  const auto strand = [&c](int id) -> const Strand& { return c.strands[static_cast<std::size_t>(id) - 1]; };

  if (cycle.size() == 1 && strand(cycle[0]).kind == StrandKind::closed) return strand(cycle[0]).darts;

  std::map<std::size_t, int> degree;
  for (int id : cycle) {
    const Strand& s = strand(id);
    if (s.kind == StrandKind::closed) {
      fail(DiskErrorKind::malformed_spec, "closed strand " + s.name() + " cannot share a cycle");
    }
    ++degree[*s.start];
    ++degree[*s.finish];
  }
  for (const auto& [node, deg] : degree) {
    if (deg != 2) {
      fail(DiskErrorKind::malformed_spec, "cycle is not a simple closed walk at " + c.d.node(node).id);
    }
  }

  std::vector<bool> used(cycle.size(), false);
  std::vector<ArcEnd> walk = strand(cycle[0]).darts;
  used[0] = true;
  const std::size_t home = *strand(cycle[0]).start;
  std::size_t at = *strand(cycle[0]).finish;
  while (at != home) {
    std::size_t next = cycle.size();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Strand& s = strand(cycle[i]);
      if (!used[i] && (*s.start == at || *s.finish == at)) {
        next = i;
        break;
      }
    }
    if (next == cycle.size()) fail(DiskErrorKind::malformed_spec, "cycle strands do not close up");
    used[next] = true;
    const Strand& s = strand(cycle[next]);
    if (*s.start == at) {
      walk.insert(walk.end(), s.darts.begin(), s.darts.end());
      at = *s.finish;
    } else {
      for (auto it = s.darts.rbegin(); it != s.darts.rend(); ++it) walk.push_back(it->other());
      at = *s.start;
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    fail(DiskErrorKind::malformed_spec, "cycle strands form more than one closed walk");
  }
  return walk;
}

std::vector<std::size_t> flood(const Context& c, const std::set<int>& cycle_arcs, std::size_t seed) {
  std::vector<bool> seen(c.faces.size(), false);
  std::deque<std::size_t> queue{seed};
  seen[seed] = true;
  std::vector<std::size_t> region;
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    region.push_back(f);
    for (const auto& h : c.faces[f].boundary) {
      if (cycle_arcs.contains(h.arc)) continue;
      const std::size_t g = c.face_of.at(h.other());
      if (!seen[g]) {
        seen[g] = true;
        queue.push_back(g);
      }
    }
  }
  std::sort(region.begin(), region.end());
  return region;
}

std::vector<std::size_t> ccw_range(std::size_t from, std::size_t to, std::size_t degree) {
  std::vector<std::size_t> out;
  for (std::size_t s = (from + 1) % degree; s != to; s = (s + 1) % degree) out.push_back(s);
  return out;
}

struct Event {
  int chord = -1;  // -1: a vertex's external arc end
  bool collapses = false;
  ArcEnd end;
};

VerifiedDisk verify(const Context& c, const DiskSpec& spec) {
  const Diagram& d = c.d;
  std::vector<ArcEnd> walk = cycle_walk(c, spec.cycle);
  const std::size_t m = walk.size();
  std::set<int> cycle_arcs;
  for (const auto& w : walk) cycle_arcs.insert(w.arc);

  std::map<std::size_t, int> visits;
  for (const auto& w : walk) {
    const std::size_t n = d.where(w.other()).node;
    if (++visits[n] > 1) {
      fail(d.node(n).is_crossing() ? DiskErrorKind::cycle_self_crossing : DiskErrorKind::malformed_spec,
           "boundary passes " + d.node(n).id + " twice");
    }
  }

  std::size_t seed = 0;
  if (const int* k = std::get_if<int>(&spec.face)) {
    if (*k < 1 || static_cast<std::size_t>(*k) > c.faces.size()) {
      fail(DiskErrorKind::malformed_spec, "no face F" + std::to_string(*k));
    }
    seed = static_cast<std::size_t>(*k) - 1;
  } else {
    auto it = c.face_of.find(std::get<ArcEnd>(spec.face));
    if (it == c.face_of.end()) fail(DiskErrorKind::malformed_spec, "no dart " + to_string(spec.face));
    seed = it->second;
  }
  const auto& seed_darts = c.faces[seed].boundary;
  if (std::none_of(seed_darts.begin(), seed_darts.end(),
                   [&](const ArcEnd& h) { return cycle_arcs.contains(h.arc); })) {
    fail(DiskErrorKind::malformed_spec, "face F" + std::to_string(seed + 1) + " does not touch the cycle");
  }

  const std::vector<std::size_t> region = flood(c, cycle_arcs, seed);
  const std::set<std::size_t> in_region(region.begin(), region.end());
  bool all_left = true, any_left = false, all_right = true, any_right = false;
  for (const auto& w : walk) {
    const bool left = in_region.contains(c.face_of.at(w.other()));
    const bool right = in_region.contains(c.face_of.at(w));
    all_left = all_left && left;
    any_left = any_left || left;
    all_right = all_right && right;
    any_right = any_right || right;
  }
  if (all_right && !any_left) {
    std::vector<ArcEnd> rev;
    rev.reserve(m);
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) rev.push_back(it->other());
    walk = std::move(rev);
  } else if (!(all_left && !any_right)) {
    fail(DiskErrorKind::region_not_disk, "region reaches both sides of the cycle");
  }

  VerifiedDisk v;
  v.spec = spec;
  v.cycle_arcs.assign(cycle_arcs.begin(), cycle_arcs.end());
  {
    std::vector<int> ids = spec.cycle;
    std::sort(ids.begin(), ids.end());
    for (int id : ids) v.cycle_strands.push_back("s" + std::to_string(id));
  }
  v.region = region;

  // per boundary node: where the region and the outside lie
  std::map<std::size_t, std::size_t> boundary_pos;
  std::vector<std::vector<std::size_t>> outside(m);
  std::map<std::size_t, std::size_t> region_slot;  // boundary crossing -> slot facing the region
  for (std::size_t i = 0; i < m; ++i) {
    const SlotRef in = d.where(walk[i].other());
    const SlotRef out = d.where(walk[(i + 1) % m]);
    const Node& node = d.node(in.node);
    const std::size_t deg = node.slots.size();
    boundary_pos[in.node] = i;
    v.boundary.push_back(node.id);
    outside[i] = ccw_range(in.slot, out.slot, deg);
    const auto inner = ccw_range(out.slot, in.slot, deg);
    if (node.is_crossing()) {
      region_slot[in.node] = inner.at(0);
    } else if (!inner.empty()) {
      fail(DiskErrorKind::chord_unclassifiable,
           "an edge leaves boundary vertex " + node.id + " into the region");
    } else if (!outside[i].empty()) {
      v.attachments.push_back(node.id);
    }
  }
  std::sort(v.attachments.begin(), v.attachments.end(), NaturalLess{});

  std::set<int> inner_arcs;
  for (std::size_t f : region) {
    for (const auto& h : c.faces[f].boundary) {
      const std::size_t n = d.where(h).node;
      if (!boundary_pos.contains(n)) {
        if (d.node(n).is_crossing()) fail(DiskErrorKind::chords_cross, "crossing " + d.node(n).id + " inside the region");
        fail(DiskErrorKind::vertex_inside_region, "vertex " + d.node(n).id + " inside the region");
      }
      if (!cycle_arcs.contains(h.arc)) inner_arcs.insert(h.arc);
    }
  }

  const long euler = static_cast<long>(m) - static_cast<long>(m + inner_arcs.size()) +
                     static_cast<long>(region.size());
  if (euler != 1) fail(DiskErrorKind::region_not_disk, "region has Euler count " + std::to_string(euler));

  std::map<int, std::pair<const Strand*, int>> along;
  for (const auto& s : c.strands) {
    for (std::size_t p = 0; p < s.darts.size(); ++p) along[s.darts[p].arc] = {&s, static_cast<int>(p)};
  }
  std::map<std::size_t, int> chord_at;
  for (int a : inner_arcs) {
    const auto [s, pos] = along.at(a);
    const ArcEnd dart = s->darts[static_cast<std::size_t>(pos)];
    const SlotRef entry = d.where(dart);
    const SlotRef exit = d.where(dart.other());
    for (const SlotRef& ref : {entry, exit}) {
      auto it = region_slot.find(ref.node);
      if (it == region_slot.end() || it->second != ref.slot) {
        fail(DiskErrorKind::chord_unclassifiable,
             "arc a" + std::to_string(a) + " inside the region does not join two boundary crossings");
      }
    }
    Chord chord;
    chord.arc = a;
    chord.strand = s->id;
    chord.position = pos;
    chord.entry = d.node(entry.node).id;
    chord.exit = d.node(exit.node).id;
    chord.enters_over = d.node(entry.node).slot_is_over(entry.slot);
    const bool exits_over = d.node(exit.node).slot_is_over(exit.slot);
    chord.kind = chord.enters_over != exits_over ? ChordKind::piercing
                 : chord.enters_over             ? ChordKind::above
                                                 : ChordKind::below;
    chord.outer_entry = d.node(entry.node).slots[(entry.slot + 2) % 4];
    chord.outer_exit = d.node(exit.node).slots[(exit.slot + 2) % 4];
    chord_at[entry.node] = static_cast<int>(v.chords.size());
    chord_at[exit.node] = static_cast<int>(v.chords.size());
    v.chords.push_back(std::move(chord));
  }

  std::vector<Event> events;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t n = d.where(walk[i].other()).node;
    const Node& node = d.node(n);
    if (node.is_crossing()) {
      const int k = chord_at.at(n);
      const bool collapses = v.chords[static_cast<std::size_t>(k)].kind == ChordKind::piercing;
      events.push_back({k, collapses, node.slots[outside[i].at(0)]});
    } else {
      for (std::size_t s : outside[i]) events.push_back({-1, true, node.slots[s]});
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> span(v.chords.size(), {events.size(), 0});
  for (std::size_t e = 0; e < events.size(); ++e) {
    if (events[e].chord < 0) continue;
    auto& [lo, hi] = span[static_cast<std::size_t>(events[e].chord)];
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  for (std::size_t x = 0; x < span.size(); ++x) {
    for (std::size_t y = x + 1; y < span.size(); ++y) {
      const auto [a, b] = span[x];
      const auto [p, q] = span[y];
      if ((a < p && p < b && b < q) || (p < a && a < q && q < b)) {
        fail(DiskErrorKind::chords_cross, "chords a" + std::to_string(v.chords[x].arc) + " and a" +
                                              std::to_string(v.chords[y].arc) + " interleave");
      }
    }
  }
  for (std::size_t x = 0; x < span.size(); ++x) {
    if (v.chords[x].kind == ChordKind::piercing) continue;
    std::size_t between = 0, beyond = 0;
    for (std::size_t e = 0; e < events.size(); ++e) {
      if (!events[e].collapses) continue;
      (span[x].first < e && e < span[x].second ? between : beyond)++;
    }
    if (between > 0 && beyond > 0) {
      fail(DiskErrorKind::obstructed_chord, to_string(v.chords[x].kind) + " chord a" +
                                                std::to_string(v.chords[x].arc) +
                                                " has collapse points on both sides");
    }
  }
  for (const auto& e : events) {
    if (e.collapses) v.collapse_order.push_back(e.end);
  }

  v.source = d;
  detail::collapse(v);
  return v;
}

}  // namespace

VerifiedDisk verify_good_disk(const Diagram& d, const DiskSpec& spec) {
  const Context c(d);
  return verify(c, spec);
}

std::vector<VerifiedDisk> find_verified_disks(const Diagram& d, std::size_t max_cycle_len) {
  const Context c(d);
  std::set<std::vector<int>> found;
  if (max_cycle_len >= 1) {
    for (const auto& s : c.strands) {
      if (s.kind == StrandKind::closed) found.insert({s.id});
    }
  }

  // simple cycles of open strands, each reported from its smallest vertex
  std::map<std::size_t, std::vector<std::pair<int, std::size_t>>> adj;
  for (const auto& s : c.strands) {
    if (s.kind != StrandKind::open) continue;
    adj[*s.start].push_back({s.id, *s.finish});
    adj[*s.finish].push_back({s.id, *s.start});
  }
  std::vector<int> path;
  std::set<std::size_t> on_path;
  std::size_t home = 0;
  auto dfs = [&](auto&& self, std::size_t at) -> void {
    for (const auto& [id, next] : adj[at]) {
      if (std::find(path.begin(), path.end(), id) != path.end()) continue;
      if (next == home) {
        std::vector<int> cyc = path;
        cyc.push_back(id);
        std::sort(cyc.begin(), cyc.end());
        found.insert(cyc);
      } else if (next > home && !on_path.contains(next) && path.size() + 1 < max_cycle_len) {
        path.push_back(id);
        on_path.insert(next);
        self(self, next);
        on_path.erase(next);
        path.pop_back();
      }
    }
  };
  if (max_cycle_len >= 1) {
    for (const auto& [start, edges] : adj) {
      home = start;
      on_path = {start};
      dfs(dfs, start);
    }
  }

  std::vector<std::vector<int>> cycles(found.begin(), found.end());
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });

  std::vector<VerifiedDisk> out;
  for (const auto& cyc : cycles) {
    std::vector<ArcEnd> walk;
    try {
      walk = cycle_walk(c, cyc);
    } catch (const DiskError&) {
      continue;
    }
    std::set<int> cycle_arcs;
    std::set<std::size_t> touching;
    for (const auto& w : walk) {
      cycle_arcs.insert(w.arc);
      touching.insert(c.face_of.at(w));
      touching.insert(c.face_of.at(w.other()));
    }
    std::set<std::size_t> covered;
    for (std::size_t f : touching) {
      if (covered.contains(f)) continue;
      for (std::size_t g : flood(c, cycle_arcs, f)) covered.insert(g);
      try {
        VerifiedDisk v = verify(c, DiskSpec{cyc, static_cast<int>(f) + 1});
        if (theorem_precondition(v)) out.push_back(std::move(v));
      } catch (const DiskError&) {
      }
    }
  }
  return out;
}

std::vector<DiskSpec> find_visible_disks(const Diagram& d, std::size_t max_cycle_len) {
  std::vector<DiskSpec> out;
  for (const auto& v : find_verified_disks(d, max_cycle_len)) out.push_back(v.spec);
  return out;
}

std::string summarize(const VerifiedDisk& v) {
  std::ostringstream os;
  os << to_string(v.spec) << ": boundary";
  for (const auto& id : v.boundary) os << ' ' << id;
  os << "; region " << v.region.size() << (v.region.size() == 1 ? " face" : " faces");
  os << "; punctures " << v.puncture_count() << ", above " << v.above_count() << ", below "
     << v.below_count();
  for (const auto& ch : v.chords) {
    os << "; " << to_string(ch.kind) << " s" << ch.strand << '@' << ch.position << ' ' << ch.entry << "->"
       << ch.exit;
  }
  os << "; attachments {";
  for (std::size_t i = 0; i < v.attachments.size(); ++i) os << (i ? " " : "") << v.attachments[i];
  os << '}';
  return os.str();
}

namespace detail {

Diagram collapse(const VerifiedDisk& v) {
  const Diagram& d = v.source;
  const std::set<std::string> gone(v.boundary.begin(), v.boundary.end());
  std::set<int> dead(v.cycle_arcs.begin(), v.cycle_arcs.end());
  std::map<ArcEnd, ArcEnd> glue;
  for (const auto& ch : v.chords) {
    dead.insert(ch.arc);
    if (ch.kind == ChordKind::piercing) continue;
    glue[ch.outer_entry] = ch.outer_exit;
    glue[ch.outer_exit] = ch.outer_entry;
  }

  // arcs joined through the crossings of above/below chords become one arc
  std::map<ArcEnd, ArcEnd> renamed;
  std::map<int, std::string> labels;
  std::set<int> done;
  for (int a : d.arcs()) {
    if (dead.contains(a) || done.contains(a)) continue;
    std::vector<int> members{a};
    done.insert(a);
    auto extend = [&](ArcEnd e) -> std::optional<ArcEnd> {
      while (true) {
        auto it = glue.find(e);
        if (it == glue.end()) return e;
        const ArcEnd q = it->second;
        if (q.arc == a) return std::nullopt;
        members.push_back(q.arc);
        done.insert(q.arc);
        e = q.other();
      }
    };
    const auto t0 = extend(ArcEnd{a, 0});
    if (!t0) {
      throw DiskError(DiskErrorKind::splits_diagram,
                      "arc a" + std::to_string(a) + " would close into a circle without nodes");
    }
    const auto t1 = extend(ArcEnd{a, 1});
    renamed[*t0] = ArcEnd{a, 0};
    renamed[*t1] = ArcEnd{a, 1};
    std::sort(members.begin(), members.end());
    for (int x : members) {
      if (auto it = d.labels().find(x); it != d.labels().end()) {
        labels.emplace(a, it->second);
        break;
      }
    }
  }

  std::vector<Node> nodes;
  IdSet used;
  for (const auto& node : d.nodes()) {
    if (gone.contains(node.id)) continue;
    Node copy = node;
    for (auto& slot : copy.slots) slot = renamed.at(slot);
    used.insert(copy.id);
    nodes.push_back(std::move(copy));
  }
  Node star;
  star.id = fresh_id("v", used);
  for (const auto& e : v.collapse_order) star.slots.push_back(renamed.at(e));
  nodes.push_back(std::move(star));

  Diagram out(std::move(nodes), std::move(labels));
  if (map_component_count(out) != 1) {
    throw DiskError(DiskErrorKind::splits_diagram, "collapsing the disk disconnects the diagram");
  }
  return out;
}

}  // namespace detail

}  // namespace spg
