#include "spg/certify.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "spg/contraction.hpp"
#include "spg/sgd.hpp"

namespace spg {

std::string to_string(NegativeReason reason) {
  switch (reason) {
    case NegativeReason::split_map: return "split-map";
    case NegativeReason::pendant_vertex: return "pendant-vertex";
  }
  return "?";
}

std::string render(const Trace& trace) {
  std::ostringstream os;
  os << "initial: " << trace.initial.crossing_count() << " crossings; " << summarize(trace.initial_graph)
     << '\n';
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    os << "step " << (i + 1) << ": " << s.disk << '\n';
    os << "  -> " << s.crossings_after << " crossings (was " << s.crossings_before << "); "
       << summarize(s.graph) << '\n';
  }
  if (trace.base) {
    os << "base: " << describe(*trace.base) << '\n';
  }
  return os.str();
}

std::string describe(const Verdict& v) {
  std::ostringstream os;
  if (const auto* c = std::get_if<Certified>(&v)) {
    os << render(c->trace) << "verdict: irreducible (" << c->trace.steps.size()
       << (c->trace.steps.size() == 1 ? " step" : " steps") << ")\n";
  } else if (const auto* n = std::get_if<NotIrreducible>(&v)) {
    os << "verdict: not irreducible (" << to_string(n->why.reason) << "): " << n->why.detail << '\n';
  } else {
    const auto& u = std::get<Unknown>(v);
    os << render(u.trace);
    if (u.failed_step) os << "failed at step " << *u.failed_step << '\n';
    os << "verdict: unknown: " << u.diagnostics << '\n';
  }
  return os.str();
}

Verdict verify_certificate(const Certificate& c) {
  Trace trace;
  const auto report = validate(c.initial);
  if (!report.ok()) {
    return Unknown{"initial diagram is invalid: " + to_string(report.issues.front().kind) + " " +
                       report.issues.front().message,
                   std::nullopt, std::move(trace)};
  }
  Diagram cur = canonicalize(c.initial);
  trace.initial = cur;
  trace.initial_graph = abstract(cur);

  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const DiskSpec& spec = c.steps[i];
    try {
      const VerifiedDisk disk = verify_good_disk(cur, spec);
      Diagram next = canonicalize(contract(cur, disk));
      if (const auto r = validate(next); !r.ok()) {
        return Unknown{"contraction produced an invalid diagram: " + r.issues.front().message, i + 1,
                       std::move(trace)};
      }
      StepRecord rec;
      rec.spec = spec;
      rec.disk = summarize(disk);
      rec.crossings_before = cur.crossing_count();
      rec.crossings_after = next.crossing_count();
      rec.graph = abstract(next);
      rec.result = next;
      trace.steps.push_back(std::move(rec));
      cur = std::move(next);
    } catch (const DiskError& e) {
      return Unknown{"step " + std::to_string(i + 1) + " (" + to_string(spec) + "): " + e.what(), i + 1,
                     std::move(trace)};
    } catch (const ContractionError& e) {
      return Unknown{"step " + std::to_string(i + 1) + " (" + to_string(spec) + "): " + e.what(), i + 1,
                     std::move(trace)};
    }
  }

  const Multigraph g = abstract(cur);
  trace.base = cut_points(g);
  if (is_base_irreducible(g)) return Certified{std::move(trace)};
  return Unknown{"final graph has cut points: " + describe(*trace.base), std::nullopt, std::move(trace)};
}

std::optional<Negative> quick_negative(const Diagram& d) {
  if (d.nodes().empty()) return std::nullopt;
  if (const std::size_t k = map_component_count(d); k > 1) {
    return Negative{NegativeReason::split_map, "diagram has " + std::to_string(k) + " separate pieces"};
  }
  if (d.nodes().size() > 1) {
    for (const auto& node : d.nodes()) {
      if (!node.is_crossing() && node.slots.size() == 1) {
        return Negative{NegativeReason::pendant_vertex, "vertex " + node.id + " has degree 1"};
      }
    }
  }
  return std::nullopt;
}

NontrivialityReport nontriviality_report(const Certificate& c, const Verdict& v) {
  NontrivialityReport out;
  if (!std::holds_alternative<Certified>(v)) {
    out.text = "no irreducibility certificate, nothing implied";
    return out;
  }
  const Multigraph g = abstract(canonicalize(c.initial));
  const CutPointReport r = cut_points(g);
  if (!r.connected) {
    out.outcome = NontrivialityReport::Outcome::non_splittable;
    out.witness = std::to_string(components(g).size()) + " components";
    out.text = "irreducible, hence non-splittable (abstract graph has " + out.witness + ")";
  } else if (!r.empty()) {
    out.outcome = NontrivialityReport::Outcome::nontrivial;
    if (!r.cut_vertices.empty()) {
      out.witness = "cut vertex " + r.cut_vertices.front();
    } else if (!r.bridge_edges.empty()) {
      out.witness = "bridge " + r.bridge_edges.front();
    } else {
      out.witness = "loop " + r.loops_at_branch_vertices.front().second + " at " +
                    r.loops_at_branch_vertices.front().first;
    }
    out.text = "embedding is nontrivial: the trivial embedding has a cutting sphere at " + out.witness;
  } else {
    out.text = "nontriviality not implied by this method";
  }
  return out;
}

namespace {

struct Search {
  std::size_t max_cycle_len;
  std::set<std::pair<std::string, std::size_t>> failed;
  std::vector<DiskSpec> steps;

  bool run(const Diagram& cur, std::size_t remaining) {
    if (is_base_irreducible(abstract(cur))) return true;
    if (remaining == 0) return false;
    auto key = std::make_pair(serialize_sgd(cur), remaining);
    if (failed.contains(key)) return false;
    for (const auto& disk : find_verified_disks(cur, max_cycle_len)) {
      const Diagram next = canonicalize(contract(cur, disk));
      steps.push_back(disk.spec);
      if (run(next, remaining - 1)) return true;
      steps.pop_back();
    }
    failed.insert(std::move(key));
    return false;
  }
};

}  // namespace

std::optional<Certificate> auto_certify(const Diagram& d, std::size_t max_steps, std::size_t max_cycle_len) {
  if (!validate(d).ok()) return std::nullopt;
  const Diagram start = canonicalize(d);
  Search search{max_cycle_len, {}, {}};
  for (std::size_t depth = 0; depth <= max_steps; ++depth) {
    if (search.run(start, depth)) return Certificate{d, std::move(search.steps)};
  }
  return std::nullopt;
}

}  // namespace spg
