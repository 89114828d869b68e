#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spg/diagram.hpp"
#include "spg/disk.hpp"
#include "spg/multigraph.hpp"

namespace spg {

/// Initial diagram plus disks to contract in order. Strand and face ids in each
/// step refer to the canonical form of the diagram at that point of the chain.
struct Certificate {
  Diagram initial;
  std::vector<DiskSpec> steps;
};

struct StepRecord {
  DiskSpec spec;
  std::string disk;  ///< summarize(VerifiedDisk)
  std::size_t crossings_before = 0;
  std::size_t crossings_after = 0;
  Diagram result;     ///< canonical
  Multigraph graph;   ///< abstract(result)
};

struct Trace {
  Diagram initial;  ///< canonical
  Multigraph initial_graph;
  std::vector<StepRecord> steps;
  std::optional<CutPointReport> base;  ///< set once the chain has been replayed to the end
};

std::string render(const Trace& trace);

enum class NegativeReason { split_map, pendant_vertex };

std::string to_string(NegativeReason reason);

struct Negative {
  NegativeReason reason;
  std::string detail;
};

struct Certified {
  Trace trace;
};

struct NotIrreducible {
  Negative why;
};

struct Unknown {
  std::string diagnostics;
  std::optional<std::size_t> failed_step;  ///< 1-based
  Trace trace;                             ///< the steps that did replay
};

using Verdict = std::variant<Certified, NotIrreducible, Unknown>;

std::string describe(const Verdict& v);

/// Replays the chain: each step must verify as a good disk, satisfy the
/// precondition and contract; the last graph must have no topological cut points.
/// Never returns NotIrreducible.
Verdict verify_certificate(const Certificate& c);

/// Sound reducibility detectors: a disconnected map, or a degree-1 graph vertex.
std::optional<Negative> quick_negative(const Diagram& d);

struct NontrivialityReport {
  enum class Outcome { nontrivial, non_splittable, not_implied };
  Outcome outcome = Outcome::not_implied;
  std::string witness;
  std::string text;
};

/// What a successful certificate says beyond irreducibility, judged from the
/// abstract graph of the initial diagram.
NontrivialityReport nontriviality_report(const Certificate& c, const Verdict& v);

/// Shortest certificate reachable through find_visible_disks (iterative deepening,
/// first hit in search order), or nullopt within the budget.
std::optional<Certificate> auto_certify(const Diagram& d, std::size_t max_steps, std::size_t max_cycle_len);

}  // namespace spg
