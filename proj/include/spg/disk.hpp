#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spg/diagram.hpp"
#include "spg/multigraph.hpp"

namespace spg {

/// A face named by its 1-based index (F<k>) or by any dart on its boundary.
using FaceRef = std::variant<int, ArcEnd>;

std::string to_string(const FaceRef& face);

/// A candidate disk: the boundary cycle (strand ids) and a face on the disk side.
struct DiskSpec {
  std::vector<int> cycle;
  FaceRef face = 1;

  friend bool operator==(const DiskSpec&, const DiskSpec&) = default;
};

/// "cycle=s1,s3 face=F4"
std::string to_string(const DiskSpec& spec);

/// Accepts "cycle=<s ids> face=<F id | dart>", optionally prefixed by "disk" or
/// "step". Throws std::invalid_argument.
DiskSpec parse_disk_spec(std::string_view text);

enum class ChordKind { piercing, above, below };

std::string to_string(ChordKind kind);

/// A strand segment inside the disk region. With no nodes allowed inside the
/// region, every chord is a single arc joining two boundary crossings.
struct Chord {
  int arc = 0;
  int strand = 0;
  int position = 0;  ///< index of the arc along its strand
  ChordKind kind = ChordKind::piercing;
  std::string entry;  ///< boundary crossing where the strand enters (strand direction)
  std::string exit;
  bool enters_over = false;
  ArcEnd outer_entry;  ///< arc end on the far side of the entry crossing
  ArcEnd outer_exit;
};

struct VerifiedDisk {
  DiskSpec spec;
  Diagram source;
  std::vector<int> cycle_arcs;
  std::vector<std::string> cycle_strands;  ///< s<k> names
  /// Boundary node ids in walk order with the region on the left.
  std::vector<std::string> boundary;
  std::vector<std::size_t> region;  ///< 0-based indices into faces(source)
  std::vector<Chord> chords;
  /// Cycle vertices carrying arc ends off the cycle: the set where the boundary
  /// meets the closure of the rest of the graph.
  std::vector<std::string> attachments;
  /// Arc ends that end up at the collapsed point, counterclockwise around it.
  std::vector<ArcEnd> collapse_order;

  std::size_t puncture_count() const;
  std::size_t above_count() const;
  std::size_t below_count() const;
  /// Piercing chords as punctures of abstract edges (strand name, position).
  std::vector<Puncture> punctures() const;
};

enum class DiskErrorKind {
  malformed_spec,
  cycle_self_crossing,
  region_not_disk,
  vertex_inside_region,
  chords_cross,
  chord_unclassifiable,
  obstructed_chord,
  splits_diagram,
};

std::string to_string(DiskErrorKind kind);

class DiskError : public std::runtime_error {
 public:
  DiskError(DiskErrorKind kind, const std::string& message);
  DiskErrorKind kind() const { return kind_; }

 private:
  DiskErrorKind kind_;
};

/// Checks that the spec describes a flat disk that is good for the graph: simple
/// boundary curve, vertex-free region, pairwise-disjoint single-arc chords each
/// crossing the boundary twice, and a collapse that keeps the map connected and
/// adds no crossings. Throws DiskError.
VerifiedDisk verify_good_disk(const Diagram& d, const DiskSpec& spec);

/// The disk meets the graph inside, or the boundary's attachment set is not a singleton.
bool theorem_precondition(const VerifiedDisk& v);

/// Every visibly good disk that satisfies the precondition, one per (cycle, side):
/// shorter cycles first, then by strand ids, then by face.
std::vector<VerifiedDisk> find_verified_disks(const Diagram& d, std::size_t max_cycle_len);
std::vector<DiskSpec> find_visible_disks(const Diagram& d, std::size_t max_cycle_len);

std::string summarize(const VerifiedDisk& v);

}  // namespace spg
