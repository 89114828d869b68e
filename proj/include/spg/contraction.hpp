#pragma once

#include <stdexcept>
#include <string>

#include "spg/diagram.hpp"
#include "spg/disk.hpp"

namespace spg {

class ContractionError : public std::runtime_error {
 public:
  enum class Kind { precondition, stale };

  ContractionError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Collapses the verified disk to a fresh vertex v<k> (smallest unused). Cycle
/// arcs, boundary nodes and chord arcs disappear; piercing chords end at the new
/// vertex, above/below chords are rejoined into single arcs keeping their smaller
/// arc id; everything else keeps its ids and rotations. The result is not
/// canonicalized.
///
/// Throws ContractionError if `v` was verified against a different diagram or
/// fails theorem_precondition.
Diagram contract(const Diagram& d, const VerifiedDisk& v);

}  // namespace spg
