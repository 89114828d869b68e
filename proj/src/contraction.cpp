#include "spg/contraction.hpp"

#include "collapse.hpp"

namespace spg {

Diagram contract(const Diagram& d, const VerifiedDisk& v) {
  if (!(v.source == d)) {
    throw ContractionError(ContractionError::Kind::stale, "disk was verified against a different diagram");
  }
  if (!theorem_precondition(v)) {
    throw ContractionError(ContractionError::Kind::precondition,
                           "disk " + to_string(v.spec) +
                               " has an empty interior and meets the rest of the graph in one point");
  }
  return detail::collapse(v);
}

}  // namespace spg
