#pragma once

#include "spg/diagram.hpp"
#include "spg/disk.hpp"

namespace spg::detail {

/// Replaces the disk and its boundary by one vertex. Throws DiskError(splits_diagram)
/// when the result would be a disconnected map or leave a circle with no nodes.
Diagram collapse(const VerifiedDisk& v);

}  // namespace spg::detail
