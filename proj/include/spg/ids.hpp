#pragma once

#include <set>
#include <string>
#include <string_view>

namespace spg {

/// Orders identifiers so that embedded numbers compare numerically: v2 < v10 < x1.
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return natural_less(a, b); }
};

using IdSet = std::set<std::string, NaturalLess>;

/// Smallest `<prefix><k>` (k >= 1) not present in `used`.
std::string fresh_id(std::string_view prefix, const IdSet& used);

}  // namespace spg
