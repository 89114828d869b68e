#include "spg/ids.hpp"

#include <cctype>

namespace spg {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t i_end = i;
      std::size_t j_end = j;
      while (i_end < a.size() && is_digit(a[i_end])) ++i_end;
      while (j_end < b.size() && is_digit(b[j_end])) ++j_end;
      // compare numerically without overflow: strip leading zeros, then length, then digits
      std::size_t i_nz = i;
      std::size_t j_nz = j;
      while (i_nz + 1 < i_end && a[i_nz] == '0') ++i_nz;
      while (j_nz + 1 < j_end && b[j_nz] == '0') ++j_nz;
      const auto run_a = a.substr(i_nz, i_end - i_nz);
      const auto run_b = b.substr(j_nz, j_end - j_nz);
      if (run_a.size() != run_b.size()) return run_a.size() < run_b.size();
      if (run_a != run_b) return run_a < run_b;
      if (i_end - i != j_end - j) return (i_end - i) < (j_end - j);
      i = i_end;
      j = j_end;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return (a.size() - i) < (b.size() - j);
}

std::string fresh_id(std::string_view prefix, const IdSet& used) {
  for (std::size_t k = 1;; ++k) {
    std::string candidate = std::string(prefix) + std::to_string(k);
    if (!used.contains(candidate)) return candidate;
  }
}

}  // namespace spg
