#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spg/diagram.hpp"

namespace spg {

/// Malformed .sgd (or certificate) text; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct SgdDocument {
  Diagram diagram;
  std::vector<std::string> comments;  ///< comment text without the leading '#'
};

// Line-oriented format:
//   sgd 1
//   # comment
//   V <id> <arc>.<end> ...                       graph vertex, counterclockwise
//   X <id> <arc>.<end> x4 over=<02|13>           crossing
//   L <arc> <text>                               label for the strand through <arc>
// Arcs are written a<N>; every <arc>.<end> token appears exactly once.

SgdDocument parse_sgd_document(std::string_view text);
Diagram parse_sgd(std::string_view text);

/// Canonical text: header, comments, nodes sorted by id with arcs renumbered by
/// first appearance, then labels.
std::string serialize_sgd(const Diagram& d, const std::vector<std::string>& comments = {});

/// Parses "a<N>.<0|1>"; throws std::invalid_argument otherwise.
ArcEnd parse_arc_end(std::string_view token);

}  // namespace spg
