#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "spg/certify.hpp"
#include "spg/disk.hpp"

namespace spg {

// Text form:
//   cert 1
//   diagram <path relative to the certificate>    or    diagram inline
//   step cycle=s1,s2 face=F3                            sgd 1
//   ...                                                 ...
//                                                       end
// JSON form (first character '{'):
//   {"diagram": "<path>" | "diagram_inline": "<sgd text>",
//    "steps": [{"cycle": ["s1", "s2"], "face": "F3"}, ...]}

struct CertificateDocument {
  std::string diagram_path;  ///< empty when the diagram is inline
  std::string diagram_text;  ///< inline .sgd body
  std::vector<DiskSpec> steps;
};

/// Throws ParseError.
CertificateDocument parse_certificate(std::string_view text);

enum class CertificateFormat { text, json };

/// Writes the diagram inline.
std::string format_certificate(const Certificate& c, CertificateFormat format);
std::string format_certificate(const CertificateDocument& doc, CertificateFormat format);

/// Reads the certificate and the diagram it names. Throws ParseError for malformed
/// text and std::runtime_error when a file cannot be read.
Certificate load_certificate(const std::filesystem::path& file);

std::string read_file(const std::filesystem::path& file);

}  // namespace spg
