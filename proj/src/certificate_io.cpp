#include "spg/certificate_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "spg/sgd.hpp"

namespace spg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

CertificateDocument parse_text(std::string_view text) {
  CertificateDocument doc;
  bool header = false;
  bool have_diagram = false;
  bool in_inline = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());

    if (in_inline) {
      if (line == "end") {
        in_inline = false;
      } else {
        doc.diagram_text.append(raw.substr(0, raw.size() - (!raw.empty() && raw.back() == '\r')));
        doc.diagram_text += '\n';
      }
      continue;
    }
    if (line.empty() || line.front() == '#') continue;

    const std::size_t space = line.find_first_of(" \t");
    const std::string_view word = line.substr(0, space);
    const std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    const std::size_t rest_column = rest.empty() ? indent + line.size() + 1
                                                 : static_cast<std::size_t>(rest.data() - raw.data()) + 1;
    if (!header) {
      if (word != "cert" || rest != "1") throw ParseError(line_no, indent + 1, "expected header 'cert 1'");
      header = true;
    } else if (word == "diagram") {
      if (have_diagram) throw ParseError(line_no, indent + 1, "diagram given twice");
      if (rest.empty()) throw ParseError(line_no, rest_column, "diagram needs a path or 'inline'");
      have_diagram = true;
      if (rest == "inline") {
        in_inline = true;
      } else {
        doc.diagram_path = std::string(rest);
      }
    } else if (word == "step") {
      if (!have_diagram) throw ParseError(line_no, indent + 1, "step before diagram");
      try {
        doc.steps.push_back(parse_disk_spec(rest));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, rest_column, e.what());
      }
    } else {
      throw ParseError(line_no, indent + 1, "unknown directive '" + std::string(word) + "'");
    }
  }
  if (!header) throw ParseError(1, 1, "missing header 'cert 1'");
  if (in_inline) throw ParseError(line_no, 1, "inline diagram is missing 'end'");
  if (!have_diagram) throw ParseError(line_no, 1, "certificate names no diagram");
  return doc;
}

CertificateDocument parse_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line/column
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, e.what());
  }
  auto bad = [](const std::string& msg) { return ParseError(1, 1, msg); };
  if (!j.is_object()) throw bad("certificate must be a JSON object");
  CertificateDocument doc;
  if (j.contains("diagram") == j.contains("diagram_inline")) {
    throw bad("exactly one of \"diagram\" and \"diagram_inline\" is required");
  }
  if (j.contains("diagram")) {
    if (!j["diagram"].is_string()) throw bad("\"diagram\" must be a string");
    doc.diagram_path = j["diagram"].get<std::string>();
  } else {
    if (!j["diagram_inline"].is_string()) throw bad("\"diagram_inline\" must be a string");
    doc.diagram_text = j["diagram_inline"].get<std::string>();
  }
  if (j.contains("steps")) {
    if (!j["steps"].is_array()) throw bad("\"steps\" must be an array");
    for (std::size_t i = 0; i < j["steps"].size(); ++i) {
      const json& s = j["steps"][i];
      const std::string where = "step " + std::to_string(i + 1) + ": ";
      if (!s.is_object() || !s.contains("cycle") || !s.contains("face") || !s["cycle"].is_array() ||
          !s["face"].is_string()) {
        throw bad(where + "expected {\"cycle\": [...], \"face\": \"...\"}");
      }
      std::string spec = "cycle=";
      for (std::size_t k = 0; k < s["cycle"].size(); ++k) {
        if (!s["cycle"][k].is_string()) throw bad(where + "strand ids must be strings");
        spec += (k ? "," : "") + s["cycle"][k].get<std::string>();
      }
      spec += " face=" + s["face"].get<std::string>();
      try {
        doc.steps.push_back(parse_disk_spec(spec));
      } catch (const std::invalid_argument& e) {
        throw bad(where + e.what());
      }
    }
  }
  return doc;
}

}  // namespace

CertificateDocument parse_certificate(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

std::string format_certificate(const CertificateDocument& doc, CertificateFormat format) {
  if (format == CertificateFormat::json) {
    nlohmann::ordered_json j;
    if (doc.diagram_path.empty()) {
      j["diagram_inline"] = doc.diagram_text;
    } else {
      j["diagram"] = doc.diagram_path;
    }
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : doc.steps) {
      nlohmann::ordered_json step;
      step["cycle"] = nlohmann::ordered_json::array();
      for (int id : s.cycle) step["cycle"].push_back("s" + std::to_string(id));
      step["face"] = to_string(s.face);
      j["steps"].push_back(std::move(step));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "cert 1\n";
  if (doc.diagram_path.empty()) {
    os << "diagram inline\n" << doc.diagram_text;
    if (!doc.diagram_text.empty() && doc.diagram_text.back() != '\n') os << '\n';
    os << "end\n";
  } else {
    os << "diagram " << doc.diagram_path << '\n';
  }
  for (const auto& s : doc.steps) os << "step " << to_string(s) << '\n';
  return os.str();
}

std::string format_certificate(const Certificate& c, CertificateFormat format) {
  CertificateDocument doc;
  doc.diagram_text = serialize_sgd(c.initial);
  doc.steps = c.steps;
  return format_certificate(doc, format);
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Certificate load_certificate(const std::filesystem::path& file) {
  const CertificateDocument doc = parse_certificate(read_file(file));
  Certificate c;
  if (doc.diagram_path.empty()) {
    c.initial = parse_sgd(doc.diagram_text);
  } else {
    c.initial = parse_sgd(read_file(file.parent_path() / doc.diagram_path));
  }
  c.steps = doc.steps;
  return c;
}

}  // namespace spg
