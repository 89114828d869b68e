#include "spg/sgd.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace spg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool valid_identifier(std::string_view id) {
  if (id.empty() || !(std::isalpha(static_cast<unsigned char>(id[0])) || id[0] == '_')) return false;
  for (char c : id) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::optional<int> parse_arc_id(std::string_view token) {
  if (token.size() < 2 || token[0] != 'a') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value <= 0) return std::nullopt;
  return value;
}

}  // namespace

ArcEnd parse_arc_end(std::string_view token) {
  const auto dot = token.rfind('.');
  if (dot == std::string_view::npos || dot + 2 != token.size() ||
      (token[dot + 1] != '0' && token[dot + 1] != '1')) {
    throw std::invalid_argument("expected <arc>.<0|1>, got '" + std::string(token) + "'");
  }
  auto arc = parse_arc_id(token.substr(0, dot));
  if (!arc) throw std::invalid_argument("bad arc name in '" + std::string(token) + "'");
  return {*arc, token[dot + 1] - '0'};
}

SgdDocument parse_sgd_document(std::string_view text) {
  SgdDocument doc;
  std::vector<Node> nodes;
  std::map<int, std::string> labels;
  std::map<ArcEnd, std::pair<std::size_t, std::size_t>> placed;  // token -> line, column
  std::set<std::string> node_ids;
  bool header_seen = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first == line.size()) {
      if (nl == text.size()) break;
      continue;
    }
    if (line[first] == '#') {
      doc.comments.emplace_back(line.substr(first + 1));
      continue;
    }

    const auto tokens = tokenize(line);
    const auto& head = tokens.front();
    if (!header_seen) {
      if (head.text != "sgd") throw ParseError(line_no, head.column, "expected header 'sgd 1'");
      if (tokens.size() != 2 || tokens[1].text != "1") {
        throw ParseError(line_no, tokens.size() > 1 ? tokens[1].column : head.column + 3,
                         "unsupported format version");
      }
      header_seen = true;
      continue;
    }

    if (head.text == "L") {
      if (tokens.size() < 3) throw ParseError(line_no, head.column, "label needs an arc and text");
      auto arc = parse_arc_id(tokens[1].text);
      if (!arc) throw ParseError(line_no, tokens[1].column, "bad arc name '" + std::string(tokens[1].text) + "'");
      const std::size_t text_start = tokens[2].column - 1;
      std::string_view rest = line.substr(text_start);
      if (auto hash = rest.find(" #"); hash != std::string_view::npos) rest = rest.substr(0, hash);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
      labels[*arc] = std::string(rest);
      continue;
    }

    if (head.text != "V" && head.text != "X") {
      throw ParseError(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
    }
    if (tokens.size() < 2) throw ParseError(line_no, head.column, "missing node id");
    Node node;
    node.kind = head.text == "X" ? NodeKind::crossing : NodeKind::vertex;
    node.id = std::string(tokens[1].text);
    if (!valid_identifier(node.id)) throw ParseError(line_no, tokens[1].column, "bad node id '" + node.id + "'");
    if (!node_ids.insert(node.id).second) {
      throw ParseError(line_no, tokens[1].column, "duplicate node id '" + node.id + "'");
    }

    std::size_t end_tokens = tokens.size();
    if (node.is_crossing()) {
      const auto& last = tokens.back();
      if (last.text.substr(0, 5) != "over=") {
        throw ParseError(line_no, last.column, "crossing needs over=02 or over=13");
      }
      if (last.text == "over=02") {
        node.over = OverPair::slots02;
      } else if (last.text == "over=13") {
        node.over = OverPair::slots13;
      } else {
        throw ParseError(line_no, last.column + 5, "bad over flag '" + std::string(last.text.substr(5)) + "'");
      }
      --end_tokens;
      if (end_tokens - 2 != 4) {
        throw ParseError(line_no, head.column, "crossing " + node.id + " needs exactly 4 arc ends");
      }
    }
    for (std::size_t t = 2; t < end_tokens; ++t) {
      ArcEnd e;
      try {
        e = parse_arc_end(tokens[t].text);
      } catch (const std::invalid_argument& err) {
        throw ParseError(line_no, tokens[t].column, err.what());
      }
      auto [it, inserted] = placed.try_emplace(e, line_no, tokens[t].column);
      if (!inserted) {
        throw ParseError(line_no, tokens[t].column,
                         "arc end " + std::string(tokens[t].text) + " already placed on line " +
                             std::to_string(it->second.first));
      }
      node.slots.push_back(e);
    }
    nodes.push_back(std::move(node));
  }

  if (!header_seen) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing header 'sgd 1'");
  for (const auto& [e, where] : placed) {
    if (!placed.contains(e.other())) {
      throw ParseError(where.first, where.second,
                       "arc end " + to_string(e.other()) + " is missing (partner of " + to_string(e) + ")");
    }
  }
  for (const auto& [arc, label] : labels) {
    if (!placed.contains(ArcEnd{arc, 0})) {
      throw ParseError(line_no, 1, "label refers to unknown arc a" + std::to_string(arc));
    }
  }
  doc.diagram = Diagram(std::move(nodes), std::move(labels));
  return doc;
}

Diagram parse_sgd(std::string_view text) { return parse_sgd_document(text).diagram; }

std::string serialize_sgd(const Diagram& d, const std::vector<std::string>& comments) {
  const Diagram c = canonicalize(d);
  std::ostringstream os;
  os << "sgd 1\n";
  for (const auto& line : comments) os << '#' << line << '\n';
  for (const auto& node : c.nodes()) {
    os << (node.is_crossing() ? 'X' : 'V') << ' ' << node.id;
    for (const auto& e : node.slots) os << ' ' << to_string(e);
    if (node.is_crossing()) os << (node.over == OverPair::slots02 ? " over=02" : " over=13");
    os << '\n';
  }
  for (const auto& [arc, text] : c.labels()) os << "L a" << arc << ' ' << text << '\n';
  return os.str();
}

}  // namespace spg
