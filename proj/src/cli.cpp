#include "spg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "spg/certificate_io.hpp"
#include "spg/certify.hpp"
#include "spg/contraction.hpp"
#include "spg/disk.hpp"
#include "spg/render.hpp"
#include "spg/sgd.hpp"

namespace spg {

namespace {

struct Failure {
  int code;
  std::string message;
};

Diagram load_diagram(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw Failure{exit_code::usage, e.what()};
  }
  try {
    return parse_sgd(text);
  } catch (const ParseError& e) {
    throw Failure{exit_code::parse, path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                                        ": " + e.what()};
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!(f << text)) throw Failure{exit_code::usage, "cannot write " + path};
}

/// Fails with `invalid` unless the diagram is valid; a split map is a negative instead.
void require_valid(const Diagram& d, std::ostream& out) {
  const auto report = validate(d);
  if (report.ok()) return;
  const bool only_split = std::all_of(report.issues.begin(), report.issues.end(),
                                      [](const Issue& i) { return i.kind == IssueKind::disconnected; });
  if (only_split) {
    if (auto neg = quick_negative(d)) {
      out << "verdict: not irreducible (" << to_string(neg->reason) << "): " << neg->detail << '\n';
      throw Failure{exit_code::negative, ""};
    }
  }
  throw Failure{exit_code::invalid, describe(report)};
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const auto report = validate(load_diagram(file));
  out << describe(report);
  return report.ok() ? exit_code::ok : exit_code::invalid;
}

int cmd_analyze(const std::string& file, std::ostream& out) {
  const Diagram raw = load_diagram(file);
  const auto report = validate(raw);
  for (const auto& issue : report.issues) {
    if (issue.kind != IssueKind::disconnected) throw Failure{exit_code::invalid, describe(report)};
  }
  const Diagram d = canonicalize(raw);
  out << "diagram: " << d.vertex_count() << " vertices, " << d.crossing_count() << " crossings, "
      << d.arcs().size() << " arcs, " << report.faces << " faces\n";
  for (const auto& s : strands(d)) {
    out << "  " << s.name() << ' ' << (s.kind == StrandKind::closed ? "closed" : "open");
    if (s.kind == StrandKind::open) out << ' ' << d.node(*s.start).id << '-' << d.node(*s.finish).id;
    out << ':';
    for (int a : s.arcs()) out << " a" << a;
    out << '\n';
  }
  const auto fs = faces(d);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out << "  F" << (i + 1) << ':';
    for (const auto& h : fs[i].boundary) out << ' ' << to_string(h);
    out << '\n';
  }
  const Multigraph g = abstract(d);
  out << "abstract graph: " << summarize(g) << '\n';
  out << "cut points: " << describe(cut_points(g)) << '\n';
  out << "base criterion: " << (is_base_irreducible(g) ? "holds" : "fails") << '\n';
  const auto neg = quick_negative(d);
  out << "quick negative: " << (neg ? to_string(neg->reason) + " (" + neg->detail + ")" : "none") << '\n';
  return exit_code::ok;
}

int cmd_find_disks(const std::string& file, std::size_t max_len, bool verbose, std::ostream& out) {
  const Diagram raw = load_diagram(file);
  require_valid(raw, out);
  for (const auto& v : find_verified_disks(canonicalize(raw), max_len)) {
    out << "disk " << to_string(v.spec) << '\n';
    if (verbose) out << "  " << summarize(v) << '\n';
  }
  return exit_code::ok;
}

int cmd_contract(const std::string& file, const std::string& disk_text, std::ostream& out) {
  const Diagram raw = load_diagram(file);
  require_valid(raw, out);
  DiskSpec spec;
  try {
    spec = parse_disk_spec(disk_text);
  } catch (const std::invalid_argument& e) {
    throw Failure{exit_code::parse, std::string("--disk: ") + e.what()};
  }
  const Diagram d = canonicalize(raw);
  try {
    out << serialize_sgd(contract(d, verify_good_disk(d, spec)));
  } catch (const DiskError& e) {
    throw Failure{exit_code::unknown, std::string("disk rejected: ") + e.what()};
  } catch (const ContractionError& e) {
    throw Failure{exit_code::unknown, std::string("contraction refused: ") + e.what()};
  }
  return exit_code::ok;
}

int cmd_certify(const std::string& file, std::ostream& out) {
  Certificate cert;
  try {
    cert = load_certificate(file);
  } catch (const ParseError& e) {
    throw Failure{exit_code::parse, file + ": " + e.what()};
  } catch (const std::runtime_error& e) {
    throw Failure{exit_code::usage, e.what()};
  }
  require_valid(cert.initial, out);
  const Verdict verdict = verify_certificate(cert);
  out << describe(verdict);
  if (std::holds_alternative<Certified>(verdict)) {
    out << "nontriviality: " << nontriviality_report(cert, verdict).text << '\n';
    return exit_code::ok;
  }
  if (auto neg = quick_negative(cert.initial)) {
    out << "verdict: not irreducible (" << to_string(neg->reason) << "): " << neg->detail << '\n';
    return exit_code::negative;
  }
  return exit_code::unknown;
}

int cmd_auto_certify(const std::string& file, std::size_t max_steps, std::size_t max_len,
                     const std::string& emit, std::ostream& out) {
  const Diagram raw = load_diagram(file);
  require_valid(raw, out);
  const auto cert = auto_certify(raw, max_steps, max_len);
  if (!cert) {
    if (auto neg = quick_negative(raw)) {
      out << "verdict: not irreducible (" << to_string(neg->reason) << "): " << neg->detail << '\n';
      return exit_code::negative;
    }
    out << "verdict: unknown: no certificate within " << max_steps << " steps of cycles up to length "
        << max_len << '\n';
    return exit_code::unknown;
  }
  out << "certificate: " << cert->steps.size() << (cert->steps.size() == 1 ? " step\n" : " steps\n");
  for (const auto& s : cert->steps) out << "step " << to_string(s) << '\n';
  const Verdict verdict = verify_certificate(*cert);
  out << describe(verdict);
  if (!emit.empty()) {
    const auto format = std::filesystem::path(emit).extension() == ".json" ? CertificateFormat::json
                                                                           : CertificateFormat::text;
    write_file(emit, format_certificate(*cert, format));
  }
  return std::holds_alternative<Certified>(verdict) ? exit_code::ok : exit_code::unknown;
}

int cmd_render(const std::string& file, const std::string& output, std::ostream& out) {
  const Diagram raw = load_diagram(file);
  const auto report = validate(raw);
  if (!report.ok()) throw Failure{exit_code::invalid, describe(report)};
  const std::string svg = render_svg(raw);
  if (output.empty() || output == "-") {
    out << svg;
  } else {
    write_file(output, svg);
  }
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify irreducibility of spatial graph diagrams", "spgcert"};
  app.require_subcommand(1);

  std::string file, output, disk, emit;
  std::size_t max_len = 1, max_steps = 4;
  bool verbose = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a .sgd diagram");
  validate_cmd->add_option("diagram", file, ".sgd file")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "strands, faces, abstract graph and cut points");
  analyze_cmd->add_option("diagram", file, ".sgd file")->required();
  auto* find_cmd = app.add_subcommand("find-disks", "list visibly good disks usable as steps");
  find_cmd->add_option("diagram", file, ".sgd file")->required();
  find_cmd->add_option("--max-len", max_len, "longest boundary cycle, in strands")->capture_default_str();
  find_cmd->add_flag("-v,--verbose", verbose, "print each disk's classification");
  auto* contract_cmd = app.add_subcommand("contract", "contract one disk and print the new diagram");
  contract_cmd->add_option("diagram", file, ".sgd file")->required();
  contract_cmd->add_option("--disk", disk, "e.g. \"cycle=s1 face=F3\"")->required();
  auto* certify_cmd = app.add_subcommand("certify", "replay a certificate");
  certify_cmd->add_option("certificate", file, "certificate file (text or JSON)")->required();
  auto* auto_cmd = app.add_subcommand("auto-certify", "search for a certificate");
  auto_cmd->add_option("diagram", file, ".sgd file")->required();
  auto_cmd->add_option("--max-steps", max_steps, "most contractions")->capture_default_str();
  auto_cmd->add_option("--max-len", max_len, "longest boundary cycle, in strands")->capture_default_str();
  auto_cmd->add_option("--emit", emit, "write the certificate here (.json for JSON)");
  auto* render_cmd = app.add_subcommand("render", "draw the diagram as SVG");
  render_cmd->add_option("diagram", file, ".sgd file")->required();
  render_cmd->add_option("-o,--output", output, "SVG file (stdout if omitted)");

  std::vector<std::string> argv_store{"spgcert"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, out);
    if (*analyze_cmd) return cmd_analyze(file, out);
    if (*find_cmd) return cmd_find_disks(file, max_len, verbose, out);
    if (*contract_cmd) return cmd_contract(file, disk, out);
    if (*certify_cmd) return cmd_certify(file, out);
    if (*auto_cmd) return cmd_auto_certify(file, max_steps, max_len, emit, out);
    if (*render_cmd) return cmd_render(file, output, out);
  } catch (const Failure& f) {
    if (!f.message.empty()) err << "spgcert: " << f.message << (f.message.back() == '\n' ? "" : "\n");
    return f.code;
  }
  return exit_code::usage;
}

}  // namespace spg
