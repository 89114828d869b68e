// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "spg/certificate_io.hpp"
#include "spg/certify.hpp"
#include "spg/cli.hpp"
#include "spg/contraction.hpp"
#include "spg/disk.hpp"
#include "spg/sgd.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace spg;

namespace {

struct Failed {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

Certificate load(const std::string& name) { return load_certificate(spgtest::corpus_path(name)); }

const Trace& certified_trace(const Verdict& v, const std::string& what) {
  const auto* c = std::get_if<Certified>(&v);
  expect(c != nullptr, what + " not certified: " + describe(v));
  return c->trace;
}

int run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

/// Replays a certificate step by step, checking every contraction against the abstract quotient.
void cross_check_chain(const Certificate& c, const std::string& what) {
  Diagram d = canonicalize(c.initial);
  for (const auto& spec : c.steps) {
    const auto v = verify_good_disk(d, spec);
    const auto r = contract(d, v);
    expect(same_incidence(abstract(r), contract_abstract(abstract(d), v.cycle_strands, v.punctures())),
           what + ": contraction disagrees with the abstract quotient at " + to_string(spec));
    d = canonicalize(r);
  }
}

void borromean_chain() {
  const auto c = load("borromean.cert");
  const auto v = verify_certificate(c);
  const auto& t = certified_trace(v, "borromean.cert");
  expect(c.steps.size() == 2 && t.steps.size() == 2, "expected exactly 2 steps");
  expect(t.steps[0].graph == abstract(canonicalize(spgtest::corpus("fig12b.sgd"))), "graph after step 1");
  expect(t.steps[1].graph == abstract(canonicalize(spgtest::corpus("fig12c.sgd"))), "graph after step 2");
  expect(t.base && t.base->connected && t.base->empty(), "final cut-point report not empty");
  expect(nontriviality_report(c, v).text.rfind("irreducible, hence non-splittable", 0) == 0, "link conclusion");
  cross_check_chain(c, "borromean");
}

void cn_family() {
  for (int n = 0; n <= 4; ++n) {
    const auto name = "c" + std::to_string(n) + ".cert";
    const auto c = load(name);
    const auto v = verify_certificate(c);
    const auto& t = certified_trace(v, name);
    expect(c.steps.size() == static_cast<std::size_t>(n) && t.steps.size() == c.steps.size(),
           name + " has the wrong number of steps");
    const auto report = nontriviality_report(c, v);
    if (n > 0) {
      expect(report.outcome == NontrivialityReport::Outcome::nontrivial, name + " not reported nontrivial");
      const auto cuts = spgtest::brute_force_cut_points(abstract(c.initial));
      expect(!cuts.cut_vertices.empty() && report.witness == "cut vertex " + cuts.cut_vertices.front(),
             name + " witness is not an abstract cut vertex");
    }
    cross_check_chain(c, name);
  }
}

void fig14() {
  expect(run({"auto-certify", spgtest::corpus_path("fig14.sgd"), "--max-steps", "4", "--max-len", "4"}) ==
             exit_code::ok,
         "auto-certify did not certify");
  const auto found = auto_certify(spgtest::corpus("fig14.sgd"), 4, 4);
  expect(found.has_value(), "no certificate");
  certified_trace(verify_certificate(*found), "found certificate");
  cross_check_chain(*found, "fig14");
  certified_trace(verify_certificate(load("fig14.cert")), "fig14.cert");
}

void small_links() {
  const std::pair<const char*, std::size_t> cases[] = {{"hopf.cert", 1}, {"unknot.cert", 0}, {"trefoil.cert", 0}};
  for (const auto& [name, steps] : cases) {
    const auto c = load(name);
    expect(c.steps.size() == steps, std::string(name) + " step count");
    expect(certified_trace(verify_certificate(c), name).steps.size() == steps, std::string(name) + " trace");
    cross_check_chain(c, name);
  }
}

void precondition_negative() {
  const auto d = canonicalize(spgtest::corpus("pendant_loop.sgd"));
  const auto v = verify_good_disk(d, DiskSpec{{1}, 2});
  expect(v.puncture_count() == 0 && v.attachments.size() == 1, "disk is not the empty pendant loop disk");
  expect(!theorem_precondition(v), "precondition accepted");
  try {
    contract(d, v);
    throw Failed{"contract accepted the disk"};
  } catch (const ContractionError& e) {
    expect(e.kind() == ContractionError::Kind::precondition, "wrong contraction error");
  }
}

void oracle_suites() {
  spgtest::Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto g = spgtest::random_multigraph(rng, 7, 12, 2);
    expect(g.edges().size() <= 12, "generator exceeded 12 edges");
    expect(cut_points(g) == spgtest::brute_force_cut_points(g), "cut points disagree on " + summarize(g));
  }

  std::size_t pairs = 0, certificates = 0;
  for (int i = 0; pairs < 200 && i < 2000; ++i) {
    const auto d = canonicalize(spgtest::random_diagram(rng));
    for (const auto& v : find_verified_disks(d, 2)) {
      ++pairs;
      const auto r = contract(d, v);
      expect(same_incidence(abstract(r), contract_abstract(abstract(d), v.cycle_strands, v.punctures())),
             "abstract consistency fails for " + summarize(v) + " on\n" + serialize_sgd(d));
      expect(validate(r).ok() && spgtest::euler_characteristic(r) == 2, "invalid contraction result");
      expect(r.crossing_count() <= d.crossing_count(), "crossing count increased");
    }
    if (i % 4 == 0) {
      if (const auto c = auto_certify(d, 2, 1)) {
        ++certificates;
        certified_trace(verify_certificate(*c), "auto_certify output");
      }
    }
  }
  expect(pairs >= 200, "only " + std::to_string(pairs) + " diagram/disk pairs");
  expect(certificates > 0, "no random certificates to re-verify");
}

void formats() {
  for (const auto& entry : std::filesystem::directory_iterator(SPG_CORPUS_DIR)) {
    if (entry.path().extension() != ".sgd") continue;
    const auto text = read_file(entry.path());
    const auto doc = parse_sgd_document(text);
    expect(serialize_sgd(doc.diagram, doc.comments) == text, entry.path().filename().string() + " round trip");
  }
  const auto dir = std::filesystem::temp_directory_path() / "spg-acceptance";
  std::filesystem::create_directories(dir);
  const auto put = [&dir](const std::string& name, const std::string& text) {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  };
  const auto corpus = [](const char* name) { return spgtest::corpus_path(name); };
  put("hopf.sgd", read_file(corpus("hopf.sgd")));
  const std::pair<std::vector<std::string>, int> cases[] = {
      {{"certify", corpus("hopf.cert")}, exit_code::ok},
      {{"validate"}, exit_code::usage},
      {{"validate", put("garbled.sgd", "sgd 1\nV v1 a1.0 a1.0\n")}, exit_code::parse},
      {{"validate", corpus("split.sgd")}, exit_code::invalid},
      {{"certify", put("bad.cert", "cert 1\ndiagram hopf.sgd\nstep cycle=s1 face=F9\n")}, exit_code::unknown},
      {{"auto-certify", corpus("k2.sgd")}, exit_code::negative},
  };
  for (const auto& [args, code] : cases) {
    const int got = run(args);
    expect(got == code, args.front() + " exited " + std::to_string(got) + ", expected " + std::to_string(code));
  }
  std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void()>> criteria[] = {
      {"borromean chain certifies in 2 steps through the transcribed intermediate graphs", borromean_chain},
      {"C_n family: n-step certificates for n = 0..4, nontrivial with a cut-vertex witness for n > 0", cn_family},
      {"fig14: auto-certify --max-steps 4 --max-len 4 finds a certificate", fig14},
      {"hopf 1 step, unknot and trefoil 0 steps, cross-checked against the abstract quotient", small_links},
      {"pendant loop disk fails the precondition and contract refuses it", precondition_negative},
      {"oracle suites: cut points, contraction consistency, validity, crossings, re-verification", oracle_suites},
      {"format round trip on the corpus and the exit-code contract", formats},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    try {
      check();
      std::cout << "PASS " << name << '\n';
    } catch (const Failed& f) {
      ++failures;
      std::cout << "FAIL " << name << ": " << f.why << '\n';
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << name << ": " << e.what() << '\n';
    }
  }
  return failures == 0 ? 0 : 1;
}
