#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "spg/certificate_io.hpp"
#include "spg/certify.hpp"
#include "spg/cli.hpp"
#include "spg/sgd.hpp"
#include "support/oracles.hpp"

using namespace spg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return spgtest::corpus_path(name); }

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("spg-cli-test-" + std::to_string(std::random_device{}()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
};

const char* nonplanar =
    "sgd 1\n"
    "X x1 a1.0 a2.0 a3.0 a4.0 over=13\n"
    "X x2 a3.1 a4.1 a2.1 a1.1 over=13\n";

}  // namespace

TEST_CASE("validate") {
  const auto ok = run({"validate", corpus("hopf.sgd")});
  CHECK(ok.code == exit_code::ok);
  CHECK(ok.out.find("4 faces") != std::string::npos);

  Scratch s;
  CHECK(run({"validate", s.write("bad.sgd", nonplanar)}).code == exit_code::invalid);
  CHECK(run({"validate", corpus("split.sgd")}).code == exit_code::invalid);
  const auto parse = run({"validate", s.write("dup.sgd", "sgd 1\nV v1 a1.0 a1.0\n")});
  CHECK(parse.code == exit_code::parse);
  CHECK(parse.err.find("dup.sgd:2:11") != std::string::npos);
  CHECK(run({"validate", (s.dir / "absent.sgd").string()}).code == exit_code::usage);
}

TEST_CASE("analyze") {
  const auto c0 = run({"analyze", corpus("c0.sgd")});
  CHECK(c0.code == exit_code::ok);
  CHECK(c0.out.find("base criterion: holds") != std::string::npos);
  const auto c1 = run({"analyze", corpus("c1.sgd")});
  CHECK(c1.out.find("base criterion: fails") != std::string::npos);
  CHECK(c1.out.find("cut_vertices={v1,v2}") != std::string::npos);
  const auto k2 = run({"analyze", corpus("k2.sgd")});
  CHECK(k2.out.find("quick negative: pendant-vertex") != std::string::npos);
  // a split map can still be analyzed
  const auto split = run({"analyze", corpus("split.sgd")});
  CHECK(split.code == exit_code::ok);
  CHECK(split.out.find("split-map") != std::string::npos);
  Scratch s;
  CHECK(run({"analyze", s.write("bad.sgd", nonplanar)}).code == exit_code::invalid);
}

TEST_CASE("find-disks") {
  const auto hopf = run({"find-disks", corpus("hopf.sgd"), "--max-len", "1"});
  CHECK(hopf.code == exit_code::ok);
  CHECK(hopf.out.rfind("disk cycle=s1 face=F1\n", 0) == 0);
  const auto verbose = run({"find-disks", corpus("hopf.sgd"), "-v"});
  CHECK(verbose.out.find("piercing") != std::string::npos);
  CHECK(run({"find-disks", corpus("borromean6.sgd")}).out.empty());
  const auto split = run({"find-disks", corpus("split.sgd")});
  CHECK(split.code == exit_code::negative);
  CHECK(split.out.find("not irreducible (split-map)") != std::string::npos);
}

TEST_CASE("contract") {
  const auto r = run({"contract", corpus("c1.sgd"), "--disk", "cycle=s3 face=F4"});
  CHECK(r.code == exit_code::ok);
  CHECK(canonicalize(parse_sgd(r.out)) == spgtest::corpus("c0.sgd"));
  CHECK(run({"contract", corpus("c1.sgd"), "--disk", "cycle=s3"}).code == exit_code::parse);
  CHECK(run({"contract", corpus("trefoil.sgd"), "--disk", "cycle=s1 face=F1"}).code == exit_code::unknown);
  const auto pre = run({"contract", corpus("pendant_loop.sgd"), "--disk", "cycle=s1 face=F2"});
  CHECK(pre.code == exit_code::unknown);
  CHECK(pre.err.find("contraction refused") != std::string::npos);
  CHECK(run({"contract", corpus("c1.sgd")}).code == exit_code::usage);
}

TEST_CASE("certify") {
  const auto bor = run({"certify", corpus("borromean.cert")});
  CHECK(bor.code == exit_code::ok);
  CHECK(bor.out.find("step 2:") != std::string::npos);
  CHECK(bor.out.find("verdict: irreducible (2 steps)") != std::string::npos);
  CHECK(bor.out.find("non-splittable") != std::string::npos);
  CHECK(run({"certify", corpus("c3.cert")}).out.find("nontrivial") != std::string::npos);

  Scratch s;
  s.write("hopf.sgd", read_file(corpus("hopf.sgd")));
  s.write("k2.sgd", read_file(corpus("k2.sgd")));
  s.write("bad.sgd", nonplanar);
  CHECK(run({"certify", s.write("wrong.cert", "cert 1\ndiagram hopf.sgd\nstep cycle=s1 face=F9\n")}).code ==
        exit_code::unknown);
  CHECK(run({"certify", s.write("zero.cert", "cert 1\ndiagram hopf.sgd\n")}).code == exit_code::unknown);
  CHECK(run({"certify", s.write("k2.cert", "cert 1\ndiagram k2.sgd\n")}).code == exit_code::negative);
  CHECK(run({"certify", s.write("garbled.cert", "cert 1\ndiagram hopf.sgd\nstep whatever\n")}).code ==
        exit_code::parse);
  CHECK(run({"certify", s.write("bad.cert", "cert 1\ndiagram bad.sgd\n")}).code == exit_code::invalid);
  CHECK(run({"certify", s.write("lost.cert", "cert 1\ndiagram lost.sgd\n")}).code == exit_code::usage);
  const auto json = s.write("h.json", R"({"diagram": "hopf.sgd", "steps": [{"cycle": ["s1"], "face": "F1"}]})");
  CHECK(run({"certify", json}).code == exit_code::ok);
}

TEST_CASE("auto-certify") {
  Scratch s;
  const auto emitted = (s.dir / "hopf.cert").string();
  const auto hopf = run({"auto-certify", corpus("hopf.sgd"), "--max-steps", "2", "--max-len", "1", "--emit", emitted});
  CHECK(hopf.code == exit_code::ok);
  CHECK(hopf.out.rfind("certificate: 1 step\n", 0) == 0);
  const auto cert = load_certificate(emitted);
  CHECK(cert.steps.size() == 1);
  CHECK(std::holds_alternative<Certified>(verify_certificate(cert)));
  CHECK(run({"certify", emitted}).code == exit_code::ok);

  const auto json = (s.dir / "fig14.json").string();
  CHECK(run({"auto-certify", corpus("fig14.sgd"), "--max-steps", "4", "--max-len", "4", "--emit", json}).code ==
        exit_code::ok);
  CHECK(read_file(json).front() == '{');
  CHECK(run({"certify", json}).code == exit_code::ok);

  CHECK(run({"auto-certify", corpus("pendant_loop.sgd")}).code == exit_code::unknown);
  CHECK(run({"auto-certify", corpus("k2.sgd")}).code == exit_code::negative);
  CHECK(run({"auto-certify", corpus("hopf.sgd"), "--max-steps", "x"}).code == exit_code::usage);
  CHECK(run({"auto-certify", corpus("hopf.sgd"), "--emit", (s.dir / "no" / "such" / "dir.cert").string()}).code ==
        exit_code::usage);
}

TEST_CASE("render") {
  Scratch s;
  const auto out = (s.dir / "hopf.svg").string();
  CHECK(run({"render", corpus("hopf.sgd"), "-o", out}).code == exit_code::ok);
  CHECK(read_file(out).find("</svg>") != std::string::npos);
  CHECK(run({"render", corpus("hopf.sgd")}).out.rfind("<?xml", 0) == 0);
  CHECK(run({"render", corpus("split.sgd")}).code == exit_code::invalid);
}

TEST_CASE("usage") {
  CHECK(run({}).code == exit_code::usage);
  CHECK(run({"frobnicate"}).code == exit_code::usage);
  CHECK(run({"validate"}).code == exit_code::usage);
  const auto help = run({"--help"});
  CHECK(help.code == exit_code::ok);
  CHECK(help.out.find("auto-certify") != std::string::npos);
}
