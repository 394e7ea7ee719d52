#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("torsorkit_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const fs::path log = workdir() / "out.txt";
  const std::string cmd = "cd '" + workdir().string() + "' && '" TORSORKIT_CLI "' " + args + " > '" +
                          log.string() + "' 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream buf;
  buf << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

std::string read(const std::string& name) {
  std::ifstream in(workdir() / name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write(const std::string& name, const std::string& text) { std::ofstream(workdir() / name) << text; }

}  // namespace

TEST_CASE("gallery build then verify") {
  Run r = run("gallery build cyclic:Q:2:-1:-1:-1 -o quat.json");
  CHECK(r.code == 0);
  r = run("verify torsor quat.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: PASS (7/7 checks)") != std::string::npos);
  r = run("hopf-side --side left quat.json -o hl.json");
  CHECK(r.code == 0);
  r = run("verify hopf hl.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("dim 4") != std::string::npos);
  CHECK(run("coactions quat.json").code == 0);
  CHECK(run("can --side right quat.json").code == 0);
  CHECK(run("report quat.json").code == 0);
  CHECK(run("verify torsor registry:cyclic-f7-3").code == 0);
  r = run("gallery list");
  CHECK(r.code == 0);
  CHECK(r.out.find("galois-f4") != std::string::npos);
}

TEST_CASE("axiom failures exit 1 with a witness") {
  write("bad.json", R"({
  "format_version": 1,
  "kind": "torsor",
  "field": {"type":"Q"},
  "dim": 2,
  "basis": ["1","x"],
  "tables": {
    "mul": [[[0,0],[0],"1"],[[0,1],[1],"1"],[[1,0],[1],"1"],[[1,1],[0],"2"]],
    "unit": [[[],[0],"1"]],
    "mu": [[[0],[0,0,0],"1"],[[1],[1,0,0],"1"]]
  }
})");
  const Run r = run("verify torsor bad.json");
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] (m⊗Id)∘μ = 1⊗Id -- at x,") != std::string::npos);
  // later commands refuse the torsor with the same code
  CHECK(run("hopf-side --side left bad.json -o h.json").code == 1);
}

TEST_CASE("input errors exit 2") {
  write("div.json", R"({"format_version": 1, "kind": "algebra", "field": {"type":"Q"}, "dim": 1,
  "basis": ["1"], "tables": {"mul": [[[0,0],[0],"1/0"]], "unit": [[[],[0],"1"]]}})");
  Run r = run("verify algebra div.json");
  CHECK(r.code == 2);
  CHECK(r.out.find("tables.mul[0][2]") != std::string::npos);
  CHECK(run("verify torsor missing.json").code == 2);
  CHECK(run("verify hopf registry:quaternion").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("gallery build cyclic:Q:3:1:1:1").code == 2);
  CHECK(run("gallery build quadratic:Q:0").code == 2);
}

TEST_CASE("dualizing twice reproduces the file") {
  REQUIRE(run("gallery build trivial-s3 -o s3.json").code == 0);
  REQUIRE(run("dualize s3.json -o s3c.json").code == 0);
  REQUIRE(run("dualize s3c.json -o s3back.json").code == 0);
  const std::string a = read("s3.json"), b = read("s3back.json");
  // identical apart from the provenance line
  CHECK(a.substr(0, a.find(",\n  \"meta\"")) + "\n}\n" == b);
}

TEST_CASE("composition, Tor(H) and twists end to end") {
  REQUIRE(run("gallery build trivial-z2 -o t.json").code == 0);
  CHECK(run("phi t.json t.json -o phi.json").code == 0);
  CHECK(run("compose t.json t.json --phi phi.json -o c.json").code == 0);
  CHECK(run("verify torsor c.json").code == 0);
  REQUIRE(run("gallery build quaternion -o q.json").code == 0);
  CHECK(run("compose q.json q.json --phi phi.json").code == 2);  // fingerprints disagree

  REQUIRE(run("tor decorate q.json -o dq.json").code == 0);
  REQUIRE(run("tor inverse dq.json -o dqi.json").code == 0);
  REQUIRE(run("tor multiply dq.json dqi.json -o prod.json").code == 0);
  REQUIRE(run("hopf-side --side left q.json -o hl.json").code == 0);
  REQUIRE(run("tor unit hl.json -o unit.json").code == 0);
  CHECK(run("tor equiv prod.json unit.json").code == 0);
  REQUIRE(run("gallery build group-z2 -o g.json").code == 0);
  REQUIRE(run("tor unit g.json -o gu.json").code == 0);
  CHECK(run("tor equiv prod.json gu.json").code == 1);
  CHECK(run("verify decorated prod.json").code == 0);

  REQUIRE(run("gallery build twist-z2-bichar -o tw.json").code == 0);
  CHECK(run("verify twist tw.json").code == 0);
  CHECK(run("twist tw.json -o hf.json").code == 0);
  CHECK(run("verify hopf hf.json").code == 0);
  const Run p = run("parmentier tw.json -o cot.json --dual dual.json");
  CHECK(p.code == 0);
  CHECK(p.out.find("i_r: H_r(C*) → H_F*: bijective") != std::string::npos);
  CHECK(run("verify cotorsor cot.json").code == 0);
  CHECK(run("verify decorated dual.json").code == 0);
}

TEST_CASE("a singular twist is reported, not crashed on") {
  REQUIRE(run("gallery build function-z2 -o h.json").code == 0);
  write("sing.json", R"({"format_version": 1, "kind": "twist", "field": {"type":"Q"}, "dim": 2,
  "basis": ["1_0","1_1"], "tables": {"F": [[[],[0,0],"1"],[[],[0,1],"1"]]}})");
  const Run r = run("verify twist sing.json --hopf h.json");
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] F invertible") != std::string::npos);
  CHECK(run("twist h.json sing.json -o x.json").code == 1);
  CHECK(run("verify twist sing.json").code == 2);
}
