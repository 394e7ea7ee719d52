#include "doctest.h"
#include "support.hpp"
#include "torsorkit/io.hpp"

using namespace support;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::VerificationFailure;
}

std::string what_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const char* kTorsor = R"({
  "format_version": 1,
  "kind": "torsor",
  "field": {"type":"Q"},
  "dim": 2,
  "basis": ["1","x"],
  "tables": {
    "mul": [
      [[0,0],[0],"1"],
      [[0,1],[1],"1"],
      [[1,0],[1],"1"],
      [[1,1],[0],"2"]
    ],
    "unit": [
      [[],[0],"1"]
    ],
    "mu": [
      [[0],[0,0,0],"1"],
      [[1],[1,1,1],"1/2"]
    ]
  },
  "meta": {"note":"hand written"}
}
)";

std::string replaced(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("canonical files round-trip byte for byte") {
  const Document d = parse_document(kTorsor);
  CHECK(serialize(d) == kTorsor);
  CHECK(d.meta.at("note") == "hand written");
  const Torsor& t = std::get<Torsor>(d.object);
  CHECK(t.theta_derived());
  CHECK(t.verified());
  CHECK(t.mu().at(7, 1) == q("1/2"));
}

TEST_CASE("every registry entry round-trips") {
  for (const auto& e : gallery_entries()) {
    CAPTURE(e.name);
    const Document d = load("registry:" + e.name);
    CHECK(d.meta.at("source") == "registry:" + e.name);
    const std::string text = serialize(d);
    const Document back = parse_document(text);
    CHECK(serialize(back) == text);
    CHECK(kind_name(back.object) == to_string(e.kind));
    CHECK(fingerprint(back.object) == fingerprint(d.object));
  }
}

TEST_CASE("structures survive the round trip") {
  const Torsor quat = gallery_torsor("quaternion");
  const Torsor back = std::get<Torsor>(parse_document(serialize({quat, {}})).object);
  CHECK(back.algebra() == quat.algebra());
  CHECK(back.mu() == quat.mu());
  CHECK(back.theta() == quat.theta());

  const Cotorsor c = dualize(quat);
  CHECK(std::get<Cotorsor>(parse_document(serialize({c, {}})).object) == c);

  const HopfAlgebra sw = gallery_hopf("sweedler");
  CHECK(std::get<HopfAlgebra>(parse_document(serialize({sw, {}})).object) == sw);

  // F5 coefficients print as residues
  const TwistData tw = gallery_twist("twist-z2xz2-bichar-f5");
  const std::string text = serialize({twist_document(tw, false), {}});
  CHECK(text.find("\"4\"") != std::string::npos);
  const auto doc = std::get<TwistDocument>(parse_document(text).object);
  CHECK_FALSE(doc.host.has_value());
  CHECK(code_of([&] { resolve_twist(doc); }) == Errc::ParseError);
  CHECK(resolve_twist(doc, &tw.host).f == tw.f);
  const HopfAlgebra small = gallery_hopf("function-z2");
  CHECK(code_of([&] { resolve_twist(doc, &small); }) == Errc::DimensionMismatch);
}

TEST_CASE("decorated torsors and matrices") {
  const DecoratedTorsor u = tor_unit(gallery_hopf("group-z3"));
  const std::string text = serialize({u, {}});
  const auto back = std::get<DecoratedTorsor>(parse_document(text).object);
  CHECK(back.i_l == u.i_l);
  CHECK(back.i_r == u.i_r);
  CHECK(back.left_ref == u.left_ref);
  CHECK(serialize({back, {}}) == text);

  // a fingerprint that no longer matches the carrier is basis drift
  const std::string fp = compute_side_hopf(u.torsor, Side::Left).carrier.fingerprint();
  const std::string drifted = replaced(text, "\"source_fingerprint\": \"" + fp, "\"source_fingerprint\": \"0" + fp.substr(1));
  CHECK(what_of([&] { parse_document(drifted); }).find("basis drift") != std::string::npos);

  const MatrixDocument m{LinearMap::identity(QQ, {3}), "a", "b"};
  const auto mb = std::get<MatrixDocument>(parse_document(serialize({m, {}})).object);
  CHECK(mb.matrix == m.matrix);
  CHECK(mb.source_fingerprint == "a");
}

TEST_CASE("malformed files name the offending field") {
  CHECK(code_of([] { parse_document(replaced(kTorsor, "\"1/2\"", "\"1/0\"")); }) == Errc::ParseError);
  CHECK(what_of([] { parse_document(replaced(kTorsor, "\"1/2\"", "\"1/0\"")); }).find("tables.mu[1][2]") !=
        std::string::npos);
  CHECK(code_of([] { parse_document(replaced(kTorsor, "\"format_version\": 1", "\"format_version\": 3")); }) ==
        Errc::UnsupportedVersion);
  CHECK(code_of([] { parse_document(replaced(kTorsor, "[[1],[1,1,1]", "[[1],[1,2,1]")); }) ==
        Errc::IndexOutOfRange);
  CHECK(code_of([] { parse_document(replaced(kTorsor, "[[1],[1,1,1]", "[[1],[1,1]")); }) == Errc::ParseError);
  CHECK(code_of([] { parse_document(replaced(kTorsor, "\"1/2\"", "0.5")); }) == Errc::ParseError);
  CHECK(code_of([] { parse_document(replaced(kTorsor, "\"kind\": \"torsor\"", "\"kind\": \"sheaf\"")); }) ==
        Errc::ParseError);
  CHECK(code_of([] { parse_document(replaced(kTorsor, "\"mu\":", "\"nu\":")); }) == Errc::ParseError);
  CHECK(code_of([] { parse_document(replaced(kTorsor, "\"basis\": [\"1\",\"x\"]", "\"basis\": [\"1\"]")); }) ==
        Errc::ParseError);
  CHECK(code_of([] { parse_document(replaced(kTorsor, "[[1,1],[0],\"2\"]", "[[1,1],[0],\"2\"],[[1,1],[0],\"3\"]")); }) ==
        Errc::ParseError);
  CHECK(code_of([] { parse_document(replaced(kTorsor, "{\"type\":\"Q\"}", "{\"type\":\"F_p\",\"p\":4}")); }) ==
        Errc::ParseError);
  const std::string json_error = what_of([] { parse_document("{\n  \"kind\": ,\n}"); });
  CHECK(json_error.find("line 2") != std::string::npos);
  CHECK(code_of([] { load("/nonexistent/file.json"); }) == Errc::ParseError);
  CHECK(code_of([] { load("registry:nothing"); }) == Errc::UnknownRecipe);
}

TEST_CASE("Galois recipe files") {
  const GaloisBuild g = build_galois_from_text(
      R"({"field": {"type":"Q"}, "polynomial": ["-3","0","1"], "action": [["0","1"],["0","-1"]]})");
  CHECK(g.torsor.mu() == build_quadratic_torsor(QQ, q("3"), QuadraticVariant::Sqrt).mu());
  CHECK(code_of([] { build_galois_from_text(R"({"field": "Q", "polynomial": [1]})"); }) == Errc::ParseError);
}
