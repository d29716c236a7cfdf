#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "xmodlie/commands.hpp"
#include "xmodlie/uce.hpp"

using namespace xmodlie;
using namespace xmodlie::testutil;

namespace {

Workspace shipped_corpus() {
  const std::string dir = XMODLIE_DATA_DIR;
  return load({dir + "/abelian.xm", dir + "/sl2.xm", dir + "/h3.xm"});
}

}  // namespace

TEST_CASE("loading a single algebra") {
  const Workspace ws = load_text(R"(
    algebra sl2 {
      dim 3
      bracket 2 1 1 2
      bracket 2 3 3 -2
      bracket 1 3 2 1
    })");
  REQUIRE(ws.algebras.count("sl2") == 1);
  const LiePtr loaded = ws.algebra("sl2");
  const LiePtr expected = builtin::sl2();
  for (Index i = 0; i < 3; ++i)
    CHECK(exactly_equal(loaded->ad(i), expected->ad(i)));
}

TEST_CASE("fractional constants parse as p/q") {
  const Workspace ws = load_text(R"(
    algebra half { dim 2  bracket 1 2 1 1/2 })");
  CHECK(ws.algebra("half")->c(0, 1, 0) == Rational(1) / 2);
  CHECK(ws.algebra("half")->c(1, 0, 0) == Rational(-1) / 2);
}

TEST_CASE("antisymmetry conflicts are rejected as axiom violations") {
  try {
    load_text("algebra bad { dim 2  bracket 1 2 1 1  bracket 2 1 1 1 }");
    FAIL("expected an error");
  } catch (const XmodError& e) {
    CHECK(e.kind() == ErrorKind::axiom);
    CHECK(std::string(e.what()).find("antisymmetry") != std::string::npos);
  }
}

TEST_CASE("jacobi violations are rejected") {
  try {
    load_text("algebra bad { dim 3  bracket 1 2 3 1  bracket 1 3 1 1 }");
    FAIL("expected an error");
  } catch (const XmodError& e) {
    CHECK(e.kind() == ErrorKind::axiom);
    CHECK(std::string(e.what()).find("jacobi") != std::string::npos);
  }
}

TEST_CASE("parse errors carry positions and the parse category") {
  try {
    load_text("algebra broken { dim 2\n  bracket 1 5 1 1 }", "doc");
    FAIL("expected an error");
  } catch (const XmodError& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(std::string(e.what()).find("doc:2") != std::string::npos);
  }
  CHECK_THROWS_AS(load_text("algebra x { dim 2 bracket 1 2 1 1/0 }"),
                  XmodError);
  CHECK_THROWS_AS(load_text("xmod x { module ghost actor ghost }"), XmodError);
  CHECK_THROWS_AS(load_text("nonsense"), XmodError);
}

TEST_CASE("an xmod failing its axioms is rejected with the axiom category") {
  const std::string text = R"(
    algebra sl2 { dim 3  bracket 2 1 1 2  bracket 2 3 3 -2  bracket 1 3 2 1 }
    xmod bad { module sl2  actor sl2  boundary identity  action zero })";
  try {
    load_text(text);
    FAIL("expected an error");
  } catch (const XmodError& e) {
    CHECK(e.kind() == ErrorKind::axiom);
  }
}

TEST_CASE("a braiding failing BLie1 is rejected") {
  const std::string text = R"(
    algebra sl2 { dim 3  bracket 2 1 1 2  bracket 2 3 3 -2  bracket 1 3 2 1 }
    xmod sl2_id { module sl2  actor sl2  boundary identity  action adjoint }
    braiding bad { over sl2_id  zero })";
  try {
    load_text(text);
    FAIL("expected an error");
  } catch (const XmodError& e) {
    CHECK(e.kind() == ErrorKind::axiom);
    CHECK(std::string(e.what()).find("BLie1") != std::string::npos);
  }
}

TEST_CASE("the shipped corpus loads and verifies") {
  const Workspace ws = shipped_corpus();
  CHECK(ws.algebras.count("k3") == 1);
  CHECK(ws.braided.count("sl2_id_br") == 1);
  CHECK(ws.braided.count("k3_tb") == 1);
  CHECK(ws.tensors.count("k3_tb") == 1);
  CHECK(ws.algebras.count("k3_tb.m") == 1);  // the tensor square algebra
  CHECK(ws.morphisms.count("pi_k3k2") == 1);
  CHECK(ws.morphism("pi_k3k2").braided);

  // loaded sl2 and h3 match the built-in definitions
  for (Index i = 0; i < 3; ++i) {
    CHECK(exactly_equal(ws.algebra("sl2")->ad(i), builtin::sl2()->ad(i)));
    CHECK(exactly_equal(ws.algebra("h3")->ad(i), builtin::heisenberg()->ad(i)));
  }

  const Report r = cmd_verify(ws, {});
  CHECK(r.ok);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("analyze reports the counterexample subspace dimensions") {
  const Workspace ws = shipped_corpus();
  const Report r = cmd_analyze(ws, "k3_tb");
  CHECK(r.ok);
  const Json& dims = r.doc["analysis"]["dims"];
  CHECK(dims["braided_center"] == 0);
  CHECK(dims["center_n"] == 3);
  CHECK(dims["stabilizer"] == 3);
  CHECK(dims["fixed_points"] == 9);
  CHECK(r.doc["analysis"]["perfect_xmod"] == false);
}

TEST_CASE("classify reports the counterexample flags") {
  const Workspace ws = shipped_corpus();
  const Report r = cmd_classify(ws, "pi_k3k2");
  CHECK(r.ok);
  const Json& cls = r.doc["classification"];
  CHECK(cls["extension"] == true);
  CHECK(cls["compatible_central"] == true);
  CHECK(cls["central"] == false);
  CHECK(cls["dims"]["ker_f1"] == 5);
  CHECK(cls["dims"]["ker_f2"] == 1);
}

TEST_CASE("identity and plain crossed-module morphisms from files") {
  const Workspace ws = load_text(R"(
    algebra sl2 { dim 3  bracket 2 1 1 2  bracket 2 3 3 -2  bracket 1 3 2 1 }
    xmod sl2_id { module sl2  actor sl2  boundary identity  action adjoint }
    braiding sl2_id_br { over sl2_id  bracket }
    morphism id_braided { from sl2_id_br  to sl2_id_br  f1 identity  f2 identity }
    morphism id_plain { from sl2_id  to sl2_id  f1 identity  f2 identity }
  )");
  {
    const Report r = cmd_classify(ws, "id_braided");
    CHECK(r.ok);
    CHECK(r.doc["kind"] == "braided");
    CHECK(r.doc["classification"]["central"] == true);
    CHECK(r.doc["classification"]["compatible_central"] == true);
  }
  {
    const Report r = cmd_classify(ws, "id_plain");
    CHECK(r.ok);
    CHECK(r.doc["kind"] == "xmod");
    CHECK(r.doc["classification"]["central"] == true);
  }
}

TEST_CASE("uce command") {
  const Workspace ws = shipped_corpus();
  {
    const Report r = cmd_uce(ws, "sl2_id_br");
    CHECK(r.ok);
    CHECK(r.doc["kind"] == "uce");
    CHECK(r.doc["extension"]["classification"]["central"] == true);
  }
  {
    const Report r = cmd_uce(ws, "h3_id_br");
    CHECK(r.ok);
    CHECK(r.doc["kind"] == "not_perfect");
    CHECK(r.doc["certificate"]["derived_codim"] == 2);
    CHECK(r.doc["witness"]["h_differs_from_g"] == true);
  }
}

TEST_CASE("tensor command") {
  const Workspace ws = shipped_corpus();
  const Report r = cmd_tensor(ws, "k2", "k2", "zero", "zero");
  CHECK(r.ok);
  CHECK(r.doc["dim"] == 4);
  CHECK(r.doc["bracket_is_zero"] == true);
  const Report r2 = cmd_tensor(ws, "sl2", "sl2");
  CHECK(r2.doc["dim"] == 3);
  CHECK(r2.doc["relation_dim"] == 6);
}

TEST_CASE("demos reproduce the worked examples") {
  CHECK(cmd_demo("k2k3").exit_code() == 0);
  CHECK(cmd_demo("uce-perfect").exit_code() == 0);
  CHECK(cmd_demo("sl2-corollary").exit_code() == 0);
  CHECK_THROWS_AS(cmd_demo("nope"), XmodError);
}

TEST_CASE("machine reports are deterministic and round-trip") {
  const Workspace ws = shipped_corpus();
  const Report r1 = cmd_analyze(ws, "k3_tb");
  const Report r2 = cmd_analyze(shipped_corpus(), "k3_tb");
  const std::string machine = r1.render(true);
  CHECK(machine == r2.render(true));  // byte-identical across runs

  const Json reparsed = Json::parse(machine);
  CHECK(reparsed.dump(2) + "\n" == machine);  // parse -> re-emit idempotent

  CHECK(r1.render(false).find("braided_center: 0") != std::string::npos);
}

TEST_CASE("report failure categories map onto exit codes") {
  Report r;
  CHECK(r.exit_code() == 0);
  r.fail(ErrorKind::classification);
  CHECK(r.exit_code() == 4);
  r.fail(ErrorKind::axiom);  // a milder failure does not downgrade
  CHECK(r.exit_code() == 4);
  Report r2;
  r2.fail(ErrorKind::axiom);
  r2.fail(ErrorKind::internal);
  CHECK(r2.exit_code() == 5);
  CHECK(XmodError(ErrorKind::parse, "x").exit_code() == 2);
}

TEST_CASE("strict mode keeps passing on honest corpus objects") {
  const Workspace ws = shipped_corpus();
  const CommandOptions strict{true};
  CHECK(cmd_analyze(ws, "sl2_tb", strict).exit_code() == 0);
  CHECK(cmd_analyze(ws, "h3_id_br", strict).exit_code() == 0);
}

TEST_CASE("verify rejects unknown names with the parse category") {
  const Workspace ws = shipped_corpus();
  try {
    cmd_verify(ws, {"ghost"});
    FAIL("expected an error");
  } catch (const XmodError& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(e.exit_code() == 2);
  }
}
