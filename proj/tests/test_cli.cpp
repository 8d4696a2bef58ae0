#include <algorithm>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "qweb/normalform.hpp"
#include "qweb_cli/commands.hpp"
#include "qweb_cli/dsl.hpp"
#include "qweb_cli/json_io.hpp"

using namespace qweb;
using namespace qweb::cli;

namespace {

CommandResult run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  return run_command(args, in);
}

}  // namespace

TEST_CASE("parse trees") {
  auto e = parse("merge(1,1) ; split(1,1)");
  CHECK(e.kind == Expr::Kind::Compose);
  CHECK(e.str() == "(; merge(1,1) split(1,1))");
  auto m = elaborate(e);
  CHECK(m.src() == Composition{2});
  CHECK(m.tgt() == Composition{2});

  auto t = parse("wdot(2) * id(3)");
  CHECK(t.kind == Expr::Kind::Tensor);
  CHECK(elaborate(t) == tensor(wdot(2), id({3})));

  // ; binds looser than *, and sums are loosest.
  CHECK(parse("wdot(1) * bdot(1) ; merge(1,1)").kind == Expr::Kind::Compose);
  CHECK(parse("id(1) ; id(1) + id(1)").kind == Expr::Kind::Add);
  CHECK(parse_morphism("-1/2 bdot(1) + 3 id(1)  # comment") == bdot(1) * Scalar::frac(-1, 2) + id({1}) * Scalar(3));
  CHECK(parse_morphism("packet(3;3,1;2)") == packet(3, {3, 1}, {2}));
  CHECK(parse_morphism("omegac(2,1)") == omega_circ(2, 1));
}

TEST_CASE("composition reads as g then f") {
  CHECK(parse_morphism("merge(1,1) ; split(1,1)") == compose(merge(1, 1), split(1, 1)));
  CHECK(parse_morphism("wdot(2) ; bdot(2)") == compose(wdot(2), bdot(2)));
}

TEST_CASE("errors carry a position") {
  try {
    parse_morphism("merge(1,2) ; merge(1,1)");
    FAIL("expected a boundary error");
  } catch (const DslError& e) {
    CHECK(e.kind() == "boundary");
    CHECK(e.pos().line == 1);
  }
  try {
    parse("id(1) ;\n  merge(1,");
    FAIL("expected a syntax error");
  } catch (const DslError& e) {
    CHECK(e.kind() == "syntax");
    CHECK(e.pos().line == 2);
    CHECK(e.pos().column >= 3);
  }
  CHECK_THROWS_AS(parse_morphism("merge(0,1)"), DslError);
  CHECK_THROWS_AS(parse_morphism("frobnicate(1)"), DslError);
  CHECK_THROWS_AS(parse_morphism("merge(1,1) + id(1)"), DslError);
}

TEST_CASE("JSON round trips") {
  for (const auto& c : cfd_basis({2, 1}, {1, 2}, 2)) CHECK(cfd_from_json(to_json(c)) == c);
  auto nm = reduce(parse_morphism("bdot(2) ; merge(1,1) ; wdot(1) * id(1) ; split(1,1) + 1/3 wdot(2)"));
  CHECK(normal_from_json(to_json(nm)) == nm);
  CHECK(normal_from_json(Json::parse(to_json(nm).dump())) == nm);
  for (const char* s : {"0", "-7/3", "1/2 + -1 i"}) CHECK(scalar_from_json(to_json(Scalar::parse(s))) == Scalar::parse(s));
  auto err = error_json("syntax", "bad", std::make_pair(2, 5));
  CHECK(err["error"]["line"] == 2);
  CHECK(err["error"]["column"] == 5);
}

TEST_CASE("subcommands and exit codes") {
  auto r = run({"dim", "--source", "2", "--target", "2", "--maxdeg", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "2 4 6\n");

  r = run({"sergeev", "straighten", "x1 s1", "--n", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "s1 x2 + 1 - c1 c2\n");

  r = run({"basis", "--source", "1,1", "--target", "1,1", "--finite"});
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);

  r = run({"check-relations", "--suite", "qweb-white", "--bound", "3", "--n", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"poly-check", "det", "--s", "3"});
  CHECK(r.status == 0);

  r = run({"normalize", "merge(1,2) ; merge(1,1)"});
  CHECK(r.status == 1);
  auto j = Json::parse(r.err);
  CHECK(j["error"]["kind"] == "boundary");
  CHECK(j["error"].contains("line"));

  r = run({"sergeev", "straighten", "x9", "--n", "2"});
  CHECK(r.status == 1);

  CHECK(run({}).status == 2);
  CHECK(run({"dim", "--source", "2"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("expressions can come from stdin") {
  auto r = run({"normalize", "-"}, "merge(1,1) ;\nsplit(1,1)\n");
  CHECK(r.status == 0);
  auto j = Json::parse(r.out);
  CHECK(j["terms"][0]["coeff"] == "2");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"normalize", "bdot(1) * bdot(2) ; cross(2,1) ; wdot(2) * id(1)"},
      {"eval", "cross(1,1) ; wdot(1) * bdot(1)", "--n", "2"},
      {"basis", "--source", "2,1", "--target", "1,2", "--maxdeg", "1", "--json"},
      {"sergeev", "multiply", "x1 c2 s1", "s2 x3", "--n", "3", "--json"}};
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}
