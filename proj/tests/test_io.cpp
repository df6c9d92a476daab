#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operad/io.hpp"
#include "operad/presets.hpp"

using namespace operad;

TEST_CASE("parse errors carry positions") {
  order_spec os;
  try {
    parse_presentation("operad x\nkind shuffle\ngenerator b arity 2 degree 0\nrelation b(1\n", os);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 4);
    CHECK(e.col > 10);
  }
  CHECK_THROWS_AS(parse_presentation("operad x\nkind sideways\n", os), parse_error);
  CHECK_THROWS_AS(
      parse_presentation("operad x\nkind shuffle\ngenerator b arity 2 degree 0\nrelation c(1,2)\n",
                         os),
      parse_error);
}

TEST_CASE("unknown generators and bad actions are rejected") {
  order_spec os;
  // action on a generator that breaks s^2 = 1
  std::string text =
      "operad bad\nkind symmetric\n"
      "generator a arity 2 degree 0 action table s1=+b\n"
      "generator b arity 2 degree 0 action table s1=+a\n"
      "generator c arity 2 degree 0 action table s1=-c\n"
      "relation a(a(1,2),3) - a(1,a(2,3))\n";
  CHECK_NOTHROW(parse_presentation(text, os));
  std::string bad =
      "operad bad\nkind symmetric\n"
      "generator a arity 2 degree 0 action table s1=+b\n"
      "generator b arity 2 degree 0 action table s1=-a\n"
      "relation a(a(1,2),3)\n";
  CHECK_THROWS_AS(parse_presentation(bad, os), error);
}

TEST_CASE("shuffle kind rejects non-canonical input trees") {
  order_spec os;
  std::string text =
      "operad x\nkind shuffle\ngenerator b arity 2 degree 0\nrelation b(b(2,1),3)\n";
  CHECK_THROWS_AS(parse_presentation(text, os), error);
  // symmetric kind canonicalises the same tree
  std::string sym =
      "operad x\nkind symmetric\ngenerator b arity 2 degree 0 action sign(-1)\n"
      "relation b(b(2,1),3)\n";
  presentation p = parse_presentation(sym, os);
  CHECK(p.relations[0].lead_coeff() == -1);
}

TEST_CASE("monomial text form uses exact leaf labels") {
  order_spec os;
  presentation lie = preset("lie", os);
  opoly p = parse_polynomial("1/2 * b(b(1,3),2)", lie, os);
  CHECK(p.text(lie.gens) == "1/2 * b(b(1,3),2)");
}
