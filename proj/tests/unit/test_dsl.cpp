#include <catch_amalgamated.hpp>

#include "dimalg/dsl.hpp"

using namespace dimalg;

TEST_CASE("parsing single-operation identities") {
  auto doc = parse_identities("M(M(a,b),c) - M(a,M(b,c))\n");
  CHECK(doc.signature == Signature::Single);
  REQUIRE(doc.identities.size() == 1);
  const Poly& p = doc.identities[0].poly;
  CHECK(doc.identities[0].degree == 3);
  CHECK(p.at(mul(mul(leaf(1), leaf(2)), leaf(3))) == 1);
  CHECK(p.at(mul(leaf(1), mul(leaf(2), leaf(3)))) == -1);
}

TEST_CASE("parsing coefficients, names, comments, and blank lines") {
  auto doc = parse_identities(
      "# defining identity\n"
      "rac: M(a,M(b,c)) + M(a,M(c,b))\n"
      "\n"
      "two: 2 M(a,b) - 2*M(b,a)  # trailing comment\n");
  REQUIRE(doc.identities.size() == 2);
  CHECK(doc.identities[0].name == "rac");
  CHECK(doc.identities[1].name == "two");
  CHECK(doc.identities[1].poly.at(mul(leaf(1), leaf(2))) == 2);
  CHECK(doc.identities[1].poly.at(mul(leaf(2), leaf(1))) == -2);
}

TEST_CASE("signature inference") {
  CHECK(parse_identities("L(a,b) - R(b,a)\n").signature == Signature::Dialgebra);
  CHECK(parse_identities("L(M(a,b),c) - R(c,M(a,b))\n").signature == Signature::Dialgebra);
  CHECK(parse_identities("T(a,b,c) - T(a,c,b)\n").signature == Signature::Trilinear);
  CHECK_THROWS_AS(parse_identities("T(a,b,c) - M(a,M(b,c))\n"), DslError);
}

TEST_CASE("parse errors carry line and column information") {
  try {
    parse_identities("M(a,b)\nM(a,a)\n");
    FAIL("expected a parse error");
  } catch (const DslError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("repeated variable") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_identities("M(a,c)\n"), DslError);        // non-contiguous variables
  CHECK_THROWS_AS(parse_identities("M(a,b) + c\n"), DslError);    // unequal degrees
  CHECK_THROWS_AS(parse_identities("M(a\n"), DslError);           // truncated
  CHECK_THROWS_AS(parse_identities("M(a,b) * 2\n"), DslError);    // stray operator
}

TEST_CASE("round trip through render and parse") {
  const char* texts[] = {
      "M(M(a,b),c) - M(a,M(b,c))",
      "L(L(a,b),c) - L(a,L(b,c)) + R(a,L(b,c))",
      "T(T(a,b,c),d,e) - 2 T(a,b,T(c,d,e))",
  };
  for (const char* t : texts) {
    auto doc = parse_identities(t);
    auto doc2 = parse_identities(render_dsl(doc));
    REQUIRE(doc2.identities.size() == doc.identities.size());
    CHECK(doc2.signature == doc.signature);
    for (std::size_t i = 0; i < doc.identities.size(); ++i)
      CHECK(doc2.identities[i].poly == doc.identities[i].poly);
  }
}
