#include <catch_amalgamated.hpp>

#include "dimalg/workflows.hpp"

using namespace dimalg;

namespace {
void expect_pass(const RunReport& rep) {
  INFO(rep.name);
  for (const auto& c : rep.checks) {
    INFO(c.label << ": expected " << c.expected << ", got " << c.actual);
    CHECK(c.pass);
  }
  CHECK(rep.pass());
}
}  // namespace

TEST_CASE("KP workflow runs pass") {
  expect_pass(run_kp_associative());
  expect_pass(run_kp_alternative());
  expect_pass(run_kp_malcev());
}

TEST_CASE("degree-3 and degree-4 workflow runs pass") {
  expect_pass(run_degree3());
  RunOptions modular;
  expect_pass(run_degree4(modular));
  RunOptions rational;
  rational.rational = true;
  expect_pass(run_degree4(rational));
}

TEST_CASE("multiplicity workflows pass for degrees 3 to 5") {
  RunOptions opt;
  for (int n = 3; n <= 5; ++n) {
    expect_pass(run_multiplicities(n, opt));
    expect_pass(run_special_search(n, opt));
  }
  RunOptions rational;
  rational.rational = true;
  expect_pass(run_multiplicities(3, rational));
  expect_pass(run_multiplicities(4, rational));
}

TEST_CASE("rational degree-6 multiplicities are refused without force") {
  RunOptions rational;
  rational.rational = true;
  RunReport rep = run_multiplicities(6, rational);
  CHECK(!rep.pass());
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].label.find("refused") != std::string::npos);
}

TEST_CASE("triple-system and dimension workflows pass") {
  expect_pass(run_triple3());
  expect_pass(run_freedim(2, 3));
  expect_pass(run_freedim(1, 5));
}
