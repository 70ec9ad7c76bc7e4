#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "dimalg/degree34.hpp"
#include "dimalg/multiplicity.hpp"
#include "golden_data.hpp"

using namespace dimalg;

TEST_CASE("degree-3 identity and expansion matrices match the published signs") {
  auto comp = monomial_computation_rational(3);
  REQUIRE(comp.A.rows == golden::kDegree3A.size());
  REQUIRE(comp.A.cols == 36);
  for (std::size_t i = 0; i < golden::kDegree3A.size(); ++i)
    for (std::size_t j = 0; j < 36; ++j)
      CHECK(comp.A.at(i, j) == golden::sign_of(golden::kDegree3A[i][j]));
  REQUIRE(comp.E.rows == golden::kDegree3E.size());
  for (std::size_t i = 0; i < golden::kDegree3E.size(); ++i)
    for (std::size_t j = 0; j < 36; ++j)
      CHECK(comp.E.at(i, j) == golden::sign_of(golden::kDegree3E[i][j]));
}

TEST_CASE("degree-3 block computation") {
  auto comp = monomial_computation_rational(3);
  CHECK(comp.M.rows == 30);
  CHECK(comp.M.cols == 48);
  CHECK(comp.M.split == 36);
  CHECK(comp.report.rank == 27);
  CHECK(comp.report.extracted.size() == 3);
  CHECK(comp.report.denominator_lcm == 6);
  std::vector<std::string> got;
  for (const auto& row : comp.report.extracted)
    got.push_back(render_extracted(comp.M.field, row, comp.right_basis));
  CHECK(got == std::vector<std::string>{"a(bc) + a(cb)", "b(ac) + b(ca)", "c(ab) + c(ba)"});
}

TEST_CASE("degree-4 block computation") {
  auto comp = monomial_computation_rational(4);
  CHECK(comp.M.rows == 780);
  CHECK(comp.M.cols == 540);
  CHECK(comp.report.extracted.size() == 20);
  // First extracted identity is the di-Malcev identity up to sign.
  auto dm = rac_coordinates(di_malcev(), rac_basis(4));
  bool plus = true, minus = true;
  for (std::size_t j = 0; j < dm.size(); ++j) {
    mpq_class w(static_cast<long>(dm[j]));
    if (comp.report.extracted[0][j] != w) plus = false;
    if (comp.report.extracted[0][j] != -w) minus = false;
  }
  CHECK((plus || minus));
  CHECK(span_rank_under_permutations({di_malcev()}, 4) == 20);
}

TEST_CASE("modular and rational ranks agree in degrees 3 and 4") {
  for (int n : {3, 4}) {
    auto cq = monomial_computation_rational(n);
    auto cp = monomial_computation_mod(n, 101);
    CHECK(cq.report.rank == cp.report.rank);
    CHECK(cq.report.left_rank == cp.report.left_rank);
    CHECK(cq.report.extracted.size() == cp.report.extracted.size());
  }
}

TEST_CASE("modular and rational multiplicities agree in degrees 3 and 4") {
  for (int n : {3, 4})
    for (const auto& shape : partitions(n))
      CHECK(dicommutator_multiplicity(shape, n, 101) ==
            dicommutator_multiplicity_rational(shape, n));
}

TEST_CASE("multiplicities are stable across primes in degree 5") {
  CHECK(multiplicity_row(5, 101) == multiplicity_row(5, 103));
}
