#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "dimalg/triple.hpp"
#include "golden_data.hpp"

using namespace dimalg;

TEST_CASE("trilinear expansion") {
  TreeId a = leaf(1), b = leaf(2), c = leaf(3);
  Poly e = ltp_expand(tri(a, b, c));
  Poly want{{mul(mul(a, b), c), 2}, {mul(a, mul(b, c)), 1}, {mul(mul(a, c), b), 1}};
  CHECK(e == want);
  CHECK(ternary_monomials5().size() == 360);
  CHECK(leibniz_triple_identities().size() == 2);
}

TEST_CASE("degree-3 matrix matches the published 12 x 18 matrix") {
  auto rep = check_degree3();
  REQUIRE(rep.matrix.rows == 12);
  REQUIRE(rep.matrix.cols == 18);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 18; ++j)
      CHECK(rep.matrix.at(i, j) == golden::kTriple3Matrix[i][j]);
}

TEST_CASE("degree-3 RCF matches the published row canonical form") {
  auto rep = check_degree3();
  REQUIRE(rep.rank == 9);
  CHECK(rep.extracted == 0);
  auto want = golden::triple3_rcf();
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 18; ++j) CHECK(rep.rcf.at(i, j) == want[i][j]);
  // Remaining rows of the RCF are zero.
  for (std::size_t i = 9; i < 12; ++i)
    for (std::size_t j = 0; j < 18; ++j) CHECK(rep.rcf.at(i, j) == 0);
}

TEST_CASE("lifting counts for the degree-5 triple computation") {
  std::vector<Poly> ids;
  for (const Poly& I : lift_algebra_identity(right_anticommutativity(), 3))
    for (Poly& J : lift_algebra_identity(I, 4)) ids.push_back(std::move(J));
  CHECK(ids.size() == 30);
  CHECK(lift_algebra_identity(di_malcev(), 4).size() == 6);
}
