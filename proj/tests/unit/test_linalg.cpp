#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "dimalg/matrix.hpp"

using namespace dimalg;

namespace {
ExactMatrix<RationalField> random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  RationalField K;
  std::uniform_int_distribution<int> entry(-3, 3);
  ExactMatrix<RationalField> m(K, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = K.from_int(entry(rng));
  return m;
}
}  // namespace

TEST_CASE("RCF is invariant under row shuffles") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    auto m = random_matrix(rng, 8, 6);
    auto shuffled = m;
    std::vector<std::size_t> order(m.rows);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) shuffled.at(i, j) = m.at(order[i], j);
    auto p1 = rcf_inplace(m);
    auto p2 = rcf_inplace(shuffled);
    CHECK(p1 == p2);
    CHECK(m.a == shuffled.a);
  }
}

TEST_CASE("RCF basics") {
  RationalField K;
  ExactMatrix<RationalField> m(K, 2, 3);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 1) = 3;
  m.at(1, 2) = 3;
  auto piv = rcf_inplace(m);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(0, 2) == -2);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(1, 2) == 1);
}

TEST_CASE("block matrix layout [A 0; E I]") {
  RationalField K;
  ExactMatrix<RationalField> A(K, 1, 2), E(K, 2, 2);
  A.at(0, 0) = 1;
  E.at(0, 1) = 5;
  E.at(1, 0) = 7;
  auto M = build_block_matrix(A, E);
  CHECK(M.rows == 3);
  CHECK(M.cols == 4);
  CHECK(M.split == 2);
  CHECK(M.at(0, 0) == 1);
  CHECK(M.at(0, 2) == 0);
  CHECK(M.at(1, 1) == 5);
  CHECK(M.at(1, 2) == 1);
  CHECK(M.at(2, 0) == 7);
  CHECK(M.at(2, 3) == 1);
}

TEST_CASE("matrix export formats") {
  RationalField K;
  ExactMatrix<RationalField> m(K, 2, 2);
  m.at(0, 0) = mpq_class(1, 2);
  m.at(1, 1) = -3;
  std::ostringstream tri, csv;
  export_triples(tri, m);
  CHECK(tri.str() == "2 2 QQ\n1 1 1/2\n2 2 -3\n");
  export_csv(csv, m);
  CHECK(csv.str() == "1/2,0\n0,-3\n");
}

TEST_CASE("streaming GF(p) reduction matches rational rank") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 5; ++trial) {
    std::size_t rows = 30, cols = 20;
    std::vector<std::vector<Coeff>> data(rows, std::vector<Coeff>(cols));
    for (auto& r : data)
      for (auto& x : r) x = entry(rng);
    // Duplicate some rows to force dependencies.
    for (std::size_t i = 0; i < 10; ++i) data[rows - 1 - i] = data[i];
    CHECK(span_rank_mod(data, cols, 101) == span_rank_rational(data, cols));
  }
}

TEST_CASE("streaming reducer produces a reduced row echelon basis") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(0, 100);
  StreamRcf S(15, 101);
  for (int chunk = 0; chunk < 4; ++chunk) {
    std::vector<std::int64_t> rows(6 * 15);
    for (auto& x : rows) x = entry(rng);
    S.add_rows(rows, 6);
  }
  const auto& piv = S.pivots();
  for (std::size_t i = 0; i < S.rank(); ++i) {
    if (i + 1 < S.rank()) CHECK(piv[i] < piv[i + 1]);
    CHECK(S.row(i)[piv[i]] == 1);
    for (std::size_t k = 0; k < S.rank(); ++k)
      if (k != i) CHECK(S.row(k)[piv[i]] == 0);
  }
}

TEST_CASE("minimal generator progression records rank increases") {
  // Rows of a 4-dimensional space added one at a time, with a repeat.
  std::vector<std::vector<std::int64_t>> rows{
      {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 0}};
  auto prog = minimal_generators(rows.size(), 4, 101,
                                 [&](std::size_t i, std::vector<std::int64_t>& out,
                                     std::size_t& nrows) {
                                   out = rows[i];
                                   nrows = 1;
                                 });
  CHECK(prog.final_rank == 4);
  std::vector<std::pair<std::size_t, std::size_t>> want{{1, 1}, {3, 2}, {4, 3}, {5, 4}};
  CHECK(prog.steps == want);
}
