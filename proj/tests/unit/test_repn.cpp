#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "dimalg/repn.hpp"

using namespace dimalg;

namespace {
std::vector<int> compose(const std::vector<int>& s, const std::vector<int>& t) {
  // (s o t)(k) = s(t(k)); 1-based with [0] unused.
  std::vector<int> r(s.size(), 0);
  for (std::size_t k = 1; k < s.size(); ++k)
    r[k] = s[static_cast<std::size_t>(t[k])];
  return r;
}

std::vector<std::int64_t> matmul(const std::vector<std::int64_t>& A,
                                 const std::vector<std::int64_t>& B, std::size_t d) {
  std::vector<std::int64_t> C(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (A[i * d + k])
        for (std::size_t j = 0; j < d; ++j) C[i * d + j] += A[i * d + k] * B[k * d + j];
  return C;
}
}  // namespace

TEST_CASE("partition enumeration is lexicographically decreasing") {
  auto p4 = partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{2, 1, 1});
  CHECK(p4[4] == Partition{1, 1, 1, 1});
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(6).size() == 11);
}

TEST_CASE("representation dimensions satisfy sum of squares = n!") {
  for (int n = 2; n <= 6; ++n) {
    long long total = 0;
    for (const auto& shape : partitions(n)) {
      long long d = partition_dimension(shape);
      CHECK(d == static_cast<long long>(standard_tableaux(shape).size()));
      total += d * d;
    }
    CHECK(total == factorial(n));
  }
  CHECK(partition_dimension({3, 2, 1}) == 16);
}

TEST_CASE("natural representation is integral and a homomorphism (n <= 4)") {
  for (int n = 2; n <= 4; ++n) {
    auto sigmas = perms_lex(n);
    for (const auto& shape : partitions(n)) {
      std::size_t d = static_cast<std::size_t>(partition_dimension(shape));
      std::vector<int> id(static_cast<std::size_t>(n) + 1);
      std::iota(id.begin(), id.end(), 0);
      std::vector<std::int64_t> I(d * d, 0);
      for (std::size_t i = 0; i < d; ++i) I[i * d + i] = 1;
      CHECK(rep_matrix(shape, id) == I);
      for (const auto& s : sigmas)
        for (const auto& t : sigmas) {
          auto Ns = rep_matrix(shape, s);
          auto Nt = rep_matrix(shape, t);
          auto Nst = rep_matrix(shape, compose(s, t));
          CHECK(Nst == matmul(Ns, Nt, d));
        }
    }
  }
}

TEST_CASE("natural representation homomorphism, random samples (n = 5, 6)") {
  std::mt19937 rng(12345);
  for (int n = 5; n <= 6; ++n) {
    auto sigmas = perms_lex(n);
    std::uniform_int_distribution<std::size_t> pick(0, sigmas.size() - 1);
    for (const auto& shape : partitions(n)) {
      std::size_t d = static_cast<std::size_t>(partition_dimension(shape));
      if (d > 20) continue;  // keep the rational matrices small
      for (int trial = 0; trial < 3; ++trial) {
        const auto& s = sigmas[pick(rng)];
        const auto& t = sigmas[pick(rng)];
        CHECK(rep_matrix(shape, compose(s, t)) == matmul(rep_matrix(shape, s), rep_matrix(shape, t), d));
      }
    }
  }
}

TEST_CASE("modular representation agrees with the integral one") {
  NatRepMod rep({2, 2}, 101);
  REQUIRE(rep.dim() == 2);
  for (const auto& sigma : perms_lex(4)) {
    auto Ni = rep_matrix({2, 2}, sigma);
    const auto& Nm = rep.matrix(sigma);
    for (std::size_t k = 0; k < Ni.size(); ++k)
      CHECK(((Ni[k] % 101) + 101) % 101 == Nm[k]);
  }
}
