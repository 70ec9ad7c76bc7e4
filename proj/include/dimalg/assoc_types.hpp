// Association types: binary (Catalan) and dialgebra normal-form types.
//
// Binary types of degree n are enumerated recursively with the degree of the
// left factor decreasing from n-1 to 1; this left-degree-major order matches
// every type listing used for published matrices.  Dialgebra normal-form
// types are D ::= leaf | D -| P | P |- D with P a plain binary type; within
// each left degree the -| family precedes the |- family.
#pragma once

#include <map>
#include <vector>

#include "dimalg/tree.hpp"

namespace dimalg {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of binary association types of degree n.
inline long long catalan_types(int n) { return binomial(2 * n - 2, n - 1) / n; }

inline std::vector<TreeId> binary_types(int n) {
  if (n == 1) return {leaf(0)};
  std::vector<TreeId> out;
  for (int l = n - 1; l >= 1; --l)
    for (TreeId u : binary_types(l))
      for (TreeId v : binary_types(n - l)) out.push_back(mul(u, v));
  return out;
}

inline std::vector<TreeId> dialgebra_types(int n) {
  if (n == 1) return {leaf(0)};
  std::vector<TreeId> out;
  for (int l = n - 1; l >= 1; --l) {
    for (TreeId u : dialgebra_types(l))
      for (TreeId v : binary_types(n - l)) out.push_back(node(Op::Dashv, u, v));
    for (TreeId u : binary_types(l))
      for (TreeId v : dialgebra_types(n - l)) out.push_back(node(Op::Vdash, u, v));
  }
  return out;
}

// dim FD_n / n! = n * Catalan(n-1)-type count.
inline long long dialgebra_type_count(int n) { return n * catalan_types(n); }

// Basis of the multilinear component: every type with every permutation word,
// types outer, words lexicographic inner.
inline std::vector<TreeId> monomial_basis(const std::vector<TreeId>& types, int n) {
  std::vector<TreeId> out;
  auto sigmas = perms_lex(n);
  for (TreeId ty : types)
    for (const auto& sigma : sigmas) {
      std::vector<int> word(sigma.begin() + 1, sigma.end());
      out.push_back(with_word(ty, word));
    }
  return out;
}

// Column index of each monomial: type-major, word lexicographic.
inline std::map<TreeId, int> basis_index(const std::vector<TreeId>& basis) {
  std::map<TreeId, int> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
  return idx;
}

}  // namespace dimalg
