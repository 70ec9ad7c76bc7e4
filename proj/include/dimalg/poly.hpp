// Multilinear polynomials: integer linear combinations of interned monomials.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "dimalg/tree.hpp"

namespace dimalg {

using Coeff = long long;

// Maps are keyed by arena id; iteration order is deterministic for a fixed
// construction order, and every ordering that matters for published matrices
// is imposed explicitly by basis vectors, never by map order.
using Poly = std::map<TreeId, Coeff>;

inline void add_term(Poly& p, TreeId m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline Poly poly_add(const Poly& p, const Poly& q, Coeff scale = 1) {
  Poly r = p;
  for (const auto& [m, c] : q) add_term(r, m, scale * c);
  return r;
}

inline Poly poly_scale(const Poly& p, Coeff scale) {
  Poly r;
  for (const auto& [m, c] : p) add_term(r, m, scale * c);
  return r;
}

inline Poly poly_relabel(const Poly& p, const std::vector<int>& perm) {
  Poly r;
  for (const auto& [m, c] : p) add_term(r, relabel(m, perm), c);
  return r;
}

// Applies a monomial-to-monomial map (e.g. a normal form) term by term.
template <class Fn>
inline Poly poly_map(const Poly& p, Fn&& fn) {
  Poly r;
  for (const auto& [m, c] : p) add_term(r, fn(m), c);
  return r;
}

inline bool is_multilinear(TreeId m, int n) {
  std::vector<int> ls = leaves(m);
  if (static_cast<int>(ls.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : ls) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

inline bool is_multilinear(const Poly& p, int n) {
  for (const auto& [m, c] : p) {
    (void)c;
    if (!is_multilinear(m, n)) return false;
  }
  return true;
}

// All n! relabelings of a multilinear identity, lexicographic permutation order.
inline std::vector<Poly> permutation_orbit(const Poly& p, int n) {
  std::vector<Poly> out;
  for (const auto& sigma : perms_lex(n)) out.push_back(poly_relabel(p, sigma));
  return out;
}

}  // namespace dimalg
