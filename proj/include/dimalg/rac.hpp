// Right-anticommutative (RAC) straightening: the congruence generated by
// x(yz) = -x(zy) on binary monomials.
//
// Canonical association types are orbit representatives of the shape action
// (swapping the two factors of any product that sits in a right-argument
// position), taking the earliest shape in the left-degree-major enumeration.
// Canonical monomials minimize (type enumeration order, leaf word) over the
// signed orbit.  A monomial whose orbit identifies it with its own negative
// straightens to zero (possible only with repeated variables).
#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dimalg/assoc_types.hpp"
#include "dimalg/poly.hpp"
#include "dimalg/tree.hpp"

namespace dimalg {

using Path = std::vector<int>;  // 1 = left child, 2 = right child

inline void swap_positions_rec(TreeId t, Path& cur, std::vector<Path>& out) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return;
  if (!is_leaf(n.b)) {
    cur.push_back(2);
    out.push_back(cur);
    cur.pop_back();
  }
  cur.push_back(1);
  swap_positions_rec(n.a, cur, out);
  cur.back() = 2;
  swap_positions_rec(n.b, cur, out);
  cur.pop_back();
}

// Positions of product nodes occurring as the right argument of their parent.
inline std::vector<Path> swap_positions(TreeId t) {
  std::vector<Path> out;
  Path cur;
  swap_positions_rec(t, cur, out);
  return out;
}

inline TreeId swap_at(TreeId t, const Path& path, std::size_t i = 0) {
  const TreeNode& n = tree(t);
  if (i == path.size()) return mul(n.b, n.a);
  if (path[i] == 1) return node(n.op, swap_at(n.a, path, i + 1), n.b);
  return node(n.op, n.a, swap_at(n.b, path, i + 1));
}

// Signed closure under factor swaps; nullopt when self-annihilating.
inline std::optional<std::map<TreeId, int>> signed_orbit(TreeId t) {
  std::map<TreeId, int> seen{{t, 1}};
  std::vector<TreeId> stack{t};
  while (!stack.empty()) {
    TreeId u = stack.back();
    stack.pop_back();
    int su = seen[u];
    for (const Path& p : swap_positions(u)) {
      TreeId v = swap_at(u, p);
      int sv = -su;
      auto it = seen.find(v);
      if (it != seen.end()) {
        if (it->second != sv) return std::nullopt;
      } else {
        seen.emplace(v, sv);
        stack.push_back(v);
      }
    }
  }
  return seen;
}

inline std::set<TreeId> unsigned_orbit(TreeId t) {
  std::set<TreeId> seen{t};
  std::vector<TreeId> stack{t};
  while (!stack.empty()) {
    TreeId u = stack.back();
    stack.pop_back();
    for (const Path& p : swap_positions(u)) {
      TreeId v = swap_at(u, p);
      if (seen.insert(v).second) stack.push_back(v);
    }
  }
  return seen;
}

// Canonical RAC association types: one representative per shape orbit,
// earliest in binary_types order.  R_n = 1, 1, 2, 4, 9, 20, 46 for n <= 7.
inline const std::vector<TreeId>& rac_types(int n) {
  static std::map<int, std::vector<TreeId>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<TreeId> canon;
  std::set<TreeId> seen;
  for (TreeId t : binary_types(n)) {
    if (seen.count(t)) continue;
    canon.push_back(t);
    auto orb = unsigned_orbit(t);
    seen.insert(orb.begin(), orb.end());
  }
  return cache.emplace(n, std::move(canon)).first->second;
}

namespace detail {
inline const std::map<TreeId, int>& binary_type_order(int n) {
  static std::map<int, std::map<TreeId, int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<TreeId, int> order;
  auto tys = binary_types(n);
  for (std::size_t i = 0; i < tys.size(); ++i) order[tys[i]] = static_cast<int>(i);
  return cache.emplace(n, std::move(order)).first->second;
}
}  // namespace detail

// Straightens a binary monomial: returns (sign, canonical monomial), with
// sign 0 for the self-annihilating case.
inline std::pair<int, TreeId> rac_straighten(TreeId m) {
  auto orb = signed_orbit(m);
  if (!orb) return {0, m};
  const auto& order = detail::binary_type_order(degree(m));
  bool have = false;
  std::pair<int, std::vector<int>> best_key;
  TreeId best_tree = m;
  int best_sign = 1;
  for (const auto& [t, s] : *orb) {
    std::pair<int, std::vector<int>> key{order.at(shape_of(t)), leaves(t)};
    if (!have || key < best_key) {
      have = true;
      best_key = std::move(key);
      best_tree = t;
      best_sign = s;
    }
  }
  return {best_sign, best_tree};
}

// A skew-symmetry relation: for monomials of type `type_index`, relabeling by
// `word` equals `sign` times the identity labeling.
struct SkewRelation {
  int type_index;
  std::vector<int> word;  // image word of 1..n
  int sign;               // +1 or -1
};

namespace detail {
// Signed stabilizer of a canonical type: all (word, sign) with
// m(word) = sign * m(identity) inside the signed orbit.
inline std::vector<std::pair<std::vector<int>, int>> signed_stabilizer(TreeId type, int n) {
  std::vector<int> idw;
  for (int i = 1; i <= n; ++i) idw.push_back(i);
  TreeId m0 = with_word(type, idw);
  auto orb = signed_orbit(m0);
  std::vector<std::pair<std::vector<int>, int>> H;
  for (const auto& [t, s] : *orb)
    if (shape_of(t) == type) H.emplace_back(leaves(t), s);
  return H;
}

// Minimal generating subsets of the signed stabilizer, found by brute force
// over combinations of the nontrivial elements (stabilizers have order <= 8).
inline std::vector<std::pair<std::vector<int>, int>> minimal_stabilizer_generators(TreeId type,
                                                                                  int n) {
  auto H = signed_stabilizer(type, n);
  std::pair<std::vector<int>, int> id;
  for (int i = 1; i <= n; ++i) id.first.push_back(i);
  id.second = 1;
  std::set<std::pair<std::vector<int>, int>> Hset(H.begin(), H.end());
  std::vector<std::pair<std::vector<int>, int>> nontriv;
  for (const auto& h : H)
    if (h != id) nontriv.push_back(h);

  auto closure = [&](const std::vector<std::pair<std::vector<int>, int>>& gens) {
    std::set<std::pair<std::vector<int>, int>> seen{id};
    std::vector<std::pair<std::vector<int>, int>> frontier{id};
    while (!frontier.empty()) {
      std::vector<std::pair<std::vector<int>, int>> next;
      for (const auto& [w, s] : frontier)
        for (const auto& [gw, gs] : gens) {
          std::vector<int> cw(static_cast<std::size_t>(n));
          for (int k = 0; k < n; ++k)
            cw[static_cast<std::size_t>(k)] =
                w[static_cast<std::size_t>(gw[static_cast<std::size_t>(k)] - 1)];
          std::pair<std::vector<int>, int> c{cw, s * gs};
          if (seen.insert(c).second) next.push_back(c);
        }
      frontier = std::move(next);
    }
    return seen;
  };

  // Stabilizers here have order <= 8, so subsets of the nontrivial elements
  // can be scanned by increasing size via bitmasks.
  std::size_t m = nontriv.size();
  std::vector<unsigned> masks;
  for (unsigned mask = 0; mask < (1u << m); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  for (unsigned mask : masks) {
    std::vector<std::pair<std::vector<int>, int>> gens;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) gens.push_back(nontriv[i]);
    if (closure(gens) == Hset) return gens;
  }
  return {};  // unreachable: the full set always generates
}
}  // namespace detail

struct RacBasis {
  int n = 0;
  std::vector<TreeId> types;         // R_n canonical types
  std::vector<TreeId> basis;         // straightened multilinear monomials
  std::vector<SkewRelation> skews;   // W_n skew-symmetry relations
  std::map<TreeId, int> index;       // monomial -> basis position
};

inline const RacBasis& rac_basis(int n) {
  static std::map<int, RacBasis> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  RacBasis rb;
  rb.n = n;
  rb.types = rac_types(n);
  auto sigmas = perms_lex(n);
  for (std::size_t j = 0; j < rb.types.size(); ++j) {
    TreeId t = rb.types[j];
    for (const auto& sigma : sigmas) {
      std::vector<int> word(sigma.begin() + 1, sigma.end());
      TreeId m = with_word(t, word);
      auto [s, cm] = rac_straighten(m);
      if (s == 1 && cm == m) {
        rb.index[m] = static_cast<int>(rb.basis.size());
        rb.basis.push_back(m);
      }
    }
    for (const auto& [w, s] : detail::minimal_stabilizer_generators(t, n))
      rb.skews.push_back({static_cast<int>(j), w, s});
  }
  return cache.emplace(n, std::move(rb)).first->second;
}

// Coordinates of a single-operation multilinear polynomial in the RAC basis.
inline std::vector<Coeff> rac_coordinates(const Poly& p, const RacBasis& rb) {
  std::vector<Coeff> v(rb.basis.size(), 0);
  for (const auto& [m, c] : p) {
    auto [s, cm] = rac_straighten(m);
    if (s == 0) continue;
    v[static_cast<std::size_t>(rb.index.at(cm))] += c * s;
  }
  return v;
}

// Dimension of the degree-n multilinear-free component of the free RAC
// algebra on k generators: straightened monomials with leaves in 1..k,
// repeated variables allowed, discarding self-annihilating orbits.
inline long long free_rac_dimension(int k, int n) {
  long long count = 0;
  std::vector<int> word(static_cast<std::size_t>(n), 1);
  for (TreeId t : binary_types(n)) {
    std::fill(word.begin(), word.end(), 1);
    while (true) {
      TreeId m = with_word(t, word);
      auto [s, cm] = rac_straighten(m);
      if (s == 1 && cm == m) ++count;
      int i = n - 1;
      while (i >= 0 && word[static_cast<std::size_t>(i)] == k) {
        word[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++word[static_cast<std::size_t>(i)];
    }
  }
  return count;
}

// The free Leibniz algebra's degree-n component on k generators has
// dimension k^n.
inline long long leibniz_dimension(int k, int n) {
  long long r = 1;
  for (int i = 0; i < n; ++i) r *= k;
  return r;
}

}  // namespace dimalg
