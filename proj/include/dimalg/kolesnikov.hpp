// Kolesnikov's two-part algorithm (KP algorithm) turning the defining
// identities of a variety of algebras into the defining identities of the
// corresponding variety of dialgebras, plus the rewriting that eliminates the
// second subscripted operation via {x,y}_2 = -{y,x}_1 in the
// anticommutative setting.
#pragma once

#include <utility>
#include <vector>

#include "dimalg/poly.hpp"
#include "dimalg/tree.hpp"

namespace dimalg {

inline bool contains_var(TreeId t, int v) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return n.a == v;
  return contains_var(n.a, v) || contains_var(n.b, v);
}

namespace detail {
// Part 1 labeling: each node becomes {,}_1 if the central variable v occurs
// in (or to the left of) its left argument, {,}_2 if in (or to the right of)
// its right argument.  `v_left` records, for subtrees not containing v,
// whether v lies to their left.
inline TreeId kp_label(TreeId t, int v, bool v_left) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return t;
  if (contains_var(n.a, v))
    return node(Op::Sub1, kp_label(n.a, v, v_left), kp_label(n.b, v, true));
  if (contains_var(n.b, v))
    return node(Op::Sub2, kp_label(n.a, v, false), kp_label(n.b, v, v_left));
  Op op = v_left ? Op::Sub1 : Op::Sub2;
  return node(op, kp_label(n.a, v, v_left), kp_label(n.b, v, v_left));
}
}  // namespace detail

// Part 1: one subscripted identity per choice of central variable.
inline std::vector<Poly> kp_part1(const Poly& identity, int n) {
  std::vector<Poly> out;
  for (int v = 1; v <= n; ++v) {
    Poly q;
    for (const auto& [m, c] : identity) add_term(q, detail::kp_label(m, v, false), c);
    out.push_back(std::move(q));
  }
  return out;
}

// Part 2: the two mixed-associativity identities
// {{a,b}_1,c}_2 - {{a,b}_2,c}_2 and {a,{b,c}_1}_1 - {a,{b,c}_2}_1.
inline std::vector<Poly> kp_part2() {
  TreeId a = leaf(1), b = leaf(2), c = leaf(3);
  Poly p1;
  add_term(p1, node(Op::Sub2, node(Op::Sub1, a, b), c), 1);
  add_term(p1, node(Op::Sub2, node(Op::Sub2, a, b), c), -1);
  Poly p2;
  add_term(p2, node(Op::Sub1, a, node(Op::Sub1, b, c)), 1);
  add_term(p2, node(Op::Sub1, a, node(Op::Sub2, b, c)), -1);
  return {p1, p2};
}

// Bottom-up rewriting {x,y}_2 -> -{y,x}_1; returns the sign and the tree
// written entirely in the first operation.
inline std::pair<int, TreeId> eliminate_second(TreeId t) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return {1, t};
  auto [sl, l] = eliminate_second(n.a);
  auto [sr, r] = eliminate_second(n.b);
  int s = sl * sr;
  if (n.op == Op::Sub2) return {-s, node(Op::Sub1, r, l)};
  return {s, node(Op::Sub1, l, r)};
}

inline Poly eliminate_second(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p) {
    auto [s, m2] = eliminate_second(m);
    add_term(out, m2, s * c);
  }
  return out;
}

// Reinterprets a single-subscripted-operation monomial as a plain product.
inline TreeId to_single_op(TreeId t) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return t;
  return mul(to_single_op(n.a), to_single_op(n.b));
}

inline Poly to_single_op(const Poly& p) {
  return poly_map(p, [](TreeId m) { return to_single_op(m); });
}

// Reinterprets subscripts as dialgebra operations: {x,y}_1 = x -| y,
// {x,y}_2 = x |- y.
inline TreeId subscripts_to_dialgebra(TreeId t) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return t;
  Op op = n.op == Op::Sub1 ? Op::Dashv : Op::Vdash;
  return node(op, subscripts_to_dialgebra(n.a), subscripts_to_dialgebra(n.b));
}

inline Poly subscripts_to_dialgebra(const Poly& p) {
  return poly_map(p, [](TreeId m) { return subscripts_to_dialgebra(m); });
}

}  // namespace dimalg
