// 0-dialgebra normal form (bar identities) and the dicommutator expansion.
#pragma once

#include <stdexcept>

#include "dimalg/poly.hpp"
#include "dimalg/tree.hpp"

namespace dimalg {

// Replaces every binary operation by the plain product Mul ("erasing bars").
inline TreeId strip_ops(TreeId t) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return t;
  return mul(strip_ops(n.a), strip_ops(n.b));
}

// Bar normal form of a dialgebra monomial: on the inner side of each product
// (the right argument of -|, the left argument of |-) the operations are
// irrelevant by the bar identities and are erased to Mul.
inline TreeId normalize_bar(TreeId t) {
  const TreeNode& n = tree(t);
  switch (n.op) {
    case Op::Leaf: return t;
    case Op::Dashv: return node(Op::Dashv, normalize_bar(n.a), strip_ops(n.b));
    case Op::Vdash: return node(Op::Vdash, strip_ops(n.a), normalize_bar(n.b));
    case Op::Mul: return mul(strip_ops(n.a), strip_ops(n.b));
    default: throw std::invalid_argument("normalize_bar: not a dialgebra monomial");
  }
}

inline bool is_bar_normal(TreeId t) { return normalize_bar(t) == t; }

inline Poly poly_normalize_bar(const Poly& p) {
  return poly_map(p, [](TreeId m) { return normalize_bar(m); });
}

// Dicommutator expansion <u,v> = u -| v' - v' |- u applied recursively to a
// binary monomial, where v' erases operations on the inner side.  The result
// is in bar normal form with 2^(deg-1) signed terms.
inline Poly dicomm_expand(TreeId t) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return {{t, 1}};
  if (n.op != Op::Mul) throw std::invalid_argument("dicomm_expand: expected single-operation monomial");
  Poly eu = dicomm_expand(n.a);
  Poly ev = dicomm_expand(n.b);
  Poly out;
  for (const auto& [tu, cu] : eu)
    for (const auto& [tv, cv] : ev) {
      TreeId inner = strip_ops(tv);
      add_term(out, node(Op::Dashv, tu, inner), cu * cv);
      add_term(out, node(Op::Vdash, inner, tu), -cu * cv);
    }
  return out;
}

}  // namespace dimalg
