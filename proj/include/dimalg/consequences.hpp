// Defining identities and their liftings to higher degree.
//
// Dialgebra lifting of a multilinear identity I of degree n produces the
// 2(n+2) consequences of degree n+1, in the order used for the published
// degree-4 consequence list: for i = 1..n the substitutions
// a_i -> a_i |- a_{n+1} then a_i -> a_i -| a_{n+1}, followed by the four
// products I -| a_{n+1}, I |- a_{n+1}, a_{n+1} -| I, a_{n+1} |- I.
// Algebra lifting produces n+2 consequences: the n substitutions
// a_i -> a_i a_{n+1}, then I * a_{n+1} and a_{n+1} * I.
#pragma once

#include <vector>

#include "dimalg/dialgebra.hpp"
#include "dimalg/poly.hpp"
#include "dimalg/tree.hpp"

namespace dimalg {

namespace detail {
inline Poly assoc_dashv(TreeId x, TreeId y, TreeId z) {
  return {{node(Op::Dashv, node(Op::Dashv, x, y), z), 1},
          {node(Op::Dashv, x, node(Op::Dashv, y, z)), -1}};
}
inline Poly assoc_vdash(TreeId x, TreeId y, TreeId z) {
  return {{node(Op::Vdash, node(Op::Vdash, x, y), z), 1},
          {node(Op::Vdash, x, node(Op::Vdash, y, z)), -1}};
}
inline Poly assoc_times(TreeId x, TreeId y, TreeId z) {
  return {{node(Op::Dashv, node(Op::Vdash, x, y), z), 1},
          {node(Op::Vdash, x, node(Op::Dashv, y, z)), -1}};
}
}  // namespace detail

// The three multilinear identities defining alternative dialgebras in
// degree 3: (a,b,c)_-| + (b,a,c)_x, (a,b,c)_-| + (a,c,b)_-|,
// (a,b,c)_x + (a,c,b)_|-; all in bar normal form.
inline std::vector<Poly> alternative_dialgebra_identities() {
  TreeId a = leaf(1), b = leaf(2), c = leaf(3);
  Poly i1 = poly_add(detail::assoc_dashv(a, b, c), detail::assoc_times(b, a, c));
  Poly i2 = poly_add(detail::assoc_dashv(a, b, c), detail::assoc_dashv(a, c, b));
  Poly i3 = poly_add(detail::assoc_times(a, b, c), detail::assoc_vdash(a, c, b));
  return {poly_normalize_bar(i1), poly_normalize_bar(i2), poly_normalize_bar(i3)};
}

inline std::vector<Poly> lift_dialgebra_identity(const Poly& I, int n) {
  std::vector<Poly> out;
  TreeId fresh = leaf(n + 1);
  auto push = [&](const Poly& p) { out.push_back(poly_normalize_bar(p)); };
  for (int i = 1; i <= n; ++i)
    for (Op op : {Op::Vdash, Op::Dashv}) {
      Poly q;
      for (const auto& [m, c] : I) add_term(q, subst_leaf(m, i, node(op, leaf(i), fresh)), c);
      push(q);
    }
  auto mult = [&](auto&& mk) {
    Poly q;
    for (const auto& [m, c] : I) add_term(q, mk(m), c);
    push(q);
  };
  mult([&](TreeId m) { return node(Op::Dashv, m, fresh); });
  mult([&](TreeId m) { return node(Op::Vdash, m, fresh); });
  mult([&](TreeId m) { return node(Op::Dashv, fresh, m); });
  mult([&](TreeId m) { return node(Op::Vdash, fresh, m); });
  return out;
}

// Iterated lifting of the three alternative-dialgebra identities up to
// degree n.  Counts: 3, 30, 360, 5040 for n = 3..6 (A_n = 2^(n-6)(n+1)!).
inline std::vector<Poly> alternative_identities(int n) {
  std::vector<Poly> ids = alternative_dialgebra_identities();
  for (int d = 3; d < n; ++d) {
    std::vector<Poly> next;
    for (const Poly& I : ids)
      for (Poly& J : lift_dialgebra_identity(I, d)) next.push_back(std::move(J));
    ids = std::move(next);
  }
  return ids;
}

inline std::vector<Poly> lift_algebra_identity(const Poly& I, int n) {
  std::vector<Poly> out;
  TreeId fresh = leaf(n + 1);
  for (int i = 1; i <= n; ++i) {
    Poly q;
    for (const auto& [m, c] : I) add_term(q, subst_leaf(m, i, mul(leaf(i), fresh)), c);
    out.push_back(std::move(q));
  }
  Poly right, left;
  for (const auto& [m, c] : I) {
    add_term(right, mul(m, fresh), c);
    add_term(left, mul(fresh, m), c);
  }
  out.push_back(std::move(right));
  out.push_back(std::move(left));
  return out;
}

// Right anticommutativity a(bc) + a(cb).
inline Poly right_anticommutativity() {
  TreeId a = leaf(1), b = leaf(2), c = leaf(3);
  return {{mul(a, mul(b, c)), 1}, {mul(a, mul(c, b)), 1}};
}

// The di-Malcev identity
// ((ab)c)d - ((ad)b)c - (a(cd))b - (ac)(bd) - a((bc)d).
inline Poly di_malcev() {
  TreeId a = leaf(1), b = leaf(2), c = leaf(3), d = leaf(4);
  return {{mul(mul(mul(a, b), c), d), 1},
          {mul(mul(mul(a, d), b), c), -1},
          {mul(mul(a, mul(c, d)), b), -1},
          {mul(mul(a, c), mul(b, d)), -1},
          {mul(a, mul(mul(b, c), d)), -1}};
}

// The multilinear (Sagle) form of the Malcev identity together with
// anticommutativity is the input of the KP algorithm in degree 4:
// (ac)(bd) - ((ab)c)d - ((bc)d)a - ((cd)a)b - ((da)b)c.
inline Poly sagle_malcev() {
  TreeId a = leaf(1), b = leaf(2), c = leaf(3), d = leaf(4);
  return {{mul(mul(a, c), mul(b, d)), 1},
          {mul(mul(mul(a, b), c), d), -1},
          {mul(mul(mul(b, c), d), a), -1},
          {mul(mul(mul(c, d), a), b), -1},
          {mul(mul(mul(d, a), b), c), -1}};
}

inline Poly anticommutativity() {
  TreeId a = leaf(1), b = leaf(2);
  return {{mul(a, b), 1}, {mul(b, a), 1}};
}

// Degree-n consequences of the di-Malcev identity under algebra lifting.
// D_4 = 1 (the identity itself), D_5 = 6, D_6 = 42.
inline std::vector<Poly> dimalcev_consequences(int n) {
  if (n < 4) return {};
  std::vector<Poly> ids{di_malcev()};
  for (int d = 4; d < n; ++d) {
    std::vector<Poly> next;
    for (const Poly& I : ids)
      for (Poly& J : lift_algebra_identity(I, d)) next.push_back(std::move(J));
    ids = std::move(next);
  }
  return ids;
}

}  // namespace dimalg
