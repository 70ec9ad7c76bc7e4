// Leibniz triple systems: the trilinear operation
// <a,b,c> = 2(ab)c + a(bc) + (ac)b, the defining identities, and the
// degree-3 and degree-5 free-algebra checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dimalg/assoc_types.hpp"
#include "dimalg/consequences.hpp"
#include "dimalg/matrix.hpp"
#include "dimalg/poly.hpp"
#include "dimalg/tree.hpp"

namespace dimalg {

// Recursive expansion of a ternary monomial into the free binary algebra.
inline Poly ltp_expand(TreeId t) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return {{t, 1}};
  if (n.op != Op::Tri) throw std::invalid_argument("ltp_expand: expected ternary monomial");
  Poly ex = ltp_expand(n.a), ey = ltp_expand(n.b), ez = ltp_expand(n.c);
  Poly out;
  for (const auto& [u, cu] : ex)
    for (const auto& [v, cv] : ey)
      for (const auto& [w, cw] : ez) {
        Coeff c = cu * cv * cw;
        add_term(out, mul(mul(u, v), w), 2 * c);
        add_term(out, mul(u, mul(v, w)), c);
        add_term(out, mul(mul(u, w), v), c);
      }
  return out;
}

// The three ternary association types of degree 5, in the order
// <<a,b,c>,d,e>, <a,<b,c,d>,e>, <a,b,<c,d,e>>.
inline std::vector<TreeId> ternary_types5() {
  TreeId l0 = leaf(0);
  return {tri(tri(l0, l0, l0), l0, l0), tri(l0, tri(l0, l0, l0), l0),
          tri(l0, l0, tri(l0, l0, l0))};
}

// The 360 degree-5 ternary monomials: types outer, words lexicographic.
inline std::vector<TreeId> ternary_monomials5() { return monomial_basis(ternary_types5(), 5); }

// The two defining identities of Leibniz triple systems, written over
// first-type monomials:
//   <a,<b,c,d>,e> = <<a,b,c>,d,e> - <<a,c,b>,d,e> - <<a,d,b>,c,e> + <<a,d,c>,b,e>
//   <a,b,<c,d,e>> = <<a,b,c>,d,e> - <<a,b,d>,c,e> - <<a,b,e>,c,d> + <<a,b,e>,d,c>
// (as identities: left side minus right side).
inline std::vector<Poly> leibniz_triple_identities() {
  TreeId a = leaf(1), b = leaf(2), c = leaf(3), d = leaf(4), e = leaf(5);
  Poly i1;
  add_term(i1, tri(a, tri(b, c, d), e), 1);
  add_term(i1, tri(tri(a, b, c), d, e), -1);
  add_term(i1, tri(tri(a, c, b), d, e), 1);
  add_term(i1, tri(tri(a, d, b), c, e), 1);
  add_term(i1, tri(tri(a, d, c), b, e), -1);
  Poly i2;
  add_term(i2, tri(a, b, tri(c, d, e)), 1);
  add_term(i2, tri(tri(a, b, c), d, e), -1);
  add_term(i2, tri(tri(a, b, d), c, e), 1);
  add_term(i2, tri(tri(a, b, e), c, d), 1);
  add_term(i2, tri(tri(a, b, e), d, c), -1);
  return {i1, i2};
}

// ---------------------------------------------------------------------------
// Degree 3: the 12 x 18 matrix (6 right-anticommutativity permutations over
// 6 ternary expansions, with zero and identity right blocks) and its RCF.
// ---------------------------------------------------------------------------
struct TripleDegree3Report {
  ExactMatrix<RationalField> matrix;   // the 12 x 18 matrix
  ExactMatrix<RationalField> rcf;      // RCF, zero rows included in `matrix` shape
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  std::size_t extracted = 0;           // pivots right of the split (must be 0)
};

inline TripleDegree3Report check_degree3() {
  RationalField K;
  auto fbasis = monomial_basis(binary_types(3), 3);  // 12 binary monomials
  auto findex = basis_index(fbasis);
  TripleDegree3Report rep{ExactMatrix<RationalField>(K, 12, 18, 12),
                          ExactMatrix<RationalField>(K, 0, 0), {}, 0, 0};
  Poly rac = right_anticommutativity();
  auto sigmas = perms_lex(3);
  for (std::size_t i = 0; i < 6; ++i) {
    Poly J = poly_relabel(rac, sigmas[i]);
    for (const auto& [m, c] : J)
      rep.matrix.at(i, static_cast<std::size_t>(findex.at(m))) += K.from_int(c);
  }
  TreeId l0 = leaf(0);
  auto terns = monomial_basis({tri(l0, l0, l0)}, 3);  // 6 ternary monomials
  for (std::size_t i = 0; i < 6; ++i) {
    for (const auto& [m, c] : ltp_expand(terns[i]))
      rep.matrix.at(6 + i, static_cast<std::size_t>(findex.at(m))) += K.from_int(c);
    rep.matrix.at(6 + i, 12 + i) = K.one();
  }
  rep.rcf = rep.matrix;
  rep.pivots = rcf_inplace(rep.rcf);
  rep.rank = rep.pivots.size();
  for (std::size_t c : rep.pivots)
    if (c >= 12) ++rep.extracted;
  return rep;
}

// ---------------------------------------------------------------------------
// Degree 5 (mod p): the 4680 x 2040 matrix, extraction of the 240 new
// identities, greedy generator minimization over permutation orbits, and the
// comparison with the orbit span of the Definition identities.
// ---------------------------------------------------------------------------
struct TripleDegree5Report {
  std::uint32_t prime = 101;
  std::size_t rank = 0;                 // rank of the 4680 x 2040 matrix
  std::size_t extracted = 0;            // right-pivot rows (240)
  std::vector<std::size_t> nnz_counts;  // per extracted identity, sorted order
  // Progression with ties in the nonzero-count sort broken by descending
  // extraction index (reproduces the published identity indices), and the
  // alternative stable ascending tie-break, both recorded.
  GeneratorProgression progression_desc;
  GeneratorProgression progression_asc;
  std::size_t final_pair_span = 0;      // orbit span of the last two generators
  std::size_t definition_span = 0;      // orbit span of the Definition identities
};

inline TripleDegree5Report check_degree5(std::uint32_t p = 101, const ProgressFn& progress = {}) {
  TripleDegree5Report rep;
  rep.prime = p;
  auto fbasis = monomial_basis(binary_types(5), 5);  // 1680 binary monomials
  auto findex = basis_index(fbasis);
  const std::size_t nb = fbasis.size();
  auto terns = ternary_monomials5();                 // 360 ternary monomials
  std::map<TreeId, int> tindex;
  for (std::size_t i = 0; i < terns.size(); ++i) tindex[terns[i]] = static_cast<int>(i);
  const std::size_t nt = terns.size();
  const std::size_t ncols = nb + nt;

  // 36 Malcev-dialgebra identities of degree 5 under the single operation:
  // right anticommutativity lifted twice (30) and di-Malcev lifted once (6).
  std::vector<Poly> ids;
  for (const Poly& I : lift_algebra_identity(right_anticommutativity(), 3))
    for (Poly& J : lift_algebra_identity(I, 4)) ids.push_back(std::move(J));
  for (Poly& J : lift_algebra_identity(di_malcev(), 4)) ids.push_back(std::move(J));

  StreamRcf S(ncols, p);
  std::vector<std::int64_t> buf;
  const std::size_t chunk = 1024;
  std::size_t done = 0, total = ids.size() * 120 + nt;
  auto flush = [&]() {
    std::size_t nrows = buf.size() / ncols;
    if (!nrows) return;
    S.add_rows(buf, nrows);
    buf.clear();
    if (progress) progress(done, total);
  };
  auto sigmas = perms_lex(5);
  for (const Poly& I : ids)
    for (const auto& sigma : sigmas) {
      std::size_t base = buf.size();
      buf.resize(base + ncols, 0);
      for (const auto& [m, c] : poly_relabel(I, sigma))
        buf[base + static_cast<std::size_t>(findex.at(m))] += c;
      ++done;
      if (buf.size() / ncols >= chunk) flush();
    }
  for (std::size_t i = 0; i < nt; ++i) {
    std::size_t base = buf.size();
    buf.resize(base + ncols, 0);
    for (const auto& [m, c] : ltp_expand(terns[i]))
      buf[base + static_cast<std::size_t>(findex.at(m))] += c;
    buf[base + nb + i] = 1;
    ++done;
    if (buf.size() / ncols >= chunk) flush();
  }
  flush();
  rep.rank = S.rank();

  // Extract right parts of right-pivot rows.
  std::vector<std::vector<std::int64_t>> ext;
  for (std::size_t r = 0; r < S.rank(); ++r)
    if (S.pivots()[r] >= nb)
      ext.emplace_back(S.row(r) + nb, S.row(r) + ncols);
  rep.extracted = ext.size();

  auto nnz_of = [](const std::vector<std::int64_t>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }));
  };

  // Column-permutation arrays for the 120 relabelings of ternary monomials.
  std::vector<std::vector<int>> colperm;
  for (const auto& sigma : sigmas) {
    std::vector<int> arr(nt);
    for (std::size_t ci = 0; ci < nt; ++ci)
      arr[ci] = tindex.at(relabel(terns[ci], sigma));
    colperm.push_back(std::move(arr));
  }
  auto orbit_rows = [&](const std::vector<std::int64_t>& vec, std::vector<std::int64_t>& rows,
                        std::size_t& nrows) {
    rows.assign(colperm.size() * nt, 0);
    for (std::size_t si = 0; si < colperm.size(); ++si)
      for (std::size_t ci = 0; ci < nt; ++ci)
        rows[si * nt + static_cast<std::size_t>(colperm[si][ci])] = vec[ci];
    nrows = colperm.size();
  };

  auto run_progression = [&](bool desc_ties) {
    std::vector<std::size_t> order(ext.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      std::size_t nx = nnz_of(ext[x]), ny = nnz_of(ext[y]);
      if (nx != ny) return nx < ny;
      return desc_ties ? x > y : x < y;
    });
    if (desc_ties) {
      rep.nnz_counts.clear();
      for (std::size_t i : order) rep.nnz_counts.push_back(nnz_of(ext[i]));
    }
    return minimal_generators(order.size(), nt, p,
                              [&](std::size_t i, std::vector<std::int64_t>& rows, std::size_t& nrows) {
                                orbit_rows(ext[order[i]], rows, nrows);
                              });
  };
  rep.progression_desc = run_progression(true);
  rep.progression_asc = run_progression(false);

  // Orbit span of the two final generators under the descending tie-break.
  {
    std::vector<std::size_t> order(ext.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      std::size_t nx = nnz_of(ext[x]), ny = nnz_of(ext[y]);
      if (nx != ny) return nx < ny;
      return x > y;
    });
    StreamRcf G(nt, p);
    for (std::size_t k = rep.progression_desc.steps.size() >= 2
                             ? rep.progression_desc.steps.size() - 2
                             : 0;
         k < rep.progression_desc.steps.size(); ++k) {
      std::size_t idx = rep.progression_desc.steps[k].first - 1;
      std::vector<std::int64_t> rows;
      std::size_t nrows = 0;
      orbit_rows(ext[order[idx]], rows, nrows);
      G.add_rows(rows, nrows);
    }
    rep.final_pair_span = G.rank();
  }

  // Orbit span of the Definition identities over the ternary basis.
  {
    StreamRcf G(nt, p);
    for (const Poly& I : leibniz_triple_identities())
      for (const auto& sigma : sigmas) {
        std::vector<std::int64_t> row(nt, 0);
        for (const auto& [m, c] : poly_relabel(I, sigma))
          row[static_cast<std::size_t>(tindex.at(m))] += c;
        G.add_rows(row, 1);
      }
    rep.definition_span = G.rank();
  }
  return rep;
}

}  // namespace dimalg
