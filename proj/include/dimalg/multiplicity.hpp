// Per-partition multiplicity of dicommutator identities (the Figure-3
// expansion matrix) and the Malcev-consequence rank comparison.
//
// First computation: for a partition lambda of n with representation
// dimension d, stack one d-row block per alternative-dialgebra consequence
// (A_n identities over the Z_n dialgebra types) above one d-row block per
// RAC-type dicommutator expansion carrying an identity block on the right
// (R_n further column groups); the multiplicity is the number of RCF pivots
// right of the Z_n*d split.
//
// Second computation: stack the W_n skew-symmetry relation blocks
// (N(sigma) - sign * I in the type's column group) above the D_n di-Malcev
// consequence blocks straightened into the RAC types; its rank equals the
// multiplicity for every partition (the no-special-identities theorem).
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dimalg/assoc_types.hpp"
#include "dimalg/consequences.hpp"
#include "dimalg/dialgebra.hpp"
#include "dimalg/matrix.hpp"
#include "dimalg/rac.hpp"
#include "dimalg/repn.hpp"

namespace dimalg {

struct MultiplicityContext {
  int n = 0;
  std::vector<TreeId> dtypes;        // Z_n dialgebra types
  std::map<TreeId, int> dindex;
  std::vector<TreeId> rtypes;        // R_n RAC types
  std::vector<Poly> identities;      // A_n alternative-dialgebra consequences
  std::vector<Poly> expansions;      // dicommutator expansion per RAC type

  static const MultiplicityContext& get(int n) {
    static std::map<int, MultiplicityContext> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    MultiplicityContext ctx;
    ctx.n = n;
    ctx.dtypes = dialgebra_types(n);
    for (std::size_t i = 0; i < ctx.dtypes.size(); ++i)
      ctx.dindex[ctx.dtypes[i]] = static_cast<int>(i);
    ctx.rtypes = rac_types(n);
    ctx.identities = alternative_identities(n);
    std::vector<int> idw;
    for (int i = 1; i <= n; ++i) idw.push_back(i);
    for (TreeId t : ctx.rtypes) ctx.expansions.push_back(dicomm_expand(with_word(t, idw)));
    return cache.emplace(n, std::move(ctx)).first->second;
  }
};

namespace detail {
// Appends the d x (ngroups*d) block of a multilinear identity to `rows`:
// block j accumulates coeff * N(leaf word) over the terms of association
// type j; `extra_col`, if >= 0, adds an identity block in that group.
inline void append_block_row(std::vector<std::int64_t>& rows, const Poly& I, NatRepMod& rep,
                             const std::map<TreeId, int>& type_index, std::size_t ngroups,
                             int extra_col = -1) {
  const std::size_t d = rep.dim();
  const std::size_t ncols = ngroups * d;
  const std::int64_t p = rep.prime();
  std::size_t base = rows.size();
  rows.resize(base + d * ncols, 0);
  for (const auto& [m, c] : I) {
    std::size_t j = static_cast<std::size_t>(type_index.at(shape_of(m)));
    const auto& N = rep.matrix_for_word(leaves(m));
    std::int64_t cc = ((c % p) + p) % p;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        std::int64_t& e = rows[base + r * ncols + j * d + k];
        e = (e + cc * N[r * d + k]) % p;
      }
  }
  if (extra_col >= 0)
    for (std::size_t r = 0; r < d; ++r)
      rows[base + r * ncols + static_cast<std::size_t>(extra_col) * d + r] = 1;
}

// Same, for a single-operation identity straightened into the RAC types.
inline void append_block_row_rac(std::vector<std::int64_t>& rows, const Poly& I, NatRepMod& rep,
                                 const std::map<TreeId, int>& rindex, std::size_t ngroups) {
  const std::size_t d = rep.dim();
  const std::size_t ncols = ngroups * d;
  const std::int64_t p = rep.prime();
  std::size_t base = rows.size();
  rows.resize(base + d * ncols, 0);
  for (const auto& [m, c] : I) {
    auto [s, cm] = rac_straighten(m);
    if (s == 0) continue;
    std::size_t j = static_cast<std::size_t>(rindex.at(shape_of(cm)));
    const auto& N = rep.matrix_for_word(leaves(cm));
    std::int64_t cc = (((c * s) % p) + p) % p;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        std::int64_t& e = rows[base + r * ncols + j * d + k];
        e = (e + cc * N[r * d + k]) % p;
      }
  }
}
}  // namespace detail

// Multiplicity of dicommutator identities for one partition, mod p.
inline std::size_t dicommutator_multiplicity(const Partition& shape, int n, std::uint32_t p = 101,
                                             const ProgressFn& progress = {}) {
  const MultiplicityContext& ctx = MultiplicityContext::get(n);
  NatRepMod rep(shape, p);
  const std::size_t d = rep.dim();
  const std::size_t Z = ctx.dtypes.size();
  const std::size_t R = ctx.rtypes.size();
  const std::size_t ngroups = Z + R;
  const std::size_t ncols = ngroups * d;
  StreamRcf S(ncols, p);
  std::vector<std::int64_t> buf;
  const std::size_t chunk_rows = 4096;
  std::size_t total = (ctx.identities.size() + R) * d;
  std::size_t done = 0;
  auto flush = [&]() {
    std::size_t nrows = buf.size() / ncols;
    if (!nrows) return;
    S.add_rows(buf, nrows);
    buf.clear();
    if (progress) progress(done, total);
  };
  for (const Poly& I : ctx.identities) {
    detail::append_block_row(buf, I, rep, ctx.dindex, ngroups);
    done += d;
    if (buf.size() / ncols >= chunk_rows) flush();
  }
  for (std::size_t i = 0; i < R; ++i) {
    detail::append_block_row(buf, ctx.expansions[i], rep, ctx.dindex, ngroups,
                             static_cast<int>(Z + i));
    done += d;
    if (buf.size() / ncols >= chunk_rows) flush();
  }
  flush();
  std::size_t mult = 0;
  for (std::size_t c : S.pivots())
    if (c >= Z * d) ++mult;
  return mult;
}

// Full Table 5 row for degree n: one multiplicity per partition, in
// lexicographically decreasing partition order.
inline std::vector<std::size_t> multiplicity_row(int n, std::uint32_t p = 101,
                                                 const std::function<void(const Partition&, std::size_t)>& checkpoint = {},
                                                 const ProgressFn& progress = {}) {
  std::vector<std::size_t> out;
  for (const Partition& shape : partitions(n)) {
    std::size_t m = dicommutator_multiplicity(shape, n, p, progress);
    if (checkpoint) checkpoint(shape, m);
    out.push_back(m);
  }
  return out;
}

// Rational-mode multiplicity for certification in small degrees (<= 4 is
// instant; 5 is feasible).  Uses exact integer natural representation
// matrices and rational RCF.
inline std::size_t dicommutator_multiplicity_rational(const Partition& shape, int n) {
  const MultiplicityContext& ctx = MultiplicityContext::get(n);
  auto tabs = standard_tableaux(shape);
  const std::size_t d = tabs.size();
  const std::size_t Z = ctx.dtypes.size();
  const std::size_t R = ctx.rtypes.size();
  const std::size_t ncols = (Z + R) * d;
  RationalField K;
  std::vector<std::vector<std::int64_t>> repcache(static_cast<std::size_t>(factorial(n)));
  auto rep_for_word = [&](const std::vector<int>& word) -> const std::vector<std::int64_t>& {
    std::size_t key = static_cast<std::size_t>(lehmer_rank(word));
    if (repcache[key].empty()) {
      std::vector<int> sigma(word.size() + 1, 0);
      for (std::size_t k = 0; k < word.size(); ++k) sigma[k + 1] = word[k];
      repcache[key] = rep_matrix(shape, sigma);
    }
    return repcache[key];
  };
  ExactMatrix<RationalField> M(K, (ctx.identities.size() + R) * d, ncols, Z * d);
  std::size_t row0 = 0;
  auto add_block = [&](const Poly& I, int extra_col) {
    for (const auto& [m, c] : I) {
      std::size_t j = static_cast<std::size_t>(ctx.dindex.at(shape_of(m)));
      const auto& N = rep_for_word(leaves(m));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k)
          if (N[r * d + k])
            M.at(row0 + r, j * d + k) += K.from_int(c * N[r * d + k]);
    }
    if (extra_col >= 0)
      for (std::size_t r = 0; r < d; ++r)
        M.at(row0 + r, static_cast<std::size_t>(extra_col) * d + r) = K.one();
    row0 += d;
  };
  for (const Poly& I : ctx.identities) add_block(I, -1);
  for (std::size_t i = 0; i < R; ++i) add_block(ctx.expansions[i], static_cast<int>(Z + i));
  auto piv = rcf_inplace(M);
  std::size_t mult = 0;
  for (std::size_t c : piv)
    if (c >= Z * d) ++mult;
  return mult;
}

// Second computation: rank of the (W_n + D_n)d x R_n d matrix of
// skew-symmetry relations and di-Malcev consequences.
inline std::size_t malcev_consequence_rank(const Partition& shape, int n, std::uint32_t p = 101) {
  const RacBasis& rb = rac_basis(n);
  NatRepMod rep(shape, p);
  const std::size_t d = rep.dim();
  const std::size_t R = rb.types.size();
  const std::size_t ncols = R * d;
  std::map<TreeId, int> rindex;
  for (std::size_t i = 0; i < R; ++i) rindex[rb.types[i]] = static_cast<int>(i);
  std::vector<std::int64_t> rows;
  for (const SkewRelation& sk : rb.skews) {
    const auto& N = rep.matrix_for_word(sk.word);
    std::size_t base = rows.size();
    rows.resize(base + d * ncols, 0);
    std::size_t j = static_cast<std::size_t>(sk.type_index);
    const std::int64_t pp = p;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        std::int64_t v = N[r * d + k] - (r == k ? sk.sign : 0);
        rows[base + r * ncols + j * d + k] = ((v % pp) + pp) % pp;
      }
  }
  for (const Poly& I : dimalcev_consequences(n))
    detail::append_block_row_rac(rows, I, rep, rindex, R);
  StreamRcf S(ncols, p);
  std::size_t nrows = rows.size() / ncols;
  S.add_rows(rows, nrows);
  return S.rank();
}

}  // namespace dimalg
