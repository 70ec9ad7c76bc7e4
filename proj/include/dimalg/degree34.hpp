// Monomial-level computations in degrees 3 and 4: the block matrix
// M = [A 0; E I] over the full dialgebra monomial basis, its RCF, and the
// extraction of the dicommutator's new identities.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dimalg/assoc_types.hpp"
#include "dimalg/consequences.hpp"
#include "dimalg/dialgebra.hpp"
#include "dimalg/matrix.hpp"
#include "dimalg/rac.hpp"

namespace dimalg {

// Multilinear dialgebra basis of degree n (dim = Z_n * n!), type-major.
inline std::vector<TreeId> dialgebra_basis(int n) { return monomial_basis(dialgebra_types(n), n); }

namespace detail {
template <class F>
ExactMatrix<F> rows_to_matrix(const F& K, const std::vector<Poly>& polys,
                              const std::map<TreeId, int>& index, std::size_t ncols) {
  ExactMatrix<F> m(K, polys.size(), ncols);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [mono, c] : polys[i])
      m.at(i, static_cast<std::size_t>(index.at(mono))) =
          K.add(m.at(i, static_cast<std::size_t>(index.at(mono))), K.from_int(c));
  return m;
}
}  // namespace detail

template <class F>
struct MonomialComputation {
  ExactMatrix<F> A;                    // identities x dialgebra monomials
  ExactMatrix<F> E;                    // expansions x dialgebra monomials
  ExactMatrix<F> M;                    // block matrix in RCF after reduce()
  std::vector<std::size_t> pivots;
  NewIdentityReport<F> report;
  std::vector<TreeId> right_basis;     // single-operation monomials (rows of E)
};

// Degree-n monomial computation over field K.  The right-hand basis is the
// full binary basis in degree 3 (12 monomials) and the straightened RAC
// basis in degree 4 (60 monomials of the published degree-4 table).
template <class F>
MonomialComputation<F> monomial_computation(const F& K, int n) {
  auto dbasis = dialgebra_basis(n);
  auto dindex = basis_index(dbasis);
  const std::size_t nc = dbasis.size();

  std::vector<Poly> arows;
  for (const Poly& I : alternative_identities(n))
    for (Poly& J : permutation_orbit(I, n)) arows.push_back(std::move(J));

  std::vector<TreeId> right_basis;
  if (n == 3) {
    right_basis = monomial_basis(binary_types(3), 3);
  } else {
    right_basis = rac_basis(n).basis;
  }
  std::vector<Poly> erows;
  for (TreeId m : right_basis) erows.push_back(dicomm_expand(m));

  MonomialComputation<F> out{detail::rows_to_matrix(K, arows, dindex, nc),
                             detail::rows_to_matrix(K, erows, dindex, nc),
                             ExactMatrix<F>(K, 0, 0),
                             {},
                             {},
                             right_basis};
  out.M = build_block_matrix(out.A, out.E);
  out.pivots = rcf_inplace(out.M);
  out.report = extract_new_identities(out.M, out.pivots);
  return out;
}

inline MonomialComputation<RationalField> monomial_computation_rational(int n) {
  return monomial_computation(RationalField{}, n);
}

inline MonomialComputation<PrimeField> monomial_computation_mod(int n, std::uint32_t p = 101) {
  return monomial_computation(PrimeField{p}, n);
}

// Rank of the matrix of all permutations of the given identities,
// straightened into the degree-n RAC basis (rational arithmetic).
inline std::size_t span_rank_under_permutations(const std::vector<Poly>& ids, int n) {
  const RacBasis& rb = rac_basis(n);
  std::vector<std::vector<Coeff>> rows;
  for (const Poly& I : ids)
    for (const Poly& J : permutation_orbit(I, n)) rows.push_back(rac_coordinates(J, rb));
  if (rows.empty()) return 0;
  return span_rank_rational(rows, rb.basis.size());
}

}  // namespace dimalg
