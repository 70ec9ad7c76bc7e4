// Exact dense matrices, row canonical form (RCF), the block expansion matrix
// [A 0; E I], new-identity extraction, and a streaming GF(p) reducer for the
// large degree-5/6 instances.
#pragma once

#include <cblas.h>

#include <cmath>
#include <functional>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dimalg/field.hpp"
#include "dimalg/poly.hpp"

namespace dimalg {

// Progress callback for long-running reductions (rows absorbed / total).
using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

template <class F>
struct ExactMatrix {
  F field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t split = 0;  // column index of the "vertical line"; 0 = none
  std::vector<typename F::Elt> a;

  ExactMatrix(F f, std::size_t r, std::size_t c, std::size_t split_col = 0)
      : field(f), rows(r), cols(c), split(split_col), a(r * c, f.zero()) {}

  typename F::Elt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const typename F::Elt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// In-place reduced row-echelon form; returns the pivot columns in order.
// Pivot choice: first row with a nonzero entry in the current column.
template <class F>
std::vector<std::size_t> rcf_inplace(ExactMatrix<F>& m) {
  const F& K = m.field;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pr = r;
    while (pr < m.rows && K.is_zero(m.at(pr, c))) ++pr;
    if (pr == m.rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    typename F::Elt inv = K.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j)
      if (!K.is_zero(m.at(r, j))) m.at(r, j) = K.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || K.is_zero(m.at(i, c))) continue;
      typename F::Elt f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        if (!K.is_zero(m.at(r, j))) m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class F>
std::size_t rank_of(ExactMatrix<F> m) {
  return rcf_inplace(m).size();
}

// Block matrix M = [A 0; E I] with the split after A's columns.
template <class F>
ExactMatrix<F> build_block_matrix(const ExactMatrix<F>& A, const ExactMatrix<F>& E) {
  if (A.cols != E.cols) throw std::invalid_argument("build_block_matrix: column mismatch");
  const F& K = A.field;
  ExactMatrix<F> M(K, A.rows + E.rows, A.cols + E.rows, A.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
  for (std::size_t i = 0; i < E.rows; ++i) {
    for (std::size_t j = 0; j < E.cols; ++j) M.at(A.rows + i, j) = E.at(i, j);
    M.at(A.rows + i, A.cols + i) = K.one();
  }
  return M;
}

template <class F>
struct NewIdentityReport {
  std::size_t rank = 0;
  std::size_t left_rank = 0;
  // Right parts of the RCF rows whose pivot lies right of the split.
  std::vector<std::vector<typename F::Elt>> extracted;
  // LCM of denominators over the whole RCF (rational mode; 1 otherwise).
  mpz_class denominator_lcm = 1;
};

namespace detail {
inline void lcm_denominator(mpz_class& acc, const mpq_class& x) {
  mpz_class den = x.get_den();
  mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
}
inline void lcm_denominator(mpz_class&, const std::int64_t&) {}
}  // namespace detail

// `m` must already be in RCF with its split set.
template <class F>
NewIdentityReport<F> extract_new_identities(const ExactMatrix<F>& m,
                                            const std::vector<std::size_t>& pivots) {
  NewIdentityReport<F> rep;
  rep.rank = pivots.size();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= m.split) {
      std::vector<typename F::Elt> right(m.cols - m.split);
      for (std::size_t j = m.split; j < m.cols; ++j) right[j - m.split] = m.at(r, j);
      rep.extracted.push_back(std::move(right));
    } else {
      ++rep.left_rank;
    }
  }
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < m.cols; ++j) detail::lcm_denominator(rep.denominator_lcm, m.at(r, j));
  return rep;
}

// Decodes an extracted right-part row as a polynomial over the right basis
// (integer coefficients; callers use it only on small-coefficient rows).
template <class F>
std::string render_extracted(const F& field, const std::vector<typename F::Elt>& row,
                             const std::vector<TreeId>& right_basis) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (field.is_zero(row[j])) continue;
    std::string c = F::to_string(row[j]);
    if (!out.empty()) {
      if (!c.empty() && c[0] == '-') {
        out += " - ";
        c = c.substr(1);
      } else {
        out += " + ";
      }
    }
    if (c != "1") out += c + "*";
    out += render(right_basis[j]);
  }
  return out.empty() ? "0" : out;
}

// Matrix export: plain-text triples ("rows cols field" header, then 1-based
// "i j value" lines for nonzero entries) and dense CSV.
template <class F>
void export_triples(std::ostream& os, const ExactMatrix<F>& m) {
  os << m.rows << ' ' << m.cols << ' ' << m.field.name() << '\n';
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!m.field.is_zero(m.at(i, j)))
        os << (i + 1) << ' ' << (j + 1) << ' ' << F::to_string(m.at(i, j)) << '\n';
}

template <class F>
void export_csv(std::ostream& os, const ExactMatrix<F>& m) {
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) os << ',';
      os << F::to_string(m.at(i, j));
    }
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// Streaming GF(p) row reduction.
//
// Maintains an RREF basis and absorbs row chunks.  The bulk elimination step
// C -= C[:, pivots] * B is a dense double-precision matrix product (exact:
// entries lie in [0, p) and p^2 * max_rank stays below 2^53), delegated to
// BLAS; the per-row merge and back-substitution are exact int64 arithmetic.
// ---------------------------------------------------------------------------
class StreamRcf {
 public:
  StreamRcf(std::size_t ncols, std::uint32_t p = 101) : ncols_(ncols), field_(p) {
    // Exactness bound for the double-precision product.
    double bound = static_cast<double>(p - 1) * (p - 1) * static_cast<double>(ncols);
    if (bound >= 9.0e15) throw std::invalid_argument("StreamRcf: modulus too large for exact BLAS");
  }

  std::uint32_t prime() const { return field_.p; }
  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return piv_.size(); }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  // Row i of the current RREF basis.
  const std::int64_t* row(std::size_t i) const { return &basis_[i * ncols_]; }

  // Absorbs `nrows` rows stored row-major in `chunk` (arbitrary int64
  // entries; reduced mod p internally).  The chunk is consumed.
  void add_rows(std::vector<std::int64_t>& chunk, std::size_t nrows) {
    const std::int64_t p = field_.p;
    for (auto& x : chunk) {
      x %= p;
      if (x < 0) x += p;
    }
    reduce_against_basis(chunk, nrows);

    // Merge the remainder into an RREF of fresh rows.
    std::vector<std::vector<std::int64_t>> newrows;
    std::vector<std::size_t> newpiv;
    for (std::size_t i = 0; i < nrows; ++i) {
      std::vector<std::int64_t> row(chunk.begin() + static_cast<std::ptrdiff_t>(i * ncols_),
                                    chunk.begin() + static_cast<std::ptrdiff_t>((i + 1) * ncols_));
      for (std::size_t k = 0; k < newrows.size(); ++k) {
        std::int64_t f = row[newpiv[k]];
        if (f)
          for (std::size_t j = 0; j < ncols_; ++j)
            row[j] = ((row[j] - f * newrows[k][j]) % p + p) % p;
      }
      std::size_t c = 0;
      while (c < ncols_ && row[c] == 0) ++c;
      if (c == ncols_) continue;
      std::int64_t inv = field_.inv(row[c]);
      for (std::size_t j = c; j < ncols_; ++j) row[j] = (row[j] * inv) % p;
      for (std::size_t k = 0; k < newrows.size(); ++k) {
        std::int64_t f = newrows[k][c];
        if (f)
          for (std::size_t j = 0; j < ncols_; ++j)
            newrows[k][j] = ((newrows[k][j] - f * row[j]) % p + p) % p;
      }
      newrows.push_back(std::move(row));
      newpiv.push_back(c);
    }
    if (newrows.empty()) return;

    back_substitute(newrows, newpiv);
    std::size_t old = piv_.size();
    basis_.resize((old + newrows.size()) * ncols_);
    for (std::size_t k = 0; k < newrows.size(); ++k) {
      std::copy(newrows[k].begin(), newrows[k].end(), basis_.begin() + static_cast<std::ptrdiff_t>((old + k) * ncols_));
      piv_.push_back(newpiv[k]);
    }
    sort_rows_by_pivot();
  }

  // Convenience: absorb a single row.
  void add_row(std::vector<std::int64_t> row) {
    if (row.size() != ncols_) throw std::invalid_argument("StreamRcf: row length mismatch");
    add_rows(row, 1);
  }

 private:
  void reduce_against_basis(std::vector<std::int64_t>& chunk, std::size_t nrows) {
    const std::size_t r = piv_.size();
    if (r == 0 || nrows == 0) return;
    const std::int64_t p = field_.p;
    std::vector<double> coeff(nrows * r);
    bool any = false;
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        std::int64_t v = chunk[i * ncols_ + piv_[k]];
        coeff[i * r + k] = static_cast<double>(v);
        any |= v != 0;
      }
    if (!any) return;
    std::vector<double> bd(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) bd[i] = static_cast<double>(basis_[i]);
    std::vector<double> prod(nrows * ncols_);
    cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(nrows),
                static_cast<int>(ncols_), static_cast<int>(r), 1.0, coeff.data(),
                static_cast<int>(r), bd.data(), static_cast<int>(ncols_), 0.0, prod.data(),
                static_cast<int>(ncols_));
    for (std::size_t i = 0; i < nrows * ncols_; ++i) {
      std::int64_t v = chunk[i] - static_cast<std::int64_t>(std::llround(prod[i]));
      chunk[i] = (v % p + p) % p;
    }
  }

  void back_substitute(const std::vector<std::vector<std::int64_t>>& newrows,
                       const std::vector<std::size_t>& newpiv) {
    const std::size_t r = piv_.size();
    const std::size_t k = newrows.size();
    if (r == 0) return;
    const std::int64_t p = field_.p;
    std::vector<double> coeff(r * k);
    bool any = false;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        std::int64_t v = basis_[i * ncols_ + newpiv[j]];
        coeff[i * k + j] = static_cast<double>(v);
        any |= v != 0;
      }
    if (!any) return;
    std::vector<double> nd(k * ncols_);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < ncols_; ++c) nd[j * ncols_ + c] = static_cast<double>(newrows[j][c]);
    std::vector<double> prod(r * ncols_);
    cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(r),
                static_cast<int>(ncols_), static_cast<int>(k), 1.0, coeff.data(),
                static_cast<int>(k), nd.data(), static_cast<int>(ncols_), 0.0, prod.data(),
                static_cast<int>(ncols_));
    for (std::size_t i = 0; i < r * ncols_; ++i) {
      std::int64_t v = basis_[i] - static_cast<std::int64_t>(std::llround(prod[i]));
      basis_[i] = (v % p + p) % p;
    }
  }

  void sort_rows_by_pivot() {
    std::vector<std::size_t> order(piv_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return piv_[x] < piv_[y]; });
    std::vector<std::int64_t> nb(basis_.size());
    std::vector<std::size_t> np(piv_.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      std::copy(basis_.begin() + static_cast<std::ptrdiff_t>(order[k] * ncols_),
                basis_.begin() + static_cast<std::ptrdiff_t>((order[k] + 1) * ncols_),
                nb.begin() + static_cast<std::ptrdiff_t>(k * ncols_));
      np[k] = piv_[order[k]];
    }
    basis_ = std::move(nb);
    piv_ = std::move(np);
  }

  std::size_t ncols_;
  PrimeField field_;
  std::vector<std::int64_t> basis_;  // rank x ncols, RREF, entries in [0, p)
  std::vector<std::size_t> piv_;
};

// Rank of the matrix whose rows are the RAC-basis coordinates of all
// permutations of all given identities.
struct RowSource {
  std::vector<std::vector<Coeff>> rows;
};

inline std::size_t span_rank_mod(const std::vector<std::vector<Coeff>>& rows, std::size_t ncols,
                                 std::uint32_t p) {
  StreamRcf S(ncols, p);
  for (const auto& r : rows) {
    std::vector<std::int64_t> row(r.begin(), r.end());
    S.add_rows(row, 1);
  }
  return S.rank();
}

inline std::size_t span_rank_rational(const std::vector<std::vector<Coeff>>& rows,
                                      std::size_t ncols) {
  RationalField K;
  ExactMatrix<RationalField> m(K, rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = K.from_int(rows[i][j]);
  return rcf_inplace(m).size();
}

// Greedy generator minimization: identities are taken in the given (already
// sorted) order; each step adjoins the identity's full permutation orbit to a
// cumulative row space and records (1-based index, new rank) whenever the
// rank grows.  `orbit_fn(i)` yields the orbit rows of identity i.
struct GeneratorProgression {
  std::vector<std::pair<std::size_t, std::size_t>> steps;  // (index, rank after)
  std::size_t final_rank = 0;
};

template <class OrbitFn>
GeneratorProgression minimal_generators(std::size_t count, std::size_t ncols, std::uint32_t p,
                                        OrbitFn&& orbit_fn) {
  StreamRcf S(ncols, p);
  GeneratorProgression prog;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::int64_t> rows;
    std::size_t nrows = 0;
    orbit_fn(i, rows, nrows);
    S.add_rows(rows, nrows);
    if (S.rank() != prev) {
      prog.steps.emplace_back(i + 1, S.rank());
      prev = S.rank();
    }
  }
  prog.final_rank = prev;
  return prog;
}

}  // namespace dimalg
