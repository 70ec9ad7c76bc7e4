// Young's natural representation of the symmetric group via Clifton's
// algorithm: N(sigma) = A(id)^{-1} A(sigma), where A(sigma)_{ij} in {-1,0,1}
// compares the columns of tableau T_i with sigma applied to T_j.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "dimalg/field.hpp"
#include "dimalg/matrix.hpp"
#include "dimalg/tree.hpp"

namespace dimalg {

using Partition = std::vector<int>;
using Tableau = std::vector<std::vector<int>>;

// Partitions of n in lexicographically decreasing order (Table 5 row order).
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> go = [&](int rem, int mx) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rem, mx); k >= 1; --k) {
      cur.push_back(k);
      go(rem - k, k);
      cur.pop_back();
    }
  };
  go(n, n);
  return out;
}

// Standard Young tableaux of the given shape, in the enumeration order
// induced by placing 1..n row-top-first.
inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
  int n = 0;
  for (int s : shape) n += s;
  Tableau rows(shape.size());
  std::vector<Tableau> out;
  std::function<void(int)> go = [&](int k) {
    if (k > n) {
      out.push_back(rows);
      return;
    }
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (static_cast<int>(rows[i].size()) < shape[i] &&
          (i == 0 || rows[i].size() < rows[i - 1].size())) {
        rows[i].push_back(k);
        go(k + 1);
        rows[i].pop_back();
      }
    }
  };
  go(1);
  return out;
}

inline int partition_dimension(const Partition& shape) {
  return static_cast<int>(standard_tableaux(shape).size());
}

// Clifton's matrix A(sigma) with entries in {-1, 0, 1}.  sigma is given as a
// 1-based image vector (sigma[v] = image of v).
inline std::vector<std::int64_t> clifton_matrix(const Partition& shape,
                                                const std::vector<Tableau>& tabs,
                                                const std::vector<int>& sigma) {
  const std::size_t d = tabs.size();
  const std::size_t nrows = shape.size();
  const int ncols = shape[0];
  std::vector<std::int64_t> A(d * d, 0);
  int n = 0;
  for (int s : shape) n += s;
  std::vector<int> rowof(static_cast<std::size_t>(n) + 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r < nrows; ++r)
      for (int x : tabs[j][r]) rowof[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x)])] = static_cast<int>(r);
    for (std::size_t i = 0; i < d; ++i) {
      int sign = 1;
      bool ok = true;
      std::vector<std::vector<int>> newrows(nrows);
      for (int c = 0; c < ncols && ok; ++c) {
        std::vector<int> col, target;
        for (std::size_t r = 0; r < nrows; ++r)
          if (static_cast<int>(tabs[i][r].size()) > c) {
            col.push_back(tabs[i][r][static_cast<std::size_t>(c)]);
            target.push_back(rowof[static_cast<std::size_t>(col.back())]);
          }
        // The entries of this column of T_i must land in distinct rows
        // 0..len-1 under sigma*T_j.
        std::vector<int> sorted = target;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
          if (sorted[k] != static_cast<int>(k)) {
            ok = false;
            break;
          }
        if (!ok) break;
        // Sign of the permutation sorting `target` (cycle decomposition).
        std::vector<std::size_t> perm(col.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(),
                  [&](std::size_t x, std::size_t y) { return target[x] < target[y]; });
        std::vector<bool> seen(col.size(), false);
        for (std::size_t st = 0; st < col.size(); ++st) {
          if (seen[st]) continue;
          std::size_t len = 0, cur = st;
          while (!seen[cur]) {
            seen[cur] = true;
            cur = perm[cur];
            ++len;
          }
          if (len % 2 == 0) sign = -sign;
        }
        for (std::size_t k = 0; k < col.size(); ++k)
          newrows[static_cast<std::size_t>(target[k])].push_back(col[k]);
      }
      if (!ok) continue;
      // Row sets must match sigma*T_j rowwise.
      for (std::size_t r = 0; r < nrows && ok; ++r) {
        std::vector<int> want;
        for (int x : tabs[j][r]) want.push_back(sigma[static_cast<std::size_t>(x)]);
        std::sort(want.begin(), want.end());
        std::vector<int> got = newrows[r];
        std::sort(got.begin(), got.end());
        ok = want == got;
      }
      if (ok) A[i * d + j] = sign;
    }
  }
  return A;
}

// Integer natural-representation matrix of sigma: A(id)^{-1} A(sigma),
// computed exactly over the rationals (the result is integral).
inline std::vector<std::int64_t> rep_matrix(const Partition& shape, const std::vector<int>& sigma) {
  auto tabs = standard_tableaux(shape);
  const std::size_t d = tabs.size();
  int n = 0;
  for (int s : shape) n += s;
  if (static_cast<int>(sigma.size()) != n + 1)
    throw std::invalid_argument("rep_matrix: degree mismatch");
  std::vector<int> ident(static_cast<std::size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) ident[static_cast<std::size_t>(v)] = v;
  auto Aid = clifton_matrix(shape, tabs, ident);
  auto As = clifton_matrix(shape, tabs, sigma);
  RationalField K;
  ExactMatrix<RationalField> m(K, d, 2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      m.at(i, j) = K.from_int(Aid[i * d + j]);
      m.at(i, d + j) = K.from_int(As[i * d + j]);
    }
  auto piv = rcf_inplace(m);
  if (piv.size() != d || piv.back() != d - 1)
    throw std::logic_error("rep_matrix: Clifton identity matrix not invertible");
  std::vector<std::int64_t> out(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const mpq_class& q = m.at(i, d + j);
      if (q.get_den() != 1) throw std::logic_error("rep_matrix: non-integer entry");
      out[i * d + j] = static_cast<std::int64_t>(q.get_num().get_si());
    }
  return out;
}

// Cached natural representation mod p with all |S_n| matrices precomputed
// lazily, indexed by Lehmer rank of the image word.
class NatRepMod {
 public:
  NatRepMod(Partition shape, std::uint32_t p = 101)
      : shape_(std::move(shape)), field_(p), tabs_(standard_tableaux(shape_)) {
    d_ = tabs_.size();
    n_ = 0;
    for (int s : shape_) n_ += s;
    std::vector<int> ident(static_cast<std::size_t>(n_) + 1);
    for (int v = 0; v <= n_; ++v) ident[static_cast<std::size_t>(v)] = v;
    auto Aid = clifton_matrix(shape_, tabs_, ident);
    ainv_ = invert_mod(Aid);
    cache_.resize(static_cast<std::size_t>(factorial(n_)));
  }

  std::size_t dim() const { return d_; }
  int degree() const { return n_; }
  std::uint32_t prime() const { return field_.p; }

  // sigma as a 1-based image vector.
  const std::vector<std::int64_t>& matrix(const std::vector<int>& sigma) {
    std::vector<int> word(sigma.begin() + 1, sigma.end());
    std::size_t key = static_cast<std::size_t>(lehmer_rank(word));
    if (!cache_[key].empty()) return cache_[key];
    auto As = clifton_matrix(shape_, tabs_, sigma);
    std::vector<std::int64_t> out(d_ * d_, 0);
    const std::int64_t p = field_.p;
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t k = 0; k < d_; ++k) {
        std::int64_t f = ainv_[i * d_ + k];
        if (!f) continue;
        for (std::size_t j = 0; j < d_; ++j)
          out[i * d_ + j] = (out[i * d_ + j] + f * ((As[k * d_ + j] % p + p) % p)) % p;
      }
    cache_[key] = std::move(out);
    return cache_[key];
  }

  // Matrix for the leaf word of a multilinear monomial (word[k-1] = variable
  // at leaf position k, i.e. sigma(k) = word[k-1]).
  const std::vector<std::int64_t>& matrix_for_word(const std::vector<int>& word) {
    std::vector<int> sigma(word.size() + 1, 0);
    for (std::size_t k = 0; k < word.size(); ++k) sigma[k + 1] = word[k];
    return matrix(sigma);
  }

 private:
  std::vector<std::int64_t> invert_mod(const std::vector<std::int64_t>& M) {
    const std::int64_t p = field_.p;
    ExactMatrix<PrimeField> m(field_, d_, 2 * d_);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) {
        m.at(i, j) = ((M[i * d_ + j] % p) + p) % p;
        m.at(i, d_ + j) = i == j ? 1 : 0;
      }
    auto piv = rcf_inplace(m);
    if (piv.size() != d_ || piv.back() != d_ - 1)
      throw std::logic_error("NatRepMod: Clifton identity matrix singular mod p");
    std::vector<std::int64_t> out(d_ * d_);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) out[i * d_ + j] = m.at(i, d_ + j);
    return out;
  }

  Partition shape_;
  PrimeField field_;
  std::vector<Tableau> tabs_;
  std::size_t d_ = 0;
  int n_ = 0;
  std::vector<std::int64_t> ainv_;
  std::vector<std::vector<std::int64_t>> cache_;
};

}  // namespace dimalg
