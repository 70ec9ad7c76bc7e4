#include <catch_amalgamated.hpp>

#include <set>

#include "dimalg/assoc_types.hpp"
#include "dimalg/dialgebra.hpp"
#include "dimalg/poly.hpp"

using namespace dimalg;

namespace {
// All fully decorated two-operation monomials of degree n with identity word.
void all_decorated(int lo, int hi, std::vector<TreeId>& out) {
  if (lo == hi) {
    out.push_back(leaf(lo));
    return;
  }
  for (int mid = lo; mid < hi; ++mid) {
    std::vector<TreeId> ls, rs;
    all_decorated(lo, mid, ls);
    all_decorated(mid + 1, hi, rs);
    for (TreeId l : ls)
      for (TreeId r : rs) {
        out.push_back(node(Op::Dashv, l, r));
        out.push_back(node(Op::Vdash, l, r));
      }
  }
}
}  // namespace

TEST_CASE("bar normal form is idempotent and shape-preserving (degrees <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<TreeId> ms;
    all_decorated(1, n, ms);
    for (TreeId m : ms) {
      TreeId nf = normalize_bar(m);
      CHECK(is_bar_normal(nf));
      CHECK(normalize_bar(nf) == nf);
      CHECK(leaves(nf) == leaves(m));
      CHECK(shape_of(strip_ops(nf)) == shape_of(strip_ops(m)));
    }
  }
}

TEST_CASE("bar-normal count equals the dialgebra type count") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<TreeId> ms;
    all_decorated(1, n, ms);
    std::set<TreeId> normals;
    for (TreeId m : ms) normals.insert(normalize_bar(m));
    CHECK(static_cast<long long>(normals.size()) == dialgebra_type_count(n));
    for (TreeId t : dialgebra_types(n)) {
      std::vector<int> idw;
      for (int i = 1; i <= n; ++i) idw.push_back(i);
      CHECK(normals.count(with_word(t, idw)) == 1);
    }
  }
}

TEST_CASE("dicommutator expansion has 2^(n-1) terms with +-1 coefficients") {
  for (int n = 1; n <= 6; ++n) {
    for (TreeId t : binary_types(n)) {
      std::vector<int> idw;
      for (int i = 1; i <= n; ++i) idw.push_back(i);
      Poly e = dicomm_expand(with_word(t, idw));
      CHECK(e.size() == (1u << (n - 1)));
      for (const auto& [m, c] : e) {
        CHECK((c == 1 || c == -1));
        CHECK(is_bar_normal(m));
      }
    }
  }
}

TEST_CASE("dicommutator expansion is equivariant under relabeling (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    auto sigmas = perms_lex(n);
    for (TreeId t : binary_types(n)) {
      std::vector<int> idw;
      for (int i = 1; i <= n; ++i) idw.push_back(i);
      TreeId m = with_word(t, idw);
      Poly e = dicomm_expand(m);
      for (std::size_t s = 0; s < sigmas.size(); s += 7) {  // sample
        const auto& sigma = sigmas[s];
        CHECK(dicomm_expand(relabel(m, sigma)) == poly_relabel(e, sigma));
      }
    }
  }
}

TEST_CASE("dicommutator in degree 2 is the dialgebra commutator") {
  Poly e = dicomm_expand(mul(leaf(1), leaf(2)));
  Poly want{{node(Op::Dashv, leaf(1), leaf(2)), 1}, {node(Op::Vdash, leaf(2), leaf(1)), -1}};
  CHECK(e == want);
}
