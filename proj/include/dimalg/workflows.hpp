// Named end-to-end runs reproducing the published computations, with
// pass/fail comparison against the embedded constants.
#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dimalg/consequences.hpp"
#include "dimalg/degree34.hpp"
#include "dimalg/dialgebra.hpp"
#include "dimalg/dsl.hpp"
#include "dimalg/kolesnikov.hpp"
#include "dimalg/multiplicity.hpp"
#include "dimalg/published.hpp"
#include "dimalg/rac.hpp"
#include "dimalg/triple.hpp"

namespace dimalg {

struct CheckLine {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct RunReport {
  std::string name;
  std::string summary;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<CheckLine> checks;
  std::vector<std::string> rendered;  // emitted identities
  double seconds = 0;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void check(const std::string& label, const std::string& expected, const std::string& actual) {
    checks.push_back({label, expected, actual, expected == actual});
  }
  template <class T>
  void check_eq(const std::string& label, const T& expected, const T& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    checks.push_back({label, e.str(), a.str(), expected == actual});
  }
  void value(const std::string& key, const std::string& v) { values.emplace_back(key, v); }
};

struct RunOptions {
  std::uint32_t prime = 101;
  bool rational = false;   // force rational arithmetic where meaningful
  bool force = false;      // override cost refusals
  bool slow = false;       // allow the degree-6 computations
  std::uint32_t check_prime = 103;  // second prime for degree-6 cross-check (0 = off)
  ProgressFn progress;     // streamed to stderr by the CLI
  std::function<void(const std::string&)> log;  // checkpoint lines
};

namespace detail {
inline std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) {
    if (!s.empty()) s += " ";
    s += std::to_string(x);
  }
  return s;
}

// Rank of the rational span of polynomials over the union of their monomials.
inline std::size_t span_rank(const std::vector<Poly>& rows) {
  std::set<TreeId> monos;
  for (const Poly& p : rows)
    for (const auto& [m, c] : p) {
      (void)c;
      monos.insert(m);
    }
  std::map<TreeId, std::size_t> index;
  std::size_t nc = 0;
  for (TreeId m : monos) index[m] = nc++;
  RationalField K;
  ExactMatrix<RationalField> mat(K, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [m, c] : rows[i]) mat.at(i, index[m]) += K.from_int(c);
  return rcf_inplace(mat).size();
}

inline std::size_t orbit_span_rank(const std::vector<Poly>& ids, int n) {
  std::vector<Poly> rows;
  for (const Poly& I : ids)
    for (Poly& J : permutation_orbit(I, n)) rows.push_back(std::move(J));
  return span_rank(rows);
}

// Mutual span containment of two identity families via three ranks.
inline bool same_orbit_span(const std::vector<Poly>& u, const std::vector<Poly>& v, int n,
                            std::size_t* rank_out = nullptr) {
  std::size_t ru = orbit_span_rank(u, n);
  std::size_t rv = orbit_span_rank(v, n);
  std::vector<Poly> both = u;
  both.insert(both.end(), v.begin(), v.end());
  std::size_t rb = orbit_span_rank(both, n);
  if (rank_out) *rank_out = rb;
  return ru == rv && rv == rb;
}

// Straightened orbit span rank in the degree-n RAC basis.
inline bool same_rac_span(const std::vector<Poly>& u, const std::vector<Poly>& v, int n,
                          std::size_t* rank_out = nullptr) {
  const RacBasis& rb = rac_basis(n);
  auto rows_of = [&](const std::vector<Poly>& ids) {
    std::vector<std::vector<Coeff>> rows;
    for (const Poly& I : ids)
      for (const Poly& J : permutation_orbit(I, n)) rows.push_back(rac_coordinates(J, rb));
    return rows;
  };
  auto ru = rows_of(u);
  auto rv = rows_of(v);
  std::size_t r1 = span_rank_rational(ru, rb.basis.size());
  std::size_t r2 = span_rank_rational(rv, rb.basis.size());
  auto rall = ru;
  rall.insert(rall.end(), rv.begin(), rv.end());
  std::size_t r12 = span_rank_rational(rall, rb.basis.size());
  if (rank_out) *rank_out = r12;
  return r1 == r2 && r2 == r12;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// KP pipelines
// ---------------------------------------------------------------------------

// Associative algebras -> associative dialgebras: Part 1 gives three
// identities, Part 2 the two bar identities; together the five defining
// identities of associative dialgebras.
inline RunReport run_kp_associative() {
  RunReport rep;
  rep.name = "kp-associative";
  rep.summary = "KP algorithm on associativity: the five associative-dialgebra identities";
  TreeId a = leaf(1), b = leaf(2), c = leaf(3);
  Poly assoc{{mul(mul(a, b), c), 1}, {mul(a, mul(b, c)), -1}};
  std::vector<Poly> out;
  for (const Poly& p : kp_part1(assoc, 3)) out.push_back(subscripts_to_dialgebra(p));
  for (const Poly& p : kp_part2()) out.push_back(subscripts_to_dialgebra(p));
  for (const Poly& p : out) rep.rendered.push_back(render_dsl(p));
  const std::vector<std::string> expected{
      "L(L(a,b),c) - L(a,L(b,c))",  // (a-|b)-|c = a-|(b-|c)
      "L(R(a,b),c) - R(a,L(b,c))",  // (a|-b)-|c = a|-(b-|c)
      "R(R(a,b),c) - R(a,R(b,c))",  // (a|-b)|-c = a|-(b|-c)
      "R(L(a,b),c) - R(R(a,b),c)",  // (a-|b)|-c = (a|-b)|-c (bar)
      "L(a,L(b,c)) - L(a,R(b,c))",  // a-|(b-|c) = a-|(b|-c) (bar)
  };
  rep.check_eq("identity count", expected.size(), out.size());
  for (std::size_t i = 0; i < expected.size() && i < out.size(); ++i) {
    Poly want = parse_identities(expected[i]).identities.at(0).poly;
    bool same = want == out[i] || poly_scale(want, -1) == out[i];
    rep.check("identity " + std::to_string(i + 1), expected[i],
              same ? expected[i] : rep.rendered[i]);
  }
  return rep;
}

// Alternative algebras -> alternative dialgebras: the Part 1 output (six
// identities) together with the bar identities spans the same subspace of
// the free two-operation algebra as the three defining identities plus bars.
inline RunReport run_kp_alternative() {
  RunReport rep;
  rep.name = "kp-alternative";
  rep.summary =
      "KP algorithm on the left/right alternative laws; span comparison with the "
      "three defining alternative-dialgebra identities";
  TreeId a = leaf(1), b = leaf(2), c = leaf(3);
  auto m2 = [](TreeId x, TreeId y) { return mul(x, y); };
  Poly alt_l{{m2(m2(a, b), c), 1}, {m2(a, m2(b, c)), -1}, {m2(m2(b, a), c), 1}, {m2(b, m2(a, c)), -1}};
  Poly alt_r{{m2(m2(a, b), c), 1}, {m2(a, m2(b, c)), -1}, {m2(m2(a, c), b), 1}, {m2(a, m2(c, b)), -1}};
  std::vector<Poly> part1 = kp_part1(alt_l, 3);
  for (Poly& p : kp_part1(alt_r, 3)) part1.push_back(std::move(p));
  std::vector<Poly> bars = kp_part2();
  std::vector<Poly> kp_out;
  for (const Poly& p : part1) kp_out.push_back(subscripts_to_dialgebra(p));
  for (const Poly& p : bars) kp_out.push_back(subscripts_to_dialgebra(p));
  for (const Poly& p : kp_out) rep.rendered.push_back(render_dsl(p));
  rep.check_eq("identity count (six + two bars)", std::size_t{8}, kp_out.size());

  // Reference family: the three defining identities, written in the free
  // two-operation algebra (no bar normalization, so both families live over
  // the same monomials), plus the bar identities.
  std::vector<Poly> ref{
      poly_add(detail::assoc_dashv(a, b, c), detail::assoc_times(b, a, c)),
      poly_add(detail::assoc_dashv(a, b, c), detail::assoc_dashv(a, c, b)),
      poly_add(detail::assoc_times(a, b, c), detail::assoc_vdash(a, c, b))};
  for (const Poly& p : bars) ref.push_back(subscripts_to_dialgebra(p));
  std::size_t span = 0;
  bool same = detail::same_orbit_span(kp_out, ref, 3, &span);
  rep.check_eq("span equality with defining identities + bars", true, same);
  rep.check_eq("span rank", std::size_t{27}, span);
  return rep;
}

// Anticommutative Malcev -> Malcev dialgebras: Part 1 on the Sagle form,
// elimination of the second operation, and span comparison with right
// anticommutativity (degree 3) and the di-Malcev identity (degree 4).
inline RunReport run_kp_malcev() {
  RunReport rep;
  rep.name = "kp-malcev";
  rep.summary =
      "KP algorithm on the Malcev identity; after eliminating the second operation the "
      "defining identities reduce to right anticommutativity and di-Malcev";
  std::vector<Poly> part1 = kp_part1(sagle_malcev(), 4);
  std::vector<Poly> eliminated;
  for (const Poly& p : part1) eliminated.push_back(to_single_op(eliminate_second(p)));
  std::vector<Poly> part2;
  for (const Poly& p : kp_part2()) part2.push_back(to_single_op(eliminate_second(p)));
  for (const Poly& p : part2) rep.rendered.push_back(render_dsl(p));
  for (const Poly& p : eliminated) rep.rendered.push_back(render_dsl(p));

  // Degree 3: the eliminated Part 2 identities and right anticommutativity
  // generate the same S_3-submodule.
  std::size_t span3 = 0;
  bool same3 = detail::same_orbit_span(part2, {right_anticommutativity()}, 3, &span3);
  rep.check_eq("degree-3 span equals right anticommutativity orbit", true, same3);
  rep.check_eq("degree-3 span rank", std::size_t{3}, span3);

  // Degree 4: in the free RAC algebra the eliminated Malcev identities and
  // the di-Malcev identity generate the same S_4-submodule.
  std::size_t span4 = 0;
  bool same4 = detail::same_rac_span(eliminated, {di_malcev()}, 4, &span4);
  rep.check_eq("degree-4 span equals di-Malcev orbit (straightened)", true, same4);
  rep.check_eq("degree-4 span rank", published::DIMALCEV_SPAN_RANK, span4);
  return rep;
}

// ---------------------------------------------------------------------------
// Monomial computations, multiplicities, triple systems, dimensions
// ---------------------------------------------------------------------------

inline RunReport run_degree3() {
  RunReport rep;
  rep.name = "degree3";
  rep.summary = "Degree-3 monomial computation: M = [A 0; E I] over the rationals";
  auto comp = monomial_computation_rational(3);
  rep.check_eq("matrix rows", std::size_t{30}, comp.M.rows);
  rep.check_eq("matrix cols", std::size_t{48}, comp.M.cols);
  rep.check_eq("extracted identities", published::DEGREE3_EXTRACTED, comp.report.extracted.size());
  rep.check_eq("denominator lcm", std::string("6"), comp.report.denominator_lcm.get_str());
  // The three extracted identities are the permutations of a(bc) + a(cb).
  std::vector<std::string> got;
  for (const auto& row : comp.report.extracted)
    got.push_back(render_extracted(comp.M.field, row, comp.right_basis));
  rep.rendered = got;
  const std::vector<std::string> expected{"a(bc) + a(cb)", "b(ac) + b(ca)", "c(ab) + c(ba)"};
  for (std::size_t i = 0; i < expected.size() && i < got.size(); ++i)
    rep.check("extracted " + std::to_string(i + 1), expected[i], got[i]);
  rep.value("rank", std::to_string(comp.report.rank));
  return rep;
}

inline RunReport run_degree4(const RunOptions& opt = {}) {
  RunReport rep;
  rep.name = "degree4";
  rep.summary = "Degree-4 monomial computation: 780 x 540 block matrix";
  auto check_common = [&](std::size_t rows, std::size_t cols, std::size_t extracted) {
    rep.check_eq("matrix rows", std::size_t{780}, rows);
    rep.check_eq("matrix cols", std::size_t{540}, cols);
    rep.check_eq("extracted identities", published::DEGREE4_EXTRACTED, extracted);
  };
  Poly dm = di_malcev();
  auto dm_coords = rac_coordinates(dm, rac_basis(4));
  if (opt.rational || !opt.prime) {
    auto comp = monomial_computation_rational(4);
    check_common(comp.M.rows, comp.M.cols, comp.report.extracted.size());
    // First extracted identity = di-Malcev up to sign.
    bool match = false;
    if (!comp.report.extracted.empty()) {
      const auto& first = comp.report.extracted.front();
      bool plus = true, minus = true;
      for (std::size_t j = 0; j < first.size(); ++j) {
        mpq_class w(static_cast<long>(dm_coords[j]));
        if (first[j] != w) plus = false;
        if (first[j] != -w) minus = false;
      }
      match = plus || minus;
      rep.rendered.push_back(render_extracted(comp.M.field, first, comp.right_basis));
    }
    rep.check_eq("first extracted = di-Malcev up to sign", true, match);
    rep.value("rank", std::to_string(comp.report.rank));
  } else {
    PrimeField K(opt.prime);
    auto comp = monomial_computation_mod(4, opt.prime);
    check_common(comp.M.rows, comp.M.cols, comp.report.extracted.size());
    bool match = false;
    if (!comp.report.extracted.empty()) {
      const auto& first = comp.report.extracted.front();
      // proportional to di-Malcev mod p
      std::int64_t ratio = 0;
      match = true;
      for (std::size_t j = 0; j < first.size() && match; ++j) {
        std::int64_t dv = K.from_int(dm_coords[j]);
        if (dv == 0) {
          if (first[j] != 0) match = false;
          continue;
        }
        std::int64_t r = K.mul(first[j], K.inv(dv));
        if (ratio == 0)
          ratio = r;
        else if (r != ratio)
          match = false;
      }
      rep.rendered.push_back(render_extracted(K, first, comp.right_basis));
    }
    rep.check_eq("first extracted proportional to di-Malcev", true, match);
    rep.value("rank", std::to_string(comp.report.rank));
  }
  // The 24 x 60 permutation matrix of di-Malcev has rank 20: all 20
  // extracted identities are consequences.
  std::size_t span = span_rank_under_permutations({dm}, 4);
  rep.check_eq("di-Malcev 24x60 span rank", published::DIMALCEV_SPAN_RANK, span);
  return rep;
}

inline RunReport run_multiplicities(int n, const RunOptions& opt = {}) {
  RunReport rep;
  rep.name = "multiplicities(" + std::to_string(n) + ")";
  rep.summary = "Table of dicommutator-identity multiplicities, degree " + std::to_string(n);
  if (n < 3 || n > 6) {
    rep.check("degree supported", "3..6", std::to_string(n));
    return rep;
  }
  if (n == 6 && opt.rational && !opt.force) {
    rep.check("rational mode refused for degree 6 (use --force)", "modular", "rational");
    return rep;
  }
  std::vector<std::size_t> row;
  auto parts = partitions(n);
  if (opt.rational && n <= 5) {
    for (const auto& shape : parts) {
      std::size_t m = dicommutator_multiplicity_rational(shape, n);
      if (opt.log) opt.log("partition done, multiplicity " + std::to_string(m));
      row.push_back(m);
    }
  } else {
    row = multiplicity_row(n, opt.prime,
                           [&](const Partition& shape, std::size_t m) {
                             if (opt.log) {
                               std::string s = "partition";
                               for (int part : shape) s += " " + std::to_string(part);
                               opt.log(s + ": multiplicity " + std::to_string(m));
                             }
                           },
                           opt.progress);
  }
  rep.value("row", detail::join_sizes(row));
  rep.check("multiplicity row", detail::join_sizes(published::MULTIPLICITIES.at(n)),
            detail::join_sizes(row));
  // Degree-6 cross-check with a second prime, flagging disagreement.
  if (n == 6 && opt.check_prime && opt.check_prime != opt.prime) {
    auto row2 = multiplicity_row(n, opt.check_prime, {}, opt.progress);
    rep.check("second-prime agreement (p=" + std::to_string(opt.check_prime) + ")",
              detail::join_sizes(row), detail::join_sizes(row2));
  }
  return rep;
}

inline RunReport run_special_search(int n, const RunOptions& opt = {}) {
  RunReport rep;
  rep.name = "special-search(" + std::to_string(n) + ")";
  rep.summary =
      "No-special-identities check: Malcev-consequence rank vs multiplicity, degree " +
      std::to_string(n);
  if (n < 3 || n > 6) {
    rep.check("degree supported", "3..6", std::to_string(n));
    return rep;
  }
  std::vector<std::size_t> ranks;
  for (const auto& shape : partitions(n)) {
    std::size_t r = malcev_consequence_rank(shape, n, opt.prime);
    if (opt.log) {
      std::string s = "partition";
      for (int part : shape) s += " " + std::to_string(part);
      opt.log(s + ": rank " + std::to_string(r));
    }
    ranks.push_back(r);
  }
  rep.value("ranks", detail::join_sizes(ranks));
  rep.check("ranks equal multiplicities", detail::join_sizes(published::MULTIPLICITIES.at(n)),
            detail::join_sizes(ranks));
  return rep;
}

inline RunReport run_triple3() {
  RunReport rep;
  rep.name = "triple3";
  rep.summary = "Degree-3 triple-system check: the 12 x 18 matrix and its RCF";
  auto r = check_degree3();
  rep.check_eq("rank", published::TRIPLE3_RANK, r.rank);
  rep.check_eq("extracted identities", std::size_t{0}, r.extracted);
  // Spot check the first RCF row's right part: (2/3, -1/3, 0, 0, 0, 0).
  std::vector<std::string> first;
  for (std::size_t j = 12; j < 18; ++j) first.push_back(r.rcf.at(0, j).get_str());
  std::string got;
  for (const auto& s : first) got += (got.empty() ? "" : " ") + s;
  rep.check("RCF row 1 right part", "2/3 -1/3 0 0 0 0", got);
  return rep;
}

inline RunReport run_triple5(const RunOptions& opt = {}) {
  RunReport rep;
  rep.name = "triple5";
  rep.summary = "Degree-5 triple-system check: the 4680 x 2040 matrix mod p";
  auto r = check_degree5(opt.prime ? opt.prime : 101, opt.progress);
  rep.check_eq("rank", published::TRIPLE5_RANK, r.rank);
  rep.check_eq("extracted identities", published::TRIPLE5_EXTRACTED, r.extracted);
  std::vector<std::size_t> indices, ranks;
  for (const auto& [i, rk] : r.progression_desc.steps) {
    indices.push_back(i);
    ranks.push_back(rk);
  }
  rep.value("progression indices", detail::join_sizes(indices));
  rep.value("progression ranks", detail::join_sizes(ranks));
  std::vector<std::size_t> alt_indices;
  for (const auto& [i, rk] : r.progression_asc.steps) {
    (void)rk;
    alt_indices.push_back(i);
  }
  rep.value("progression indices (ascending tie-break)", detail::join_sizes(alt_indices));
  rep.check("generator indices", detail::join_sizes(published::TRIPLE5_GENERATOR_INDICES),
            detail::join_sizes(indices));
  rep.check("generator ranks (derived)",
            detail::join_sizes(published::TRIPLE5_GENERATOR_RANKS_DERIVED),
            detail::join_sizes(ranks));
  rep.check_eq("final two generators span", published::TRIPLE5_SPAN, r.final_pair_span);
  rep.check_eq("defining-identity orbit span", published::TRIPLE5_SPAN, r.definition_span);
  return rep;
}

inline RunReport run_freedim(int k, int n) {
  RunReport rep;
  rep.name = "freedim(" + std::to_string(k) + "," + std::to_string(n) + ")";
  rep.summary = "Free right-anticommutative vs Leibniz dimensions";
  long long rac = free_rac_dimension(k, n);
  long long lei = leibniz_dimension(k, n);
  rep.value("free_rac_dimension", std::to_string(rac));
  rep.value("leibniz_dimension", std::to_string(lei));
  if (k == 2 && n == 3) {
    rep.check_eq("free_rac_dimension(2,3)", published::FREE_RAC_DIM_2_3, rac);
    rep.check_eq("leibniz_dimension(2,3)", published::LEIBNIZ_DIM_2_3, lei);
  }
  if (k == 1) rep.check_eq("one-generator dimension", 1ll, rac);
  return rep;
}

}  // namespace dimalg
