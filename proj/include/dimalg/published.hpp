// Embedded published values: the single source of truth shared by the CLI
// runs and the golden tests.
#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace dimalg::published {

// Binary association types K_n (Catalan) and dialgebra types Z_n = n K_n.
inline const std::vector<long long> K{0, 1, 1, 2, 5, 14, 42};
inline const std::vector<long long> Z{0, 1, 2, 6, 20, 70, 252};

// RAC association-type census R_n (orbits of binary types under
// x(yz) ~ x(zy)) and skew-symmetry counts W_n for degrees 3..6.
inline const std::vector<long long> R{0, 1, 1, 2, 4, 9, 20};
inline const std::map<int, long long> W{{3, 1}, {4, 3}, {5, 10}, {6, 28}};

// Alternative-dialgebra consequence counts A_n = 2^(n-6) (n+1)! for n >= 3
// and di-Malcev consequence counts D_n.
inline const std::map<int, long long> A{{3, 3}, {4, 30}, {5, 360}, {6, 5040}};
inline const std::map<int, long long> D{{4, 1}, {5, 6}, {6, 42}};

// Multilinear dimensions dim FD_n = Z_n * n!.
inline const std::map<int, long long> FD_DIM{{3, 36}, {4, 480}};

// Table of dicommutator-identity multiplicities per degree, partitions in
// lexicographically decreasing order.
inline const std::map<int, std::vector<std::size_t>> MULTIPLICITIES{
    {3, {1, 1, 0}},
    {4, {3, 8, 5, 6, 1}},
    {5, {8, 31, 38, 43, 35, 25, 5}},
    {6, {19, 94, 169, 185, 94, 294, 179, 90, 159, 84, 15}},
};

// Degree-3 monomial computation: 30 x 48 matrix, 3 extracted identities,
// denominator LCM 6.  Degree-4: 780 x 540 matrix, 20 extracted identities,
// the 24 x 60 di-Malcev permutation matrix has rank 20.
inline constexpr std::size_t DEGREE3_EXTRACTED = 3;
inline constexpr long DEGREE3_DENOMINATOR_LCM = 6;
inline constexpr std::size_t DEGREE4_EXTRACTED = 20;
inline constexpr std::size_t DIMALCEV_SPAN_RANK = 20;

// Free right-anticommutative algebra on two generators, degree 3.
inline constexpr long long FREE_RAC_DIM_2_3 = 10;
inline constexpr long long LEIBNIZ_DIM_2_3 = 8;

// Degree-5 triple-system computation: matrix 4680 x 2040 mod 101, rank 1820,
// 240 extracted identities.
inline constexpr std::size_t TRIPLE5_RANK = 1820;
inline constexpr std::size_t TRIPLE5_EXTRACTED = 240;
inline constexpr std::size_t TRIPLE5_SPAN = 240;

// Published generator progression for the degree-5 computation: identity
// indices as printed in the source table.  The printed rank column there
// (60, 140, 160, 160, 200, 240) is internally inconsistent — it repeats 160
// although the indices are described as exactly those that increase the
// rank, and no ordering of the extracted identities by nonzero count can
// reach rank 140 after the two-term identities (their whole orbit space has
// dimension 120).  The derived ranks below are the verified values attained
// at the published indices under the nonzero-count sort with ties broken by
// descending extraction position.
inline const std::vector<std::size_t> TRIPLE5_GENERATOR_INDICES{1, 41, 71, 111, 141, 143};
inline const std::vector<std::size_t> TRIPLE5_GENERATOR_RANKS_DERIVED{60, 120, 140, 160, 200, 240};

// Degree-3 triple check (the 12 x 18 matrix): rank 9, no extracted rows.
inline constexpr std::size_t TRIPLE3_RANK = 9;

}  // namespace dimalg::published
