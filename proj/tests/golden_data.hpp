// Frozen reference data shared by the unit tests and the acceptance checks.
#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace golden {

// Sign patterns of the degree-3 identity matrix A (18 x 36: three defining
// identities by six permutations each) over the 36 dialgebra monomials
// (six types by six words, lexicographic).  '+' = 1, '-' = -1, '.' = 0.
inline const std::vector<std::string> kDegree3A{
    "+.......+.........-.......-.........",
    ".+........+........-........-.......",
    "..+...+.............-...-...........",
    "...+.......+.........-.......-......",
    "....+..+..............-..-..........",
    ".....+...+.............-...-........",
    "++................--................",
    "++................--................",
    "..++................--..............",
    "..++................--..............",
    "....++................--............",
    "....++................--............",
    "......+......+..........-......-....",
    ".......+....+............-....-.....",
    "........+......+..........-......-..",
    ".........+....+............-....-...",
    "..........+......+..........-......-",
    "...........+....+............-....-."};

// Sign patterns of the degree-3 expansion matrix E (12 x 36: two binary
// types by six words each).
inline const std::vector<std::string> kDegree3E{
    "+.......-...................-......+",
    ".+........-...............-......+..",
    "..+...-......................-....+.",
    "...+.......-............-......+....",
    "....+..-...................-....+...",
    ".....+...-...............-....+.....",
    "...............-.++-................",
    "...............+.--+................",
    ".............-..+...+-..............",
    ".............+..-...-+..............",
    "............-.+.......+-............",
    "............+.-.......-+............"};

inline int sign_of(char c) { return c == '+' ? 1 : c == '-' ? -1 : 0; }

// The 60-element degree-4 basis of the free right-anticommutative algebra,
// in canonical order: types outer, words lexicographic.
inline const std::vector<std::string> kDegree4Basis{
    "((ab)c)d", "((ab)d)c", "((ac)b)d", "((ac)d)b", "((ad)b)c", "((ad)c)b",
    "((ba)c)d", "((ba)d)c", "((bc)a)d", "((bc)d)a", "((bd)a)c", "((bd)c)a",
    "((ca)b)d", "((ca)d)b", "((cb)a)d", "((cb)d)a", "((cd)a)b", "((cd)b)a",
    "((da)b)c", "((da)c)b", "((db)a)c", "((db)c)a", "((dc)a)b", "((dc)b)a",
    "(a(bc))d", "(a(bd))c", "(a(cd))b", "(b(ac))d", "(b(ad))c", "(b(cd))a",
    "(c(ab))d", "(c(ad))b", "(c(bd))a", "(d(ab))c", "(d(ac))b", "(d(bc))a",
    "(ab)(cd)", "(ac)(bd)", "(ad)(bc)", "(ba)(cd)", "(bc)(ad)", "(bd)(ac)",
    "(ca)(bd)", "(cb)(ad)", "(cd)(ab)", "(da)(bc)", "(db)(ac)", "(dc)(ab)",
    "a((bc)d)", "a((bd)c)", "a((cd)b)", "b((ac)d)", "b((ad)c)", "b((cd)a)",
    "c((ab)d)", "c((ad)b)", "c((bd)a)", "d((ab)c)", "d((ac)b)", "d((bc)a)"};

// The published 12 x 18 triple-system matrix of degree 3.
inline const int kTriple3Matrix[12][18] = {
    {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
    {2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {1, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 1, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1}};

// The nine nonzero rows of its published row canonical form.
inline std::vector<std::vector<mpq_class>> triple3_rcf() {
  std::vector<std::vector<mpq_class>> want(9, std::vector<mpq_class>(18, 0));
  for (int k = 0; k < 3; ++k) {
    int r = 2 * k;
    want[r][2 * k] = 1;
    want[r][7 + 2 * k] = -1;
    want[r][12 + 2 * k] = mpq_class(2, 3);
    want[r][13 + 2 * k] = mpq_class(-1, 3);
    want[r + 1][2 * k + 1] = 1;
    want[r + 1][7 + 2 * k] = 1;
    want[r + 1][12 + 2 * k] = mpq_class(-1, 3);
    want[r + 1][13 + 2 * k] = mpq_class(2, 3);
    want[6 + k][6 + 2 * k] = 1;
    want[6 + k][7 + 2 * k] = 1;
  }
  return want;
}

}  // namespace golden
