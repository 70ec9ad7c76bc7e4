// Interned tree terms for nonassociative / dialgebra / ternary monomials.
//
// Every tree lives in a process-wide arena and is identified by a small
// integer id, so monomials can be used as cheap map keys and structural
// equality is pointer equality.  Leaves carry a variable index (1-based;
// 0 denotes the unlabeled leaf used in association-type "shapes").
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dimalg {

enum class Op : std::uint8_t {
  Leaf,   // variable
  Mul,    // single binary operation (juxtaposition)
  Dashv,  // dialgebra left product  a -| b
  Vdash,  // dialgebra right product a |- b
  Sub1,   // subscripted operation {,}_1 (Kolesnikov intermediate)
  Sub2,   // subscripted operation {,}_2 (Kolesnikov intermediate)
  Tri,    // trilinear operation <a,b,c>
};

using TreeId = std::int32_t;

struct TreeNode {
  Op op;
  std::int32_t a;  // leaf: variable index; otherwise first child
  std::int32_t b;  // second child, or -1
  std::int32_t c;  // third child (Tri only), or -1
};

class TreeArena {
 public:
  TreeId leaf(int var) { return intern({Op::Leaf, var, -1, -1}); }

  TreeId node(Op op, TreeId l, TreeId r) {
    if (op == Op::Leaf || op == Op::Tri) throw std::invalid_argument("node: bad op");
    return intern({op, l, r, -1});
  }

  TreeId tri(TreeId x, TreeId y, TreeId z) { return intern({Op::Tri, x, y, z}); }

  // Returned by value: interning during a traversal may reallocate the node
  // vector, so references into it must not be held across construction calls.
  TreeNode get(TreeId t) const { return nodes_[static_cast<std::size_t>(t)]; }

  static TreeArena& instance() {
    static TreeArena arena;
    return arena;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::array<std::int32_t, 4>& k) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : k) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  TreeId intern(const TreeNode& n) {
    std::array<std::int32_t, 4> key{static_cast<std::int32_t>(n.op), n.a, n.b, n.c};
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    TreeId id = static_cast<TreeId>(nodes_.size());
    nodes_.push_back(n);
    index_.emplace(key, id);
    return id;
  }

  std::vector<TreeNode> nodes_;
  std::unordered_map<std::array<std::int32_t, 4>, TreeId, KeyHash> index_;
};

inline TreeId leaf(int var) { return TreeArena::instance().leaf(var); }
inline TreeId node(Op op, TreeId l, TreeId r) { return TreeArena::instance().node(op, l, r); }
inline TreeId mul(TreeId l, TreeId r) { return node(Op::Mul, l, r); }
inline TreeId tri(TreeId x, TreeId y, TreeId z) { return TreeArena::instance().tri(x, y, z); }
inline TreeNode tree(TreeId t) { return TreeArena::instance().get(t); }
inline bool is_leaf(TreeId t) { return tree(t).op == Op::Leaf; }
inline Op op_of(TreeId t) { return tree(t).op; }

inline int degree(TreeId t) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return 1;
  int d = degree(n.a) + degree(n.b);
  if (n.op == Op::Tri) d += degree(n.c);
  return d;
}

inline void collect_leaves(TreeId t, std::vector<int>& out) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) {
    out.push_back(n.a);
    return;
  }
  collect_leaves(n.a, out);
  collect_leaves(n.b, out);
  if (n.op == Op::Tri) collect_leaves(n.c, out);
}

inline std::vector<int> leaves(TreeId t) {
  std::vector<int> out;
  collect_leaves(t, out);
  return out;
}

// Applies a variable relabeling: perm[v] is the new label of variable v
// (index 0 unused).
inline TreeId relabel(TreeId t, const std::vector<int>& perm) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return leaf(perm[static_cast<std::size_t>(n.a)]);
  if (n.op == Op::Tri) return tri(relabel(n.a, perm), relabel(n.b, perm), relabel(n.c, perm));
  return node(n.op, relabel(n.a, perm), relabel(n.b, perm));
}

// Replaces every leaf with variable index `var` by the tree `repl`.
inline TreeId subst_leaf(TreeId t, int var, TreeId repl) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return n.a == var ? repl : t;
  if (n.op == Op::Tri)
    return tri(subst_leaf(n.a, var, repl), subst_leaf(n.b, var, repl), subst_leaf(n.c, var, repl));
  return node(n.op, subst_leaf(n.a, var, repl), subst_leaf(n.b, var, repl));
}

// The association type of a monomial: same tree with all leaves unlabeled.
inline TreeId shape_of(TreeId t) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf) return leaf(0);
  if (n.op == Op::Tri) return tri(shape_of(n.a), shape_of(n.b), shape_of(n.c));
  return node(n.op, shape_of(n.a), shape_of(n.b));
}

// Labels the leaves of a shape left to right with the given word.
inline TreeId with_word(TreeId shape, const std::vector<int>& word) {
  std::size_t pos = 0;
  std::function<TreeId(TreeId)> go = [&](TreeId t) -> TreeId {
    const TreeNode& n = tree(t);
    if (n.op == Op::Leaf) return leaf(word.at(pos++));
    if (n.op == Op::Tri) {
      TreeId x = go(n.a), y = go(n.b), z = go(n.c);
      return tri(x, y, z);
    }
    TreeId l = go(n.a), r = go(n.b);
    return node(n.op, l, r);
  };
  TreeId out = go(shape);
  if (pos != word.size()) throw std::invalid_argument("with_word: degree mismatch");
  return out;
}

// Compact paper-style rendering: leaves a..z, juxtaposition for Mul,
// infix -| and |- for the dialgebra products, <x,y,z> for Tri,
// {x,y}_1 / {x,y}_2 for the subscripted operations.
inline std::string render(TreeId t) {
  const TreeNode& n = tree(t);
  if (n.op == Op::Leaf)
    return n.a > 0 ? std::string(1, static_cast<char>('a' + n.a - 1)) : std::string("*");
  auto part = [](TreeId c) {
    std::string s = render(c);
    if (!is_leaf(c) && op_of(c) != Op::Tri) s = "(" + s + ")";
    return s;
  };
  switch (n.op) {
    case Op::Mul: return part(n.a) + part(n.b);
    case Op::Dashv: return part(n.a) + "-|" + part(n.b);
    case Op::Vdash: return part(n.a) + "|-" + part(n.b);
    case Op::Sub1: return "{" + render(n.a) + "," + render(n.b) + "}_1";
    case Op::Sub2: return "{" + render(n.a) + "," + render(n.b) + "}_2";
    case Op::Tri: return "<" + render(n.a) + "," + render(n.b) + "," + render(n.c) + ">";
    default: throw std::logic_error("render: bad op");
  }
}

// ---------------------------------------------------------------------------
// Permutations of S_n, lexicographic by image word; perm[0] = 0 is unused.
// ---------------------------------------------------------------------------
inline std::vector<std::vector<int>> perms_lex(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i) + 1] = w[static_cast<std::size_t>(i)];
    out.push_back(p);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lexicographic (Lehmer) rank of a permutation word of 1..n.
inline int lehmer_rank(const std::vector<int>& word) {
  int n = static_cast<int>(word.size());
  std::vector<int> rest;
  for (int i = 1; i <= n; ++i) rest.push_back(i);
  long long r = 0;
  for (int i = 0; i < n; ++i) {
    auto it = std::find(rest.begin(), rest.end(), word[static_cast<std::size_t>(i)]);
    r += (it - rest.begin()) * factorial(n - 1 - i);
    rest.erase(it);
  }
  return static_cast<int>(r);
}

}  // namespace dimalg
