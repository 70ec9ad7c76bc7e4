// Small identity DSL.
//
//   poly     := term (('+'|'-') term)*
//   term     := [integer] monomial
//   monomial := var | 'M(' m ',' m ')' | 'L(' m ',' m ')' | 'R(' m ',' m ')'
//             | 'T(' m ',' m ',' m ')'
//   var      := 'a'..'z'
//
// One identity per line, optional "name:" prefix, whitespace insignificant,
// '#' starts a comment.  M is the single binary operation, L/R the dialgebra
// products -| and |-, T the trilinear operation.  Every identity must be
// multilinear with variables contiguous from 'a'.
#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dimalg/poly.hpp"
#include "dimalg/tree.hpp"

namespace dimalg {

enum class Signature { Single, Dialgebra, Trilinear };

inline std::string signature_name(Signature s) {
  switch (s) {
    case Signature::Single: return "single";
    case Signature::Dialgebra: return "dialgebra";
    case Signature::Trilinear: return "trilinear";
  }
  return "?";
}

struct NamedIdentity {
  std::string name;  // may be empty
  Poly poly;
  int degree = 0;
};

struct IdentityDocument {
  Signature signature = Signature::Single;
  std::vector<NamedIdentity> identities;
};

struct DslError : std::runtime_error {
  int line, col;
  DslError(int l, int c, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg),
        line(l),
        col(c) {}
};

namespace detail {
class LineParser {
 public:
  LineParser(const std::string& s, int lineno) : s_(s), line_(lineno) {}

  Poly parse_poly(bool& saw_dialgebra, bool& saw_trilinear, bool& saw_single) {
    Poly p;
    skip_ws();
    long long sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (get() == '-') sign = -1;
    }
    parse_term(p, sign, saw_dialgebra, saw_trilinear, saw_single);
    skip_ws();
    while (pos_ < s_.size()) {
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      parse_term(p, op == '-' ? -1 : 1, saw_dialgebra, saw_trilinear, saw_single);
      skip_ws();
    }
    return p;
  }

 private:
  void parse_term(Poly& p, long long sign, bool& saw_dialgebra, bool& saw_trilinear,
                  bool& saw_single) {
    skip_ws();
    long long coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) coeff = coeff * 10 + (get() - '0');
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
      }
    }
    TreeId m = parse_monomial(saw_dialgebra, saw_trilinear, saw_single);
    check_multilinear(m);
    add_term(p, m, sign * coeff);
  }

  TreeId parse_monomial(bool& saw_dialgebra, bool& saw_trilinear, bool& saw_single) {
    skip_ws();
    char c = peek();
    if (c >= 'a' && c <= 'z') {
      get();
      return leaf(c - 'a' + 1);
    }
    if (c == 'M' || c == 'L' || c == 'R') {
      get();
      if (c == 'M')
        saw_single = true;
      else
        saw_dialgebra = true;
      expect('(');
      TreeId x = parse_monomial(saw_dialgebra, saw_trilinear, saw_single);
      expect(',');
      TreeId y = parse_monomial(saw_dialgebra, saw_trilinear, saw_single);
      expect(')');
      Op op = c == 'M' ? Op::Mul : (c == 'L' ? Op::Dashv : Op::Vdash);
      return node(op, x, y);
    }
    if (c == 'T') {
      get();
      saw_trilinear = true;
      expect('(');
      TreeId x = parse_monomial(saw_dialgebra, saw_trilinear, saw_single);
      expect(',');
      TreeId y = parse_monomial(saw_dialgebra, saw_trilinear, saw_single);
      expect(',');
      TreeId z = parse_monomial(saw_dialgebra, saw_trilinear, saw_single);
      expect(')');
      return tri(x, y, z);
    }
    fail(pos_ >= s_.size() ? "unexpected end of line" : std::string("unexpected character '") + c + "'");
    return -1;  // unreachable
  }

  void check_multilinear(TreeId m) {
    std::vector<int> ls = leaves(m);
    std::vector<bool> seen(27, false);
    int mx = 0;
    for (int v : ls) {
      if (seen[static_cast<std::size_t>(v)])
        fail(std::string("repeated variable '") + static_cast<char>('a' + v - 1) + "' in monomial");
      seen[static_cast<std::size_t>(v)] = true;
      mx = std::max(mx, v);
    }
    for (int v = 1; v <= mx; ++v)
      if (!seen[static_cast<std::size_t>(v)])
        fail(std::string("variables not contiguous from 'a': missing '") +
             static_cast<char>('a' + v - 1) + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() {
    if (pos_ >= s_.size()) fail("unexpected end of line");
    return s_[pos_++];
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw DslError(line_, static_cast<int>(pos_) + 1, msg);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
};
}  // namespace detail

inline IdentityDocument parse_identities(const std::string& text) {
  IdentityDocument doc;
  bool saw_dialgebra = false, saw_trilinear = false, saw_single = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = raw;
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    // Optional "name:" prefix.
    std::string name;
    if (auto colon = s.find(':'); colon != std::string::npos) {
      name = s.substr(0, colon);
      // trim
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      s.erase(0, colon + 1);
    }
    bool blank = true;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    detail::LineParser lp(s, lineno);
    Poly p = lp.parse_poly(saw_dialgebra, saw_trilinear, saw_single);
    int deg = p.empty() ? 0 : degree(p.begin()->first);
    for (const auto& [m, c] : p) {
      (void)c;
      if (degree(m) != deg) throw DslError(lineno, 1, "terms of unequal degree");
      if (!is_multilinear(m, deg)) throw DslError(lineno, 1, "identity is not multilinear");
    }
    doc.identities.push_back({name, std::move(p), deg});
  }
  if (saw_trilinear && (saw_dialgebra || saw_single))
    throw DslError(lineno, 1, "mixed signatures: trilinear with binary operations");
  if (saw_trilinear)
    doc.signature = Signature::Trilinear;
  else if (saw_dialgebra)
    doc.signature = Signature::Dialgebra;
  else
    doc.signature = Signature::Single;
  return doc;
}

inline std::string render_dsl(TreeId t) {
  const TreeNode& n = tree(t);
  switch (n.op) {
    case Op::Leaf: return std::string(1, static_cast<char>('a' + n.a - 1));
    case Op::Mul: return "M(" + render_dsl(n.a) + "," + render_dsl(n.b) + ")";
    case Op::Dashv: return "L(" + render_dsl(n.a) + "," + render_dsl(n.b) + ")";
    case Op::Vdash: return "R(" + render_dsl(n.a) + "," + render_dsl(n.b) + ")";
    case Op::Tri:
      return "T(" + render_dsl(n.a) + "," + render_dsl(n.b) + "," + render_dsl(n.c) + ")";
    default: throw std::invalid_argument("render_dsl: unsupported operation");
  }
}

inline std::string render_dsl(const Poly& p) {
  std::string out;
  for (const auto& [m, c] : p) {
    std::string cs = std::to_string(c < 0 ? -c : c);
    if (out.empty()) {
      if (c < 0) out += "- ";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (cs != "1") out += cs + " ";
    out += render_dsl(m);
  }
  return out.empty() ? "0" : out;
}

inline std::string render_dsl(const IdentityDocument& doc) {
  std::string out;
  for (const auto& id : doc.identities) {
    if (!id.name.empty()) out += id.name + ": ";
    out += render_dsl(id.poly);
    out += '\n';
  }
  return out;
}

}  // namespace dimalg
