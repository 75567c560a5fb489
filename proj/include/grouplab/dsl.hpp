// Group-expression DSL: parse, print, realize.
//
//   expr   := term ( "x" term )*
//   term   := named | semidirect | "(" expr ")"
//   named  := ("C"|"D"|"Q"|"S"|"A") int | "E(" int "," int ")" | "Heis(" int ")"
//           | "SL2(" int ")" | "GL2(" int ")"
//   semidirect := "sd(" expr "," expr "," matrix ")"
//   matrix := "[" row ("," row)* "]" ;  row := "[" int ("," int)* "]"
//
// Whitespace-insensitive.  The semidirect action matrix lists generator
// images by columns: image of the j-th normal generator is prod_i gen_i^{M[i][j]}.

#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "core.hpp"

namespace grouplab {

struct SyntaxError : Error {
  size_t position;
  SyntaxError(size_t pos, const std::string& expected)
      : Error("syntax error at position " + std::to_string(pos) + ": expected " + expected),
        position(pos) {}
};

struct RangeError : Error {
  size_t position;
  RangeError(size_t pos, const std::string& msg)
      : Error("range error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

enum class Family { C, D, Q, S, A, E, Heis, SL2, GL2 };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::Q: return "Q";
    case Family::S: return "S";
    case Family::A: return "A";
    case Family::E: return "E";
    case Family::Heis: return "Heis";
    case Family::SL2: return "SL2";
    case Family::GL2: return "GL2";
  }
  return "?";
}

struct GroupSpec {
  enum class Kind { Named, Product, Semidirect };

  Kind kind = Kind::Named;
  Family family = Family::C;                     // Named
  std::vector<long> params;                      // Named
  std::shared_ptr<const GroupSpec> left, right;  // Product; Semidirect normal/acting
  std::vector<std::vector<int>> matrix;          // Semidirect

  static GroupSpec named(Family f, std::vector<long> params) {
    GroupSpec s;
    s.kind = Kind::Named;
    s.family = f;
    s.params = std::move(params);
    return s;
  }
  static GroupSpec product(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = Kind::Product;
    s.left = std::make_shared<GroupSpec>(std::move(a));
    s.right = std::make_shared<GroupSpec>(std::move(b));
    return s;
  }
  static GroupSpec semidirect(GroupSpec normal, GroupSpec acting, std::vector<std::vector<int>> m) {
    GroupSpec s;
    s.kind = Kind::Semidirect;
    s.left = std::make_shared<GroupSpec>(std::move(normal));
    s.right = std::make_shared<GroupSpec>(std::move(acting));
    s.matrix = std::move(m);
    return s;
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Named: return a.family == b.family && a.params == b.params;
      case Kind::Product: return *a.left == *b.left && *a.right == *b.right;
      case Kind::Semidirect:
        return *a.left == *b.left && *a.right == *b.right && a.matrix == b.matrix;
    }
    return false;
  }
  friend bool operator!=(const GroupSpec& a, const GroupSpec& b) { return !(a == b); }
};

// PARSER

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input");
    return s;
  }

 private:
  GroupSpec parse_expr() {
    GroupSpec s = parse_term();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'x') {
        ++pos_;
        s = GroupSpec::product(std::move(s), parse_term());
      } else {
        break;
      }
    }
    return s;
  }

  GroupSpec parse_term() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "group expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GroupSpec s = parse_expr();
      expect(')');
      return s;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) throw SyntaxError(pos_, "group expression");

    size_t word_pos = pos_;
    std::string word = read_letters();
    if (word == "sd") return parse_semidirect();
    if (word == "E") {
      expect('(');
      auto [p, ppos] = parse_uint();
      if (!is_prime(p)) throw RangeError(ppos, "E(p,k) needs p prime");
      expect(',');
      auto [k, kpos] = parse_uint();
      if (k < 1) throw RangeError(kpos, "E(p,k) needs k >= 1");
      expect(')');
      return GroupSpec::named(Family::E, {p, k});
    }
    if (word == "Heis") {
      expect('(');
      auto [p, ppos] = parse_uint();
      if (!is_prime(p) || p == 2) throw RangeError(ppos, "Heis(p) needs p an odd prime");
      expect(')');
      return GroupSpec::named(Family::Heis, {p});
    }
    if (word == "SL" || word == "GL") {
      if (pos_ >= text_.size() || text_[pos_] != '2') throw SyntaxError(pos_, word + "2(");
      ++pos_;
      expect('(');
      auto [p, ppos] = parse_uint();
      if (!is_prime(p) || p > 31) throw RangeError(ppos, word + "2(p) needs p prime and p <= 31");
      expect(')');
      return GroupSpec::named(word == "SL" ? Family::SL2 : Family::GL2, {p});
    }
    if (word.size() == 1) {
      auto [n, npos] = parse_uint();
      switch (word[0]) {
        case 'C':
          if (n < 1) throw RangeError(npos, "C n needs n >= 1");
          return GroupSpec::named(Family::C, {n});
        case 'D':
          if (n < 3) throw RangeError(npos, "D n needs n >= 3");
          return GroupSpec::named(Family::D, {n});
        case 'Q': {
          long m = n;
          while (m > 1 && m % 2 == 0) m /= 2;
          if (m != 1 || n < 8) throw RangeError(npos, "Q n needs n a power of two, n >= 8");
          return GroupSpec::named(Family::Q, {n});
        }
        case 'S':
          if (n < 1) throw RangeError(npos, "S n needs n >= 1");
          return GroupSpec::named(Family::S, {n});
        case 'A':
          if (n < 1) throw RangeError(npos, "A n needs n >= 1");
          return GroupSpec::named(Family::A, {n});
        default: break;
      }
    }
    throw SyntaxError(word_pos, "family name (C, D, Q, S, A, E, Heis, SL2, GL2) or sd(");
  }

  GroupSpec parse_semidirect() {
    expect('(');
    GroupSpec normal = parse_expr();
    expect(',');
    GroupSpec acting = parse_expr();
    expect(',');
    std::vector<std::vector<int>> m = parse_matrix();
    expect(')');
    return GroupSpec::semidirect(std::move(normal), std::move(acting), std::move(m));
  }

  std::vector<std::vector<int>> parse_matrix() {
    expect('[');
    std::vector<std::vector<int>> rows;
    rows.push_back(parse_row());
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        rows.push_back(parse_row());
      } else {
        break;
      }
    }
    expect(']');
    return rows;
  }

  std::vector<int> parse_row() {
    expect('[');
    std::vector<int> row;
    row.push_back(static_cast<int>(parse_int().first));
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        row.push_back(static_cast<int>(parse_int().first));
      } else {
        break;
      }
    }
    expect(']');
    return row;
  }

  std::pair<long, size_t> parse_int() {
    skip_ws();
    size_t start = pos_;
    bool neg = pos_ < text_.size() && text_[pos_] == '-';
    if (neg) ++pos_;
    auto [v, p] = parse_uint();
    return {neg ? -v : v, start};
  }

  std::pair<long, size_t> parse_uint() {
    skip_ws();
    size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError(pos_, "integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) throw RangeError(start, "integer too large");
      ++pos_;
    }
    return {v, start};
  }

  std::string read_letters() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw SyntaxError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline GroupSpec parse_group_expr(const std::string& text) {
  return detail::ExprParser(text).parse();
}

// PRINTER

inline std::string print_group_spec(const GroupSpec& s) {
  switch (s.kind) {
    case GroupSpec::Kind::Named: {
      std::string name = family_name(s.family);
      switch (s.family) {
        case Family::E:
          return name + "(" + std::to_string(s.params[0]) + "," + std::to_string(s.params[1]) + ")";
        case Family::Heis:
        case Family::SL2:
        case Family::GL2: return name + "(" + std::to_string(s.params[0]) + ")";
        default: return name + std::to_string(s.params[0]);
      }
    }
    case GroupSpec::Kind::Product: {
      std::string l = print_group_spec(*s.left);
      std::string r = print_group_spec(*s.right);
      // products parse left-associatively; a product on the right needs parens
      if (s.right->kind == GroupSpec::Kind::Product) r = "(" + r + ")";
      return l + " x " + r;
    }
    case GroupSpec::Kind::Semidirect: {
      std::string m = "[";
      for (size_t i = 0; i < s.matrix.size(); ++i) {
        if (i) m += ",";
        m += "[";
        for (size_t j = 0; j < s.matrix[i].size(); ++j) {
          if (j) m += ",";
          m += std::to_string(s.matrix[i][j]);
        }
        m += "]";
      }
      m += "]";
      return "sd(" + print_group_spec(*s.left) + ", " + print_group_spec(*s.right) + ", " + m + ")";
    }
  }
  return "";
}

// REALIZATION

namespace detail {

// flattens a spec denoting a direct product of cyclic groups, or fails
inline void cyclic_moduli(const GroupSpec& s, std::vector<int>& out) {
  if (s.kind == GroupSpec::Kind::Product) {
    cyclic_moduli(*s.left, out);
    cyclic_moduli(*s.right, out);
    return;
  }
  if (s.kind == GroupSpec::Kind::Named) {
    if (s.family == Family::C) {
      out.push_back(static_cast<int>(s.params[0]));
      return;
    }
    if (s.family == Family::E) {
      for (long i = 0; i < s.params[1]; ++i) out.push_back(static_cast<int>(s.params[0]));
      return;
    }
  }
  throw InvalidAction("semidirect normal part must be a direct product of cyclic groups, got " +
                      print_group_spec(s));
}

inline int cyclic_order(const GroupSpec& s) {
  if (s.kind == GroupSpec::Kind::Named) {
    if (s.family == Family::C) return static_cast<int>(s.params[0]);
    if (s.family == Family::E && s.params[1] == 1) return static_cast<int>(s.params[0]);
  }
  throw InvalidAction("semidirect acting part must be cyclic, got " + print_group_spec(s));
}

inline int primitive_root(int p) {
  if (p == 2) return 1;
  auto factors = factorize(p - 1);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (auto& [q, e] : factors) {
      long r = 1, b = g, exp = (p - 1) / q;
      while (exp > 0) {
        if (exp & 1) r = r * b % p;
        b = b * b % p;
        exp >>= 1;
      }
      if (r == 1) { ok = false; break; }
    }
    if (ok) return g;
  }
  internal_fail("no primitive root mod " + std::to_string(p));
}

inline std::vector<std::vector<int>> symmetric_generators(int n) {
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    std::swap(t[0], t[1]);
    gens.push_back(t);
  }
  if (n >= 3) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
  }
  return gens;
}

inline std::vector<std::vector<int>> alternating_generators(int n) {
  std::vector<std::vector<int>> gens;
  if (n < 3) return gens;
  std::vector<int> t3(n);
  for (int i = 0; i < n; ++i) t3[i] = i;
  t3[0] = 1; t3[1] = 2; t3[2] = 0;
  gens.push_back(t3);
  if (n >= 4) {
    std::vector<int> c(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    } else {
      c[0] = 0;
      for (int i = 1; i < n; ++i) c[i] = i % (n - 1) + 1;
    }
    gens.push_back(c);
  }
  return gens;
}

}  // namespace detail

inline FiniteGroup realize(const GroupSpec& s, uint64_t element_budget = kDefaultElementBudget) {
  switch (s.kind) {
    case GroupSpec::Kind::Named: {
      int n = static_cast<int>(s.params[0]);
      switch (s.family) {
        case Family::C:
          return FiniteGroup::enumerate(std::make_shared<AbelianBackend>(std::vector<int>{n}),
                                        element_budget);
        case Family::D: {
          std::vector<int> rot(n), refl(n);
          for (int i = 0; i < n; ++i) {
            rot[i] = (i + 1) % n;
            refl[i] = (n - i) % n;
          }
          return FiniteGroup::enumerate(
              std::make_shared<PermutationBackend>(n, std::vector<std::vector<int>>{rot, refl}),
              element_budget);
        }
        case Family::Q:
          return FiniteGroup::enumerate(std::make_shared<DicyclicBackend>(n / 4), element_budget);
        case Family::S:
          return FiniteGroup::enumerate(
              std::make_shared<PermutationBackend>(n, detail::symmetric_generators(n)),
              element_budget);
        case Family::A:
          return FiniteGroup::enumerate(
              std::make_shared<PermutationBackend>(n, detail::alternating_generators(n)),
              element_budget);
        case Family::E: {
          std::vector<int> moduli(s.params[1], static_cast<int>(s.params[0]));
          return FiniteGroup::enumerate(std::make_shared<AbelianBackend>(std::move(moduli)),
                                        element_budget);
        }
        case Family::Heis:
          return FiniteGroup::enumerate(std::make_shared<HeisenbergBackend>(n), element_budget);
        case Family::SL2:
          return FiniteGroup::enumerate(
              std::make_shared<MatrixBackend>(
                  n, 2, std::vector<std::vector<int>>{{1, 1, 0, 1}, {1, 0, 1, 1}}, true),
              element_budget);
        case Family::GL2: {
          int g = detail::primitive_root(n);
          return FiniteGroup::enumerate(
              std::make_shared<MatrixBackend>(
                  n, 2, std::vector<std::vector<int>>{{1, 1, 0, 1}, {1, 0, 1, 1}, {g, 0, 0, 1}},
                  false),
              element_budget);
        }
      }
      internal_fail("unhandled family");
    }
    case GroupSpec::Kind::Product: {
      FiniteGroup l = realize(*s.left, element_budget);
      FiniteGroup r = realize(*s.right, element_budget);
      return direct_product(l, r, element_budget);
    }
    case GroupSpec::Kind::Semidirect: {
      std::vector<int> moduli;
      detail::cyclic_moduli(*s.left, moduli);
      int k = detail::cyclic_order(*s.right);
      return FiniteGroup::enumerate(std::make_shared<SemidirectBackend>(moduli, k, s.matrix),
                                    element_budget);
    }
  }
  internal_fail("unhandled spec kind");
}

inline FiniteGroup realize(const std::string& expr, uint64_t element_budget = kDefaultElementBudget) {
  return realize(parse_group_expr(expr), element_budget);
}

}  // namespace grouplab
