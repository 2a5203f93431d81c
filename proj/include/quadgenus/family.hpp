#pragma once

// Product-of-families expressions such as "Q(2,4) x C(6) x P(4)".
//
//   expr := term ('x' term)*
//   term := K(int,int) | C(int) | P(int) | Q(int,int)
//
// Parsing only checks syntax; parameter validity is checked by build_family.

#include <boost/rational.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quadgenus/error.hpp"
#include "quadgenus/graph.hpp"

namespace quadgenus {

struct FamilyAtom {
  enum class Kind { complete_bipartite, cycle, path, cube };

  Kind kind{};
  int first = 0;
  int second = 0;  // only K and Q

  friend bool operator==(const FamilyAtom&, const FamilyAtom&) = default;
};

/// Product is associative, so the tree is stored as its left-to-right list of atoms.
struct FamilyExpr {
  std::vector<FamilyAtom> factors;

  friend bool operator==(const FamilyExpr&, const FamilyExpr&) = default;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  FamilyExpr parse() {
    FamilyExpr e;
    e.factors.push_back(term());
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != 'x' && text_[pos_] != 'X')
        throw ParseError(pos_, std::string("expected 'x' or end of input, found '") + text_[pos_] + "'");
      ++pos_;
      e.factors.push_back(term());
      skip_ws();
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, std::string("expected '") + c + "', found end of input");
    if (text_[pos_] != c)
      throw ParseError(pos_, std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::int64_t value = 0;
    const std::size_t digits_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == digits_start) throw ParseError(start, "expected integer");
    return static_cast<int>(negative ? -value : value);
  }

  FamilyAtom term() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "expected family atom, found end of input");
    FamilyAtom atom;
    const char c = text_[pos_];
    switch (c) {
      case 'K': atom.kind = FamilyAtom::Kind::complete_bipartite; break;
      case 'C': atom.kind = FamilyAtom::Kind::cycle; break;
      case 'P': atom.kind = FamilyAtom::Kind::path; break;
      case 'Q': atom.kind = FamilyAtom::Kind::cube; break;
      default: throw ParseError(pos_, std::string("unknown family '") + c + "'");
    }
    ++pos_;
    expect('(');
    atom.first = integer();
    if (atom.kind == FamilyAtom::Kind::complete_bipartite || atom.kind == FamilyAtom::Kind::cube) {
      expect(',');
      atom.second = integer();
    }
    expect(')');
    return atom;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FamilyExpr parse_family_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string to_string(const FamilyAtom& a) {
  switch (a.kind) {
    case FamilyAtom::Kind::complete_bipartite:
      return "K(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
    case FamilyAtom::Kind::cycle: return "C(" + std::to_string(a.first) + ")";
    case FamilyAtom::Kind::path: return "P(" + std::to_string(a.first) + ")";
    case FamilyAtom::Kind::cube:
      return "Q(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
  }
  return {};
}

inline std::string to_string(const FamilyExpr& e) {
  std::string out;
  for (std::size_t k = 0; k < e.factors.size(); ++k) {
    if (k) out += " x ";
    out += to_string(e.factors[k]);
  }
  return out;
}

inline Graph build_atom(const FamilyAtom& a) {
  switch (a.kind) {
    case FamilyAtom::Kind::complete_bipartite: return make_complete_bipartite(a.first, a.second);
    case FamilyAtom::Kind::cycle: return make_cycle(a.first);
    case FamilyAtom::Kind::path: return make_path(a.first);
    case FamilyAtom::Kind::cube: {
      require(a.first >= 1, ErrorKind::invalid_parameter, "Q(i,t) needs i >= 1");
      Graph k = make_complete_bipartite(a.second, a.second);
      Graph g = k;
      for (int step = 1; step < a.first; ++step) g = cartesian_product(g, k);
      return g;
    }
  }
  fail(ErrorKind::internal, "unknown atom kind");
}

/// Left fold of the Cartesian product over the atoms.
inline Graph build_family(const FamilyExpr& e) {
  require(!e.factors.empty(), ErrorKind::invalid_parameter, "empty family expression");
  Graph g = build_atom(e.factors.front());
  for (std::size_t k = 1; k < e.factors.size(); ++k) g = cartesian_product(g, build_atom(e.factors[k]));
  return g;
}

inline Graph build_family(std::string_view text) { return build_family(parse_family_expr(text)); }

using Rational = boost::rational<std::int64_t>;

/// Parameters of the cube-times-cycles/paths families. m_list holds the m
/// values of the C(2m) or P(2m) factors.
struct FamilyParams {
  int i = 1;
  int r = 1;
  std::vector<int> m_list;

  int j() const { return static_cast<int>(m_list.size()); }

  std::int64_t product_m() const {
    std::int64_t p = 1;
    for (int m : m_list) p *= m;
    return p;
  }

  Rational inverse_sum() const {
    Rational s(0);
    for (int m : m_list) s += Rational(1, m);
    return s;
  }
};

}  // namespace quadgenus
