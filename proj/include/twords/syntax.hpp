#pragma once

// Text grammars.
//
//   ordinal  := term ("+" term)*
//   term     := "w" ("^" "(" ordinal ")" | "^" nat)? ("*" nat)? | nat
//   product  := "eps" | atom*
//   atom     := "[" set-expr "]" "^{<" ordinal "}"
//   union    := "empty" | product ("|" product)*
//   word     := "eps" | comp*
//   comp     := point | "(" set-expr ")" "^" ("(" ordinal ")" | term)
//   set-expr := point ("," point)* | "*"
//
// Space files hold `key: value` lines (`#` starts a comment):
//
//   kind: finite_poset          # or cofinite_nat
//   elements: a, b, c
//   order: a <= c, b <= c       # chains like a <= b <= c are accepted

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twords/error.hpp"
#include "twords/ordinal.hpp"
#include "twords/product.hpp"
#include "twords/space.hpp"
#include "twords/word.hpp"

namespace twords {

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  /// Consumes `token` if the input continues with it.
  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  /// Consumes `word` only when it is not followed by an identifier character.
  bool accept_keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && is_ident(text_[end])) return false;
    pos_ = end;
    return true;
  }
  std::uint64_t nat() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }
  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t position() const { return offset_ + pos_; }

  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) { throw parse_error(what, offset_ + at); }

  static bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

namespace detail {

inline Ordinal parse_ordinal(Cursor& in);

inline Ordinal parse_term(Cursor& in) {
  if (std::isdigit(static_cast<unsigned char>(in.peek()))) return Ordinal::finite(in.nat());
  if (!in.accept_keyword("w")) in.fail("expected an ordinal term");
  Ordinal exponent = Ordinal::finite(1);
  if (in.accept("^")) {
    if (in.accept("(")) {
      exponent = parse_ordinal(in);
      in.expect(")");
    } else {
      exponent = Ordinal::finite(in.nat());
    }
  }
  std::uint64_t coefficient = 1;
  if (in.accept("*")) coefficient = in.nat();
  if (coefficient == 0) return Ordinal{};
  return Ordinal::from_terms({{exponent, coefficient}});
}

inline Ordinal parse_ordinal(Cursor& in) {
  Ordinal r = parse_term(in);
  while (in.accept("+")) r = r + parse_term(in);
  return r;
}

/// Set expression up to (not including) the closing delimiter. An empty
/// list denotes the empty set.
inline ClosedSet parse_set_expr(Cursor& in, const SpacePtr& space, char close) {
  if (in.accept("*")) return ClosedSet::whole(space);
  std::vector<Point> points;
  if (in.peek() != close) {
    do {
      const std::size_t at = in.position();
      const std::string name = in.identifier();
      try {
        points.push_back(space->parse_point(name));
      } catch (const unknown_point&) {
        throw unknown_point(name, at);
      }
    } while (in.accept(","));
  }
  return ClosedSet::closure_of(space, points);
}

inline std::vector<Preatom> parse_product(Cursor& in, const SpacePtr& space) {
  std::vector<Preatom> out;
  if (in.accept_keyword("eps")) return out;
  while (in.accept("[")) {
    ClosedSet f = parse_set_expr(in, space, ']');
    in.expect("]");
    in.expect("^{<");
    Ordinal e = parse_ordinal(in);
    in.expect("}");
    out.push_back({std::move(f), std::move(e)});
  }
  return out;
}

inline SymbolicWord parse_word(Cursor& in, const SpacePtr& space) {
  std::vector<WordComponent> out;
  if (in.accept_keyword("eps")) return SymbolicWord{};
  while (!in.at_end() && (in.peek() == '(' || Cursor::is_ident(in.peek()))) {
    if (in.accept("(")) {
      ClosedSet f = parse_set_expr(in, space, ')');
      in.expect(")");
      in.expect("^");
      Ordinal len;
      if (in.accept("(")) {
        len = parse_ordinal(in);
        in.expect(")");
      } else {
        len = parse_term(in);
      }
      out.emplace_back(std::move(f), std::move(len));
    } else {
      const std::size_t at = in.position();
      const std::string name = in.identifier();
      Point p;
      try {
        p = space->parse_point(name);
      } catch (const unknown_point&) {
        throw unknown_point(name, at);
      }
      out.push_back(WordComponent::letter(space, p));
    }
  }
  return SymbolicWord(std::move(out));
}

}  // namespace detail

inline Ordinal parse_ordinal(std::string_view text) {
  Cursor in(text);
  Ordinal r = detail::parse_ordinal(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return r;
}

/// A bound written as an ordinal (`w^2+1`, `2`, ...).
inline Bound parse_bound(std::string_view text) {
  const Ordinal o = parse_ordinal(text);
  auto b = Bound::from_ordinal(o);
  if (!b) throw invalid_argument(to_string(o) + " is not a bound");
  return *b;
}

/// A product expression as its raw preatom sequence.
inline std::vector<Preatom> parse_preatoms(std::string_view text, const SpacePtr& space) {
  Cursor in(text);
  auto out = detail::parse_product(in, space);
  if (!in.at_end()) in.fail("unexpected input in product");
  return out;
}

/// A union expression, normalized to an antichain of reduced products.
inline ProductUnion parse_union(std::string_view text, const SpacePtr& space) {
  Cursor in(text);
  if (in.accept_keyword("empty")) {
    if (!in.at_end()) in.fail("unexpected input after 'empty'");
    return {};
  }
  ProductUnion u;
  do {
    auto pre = detail::parse_product(in, space);
    u = union_union(u, normalize_preatoms(pre));
  } while (in.accept("|"));
  if (!in.at_end()) in.fail("unexpected input in product");
  return u;
}

/// A product expression that must denote a single atom sequence whose
/// exponents are all bounds; reduced.
inline Product parse_product(std::string_view text, const SpacePtr& space) {
  const auto u = normalize_preatoms(parse_preatoms(text, space));
  if (u.size() != 1) throw invalid_argument("expression does not denote a single product");
  return u.members().front();
}

inline SymbolicWord parse_word(std::string_view text, const SpacePtr& space) {
  Cursor in(text);
  auto w = detail::parse_word(in, space);
  if (!in.at_end()) in.fail("unexpected input in word");
  return w;
}

// ---------------------------------------------------------------------------
// Space files

inline SpacePtr parse_space(std::string_view text) {
  std::string kind;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  bool have_elements = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor in(line, line_start);
    if (!in.at_end()) {
      const std::string key = in.identifier();
      in.expect(":");
      if (key == "kind") {
        kind = in.identifier();
        if (kind != "finite_poset" && kind != "cofinite_nat") in.fail("unknown space kind '" + kind + "'");
      } else if (key == "elements") {
        have_elements = true;
        while (!in.at_end()) {
          elements.push_back(in.identifier());
          in.accept(",");
        }
      } else if (key == "order") {
        while (!in.at_end()) {
          std::string lo = in.identifier();
          in.expect("<=");
          std::string hi = in.identifier();
          order.emplace_back(lo, hi);
          while (in.accept("<=")) {
            lo = hi;
            hi = in.identifier();
            order.emplace_back(lo, hi);
          }
          if (!in.at_end()) in.expect(",");
        }
      } else {
        in.fail("unknown key '" + key + "'");
      }
      if (!in.at_end()) in.fail("unexpected trailing input");
    }
    line_start = line_end + 1;
  }
  if (kind.empty()) throw parse_error("missing 'kind'", 0);
  if (kind == "cofinite_nat") {
    if (have_elements || !order.empty()) throw invalid_argument("cofinite_nat takes no elements or order");
    return SpaceDef::cofinite_nat();
  }
  return SpaceDef::finite_poset(std::move(elements), order);
}

}  // namespace twords
