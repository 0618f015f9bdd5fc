#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "gpnef/bundle.hpp"

namespace gpnef {

namespace detail {

struct DslToken {
  enum Kind { Ident, Int, Symbol, End } kind = End;
  std::string text;
  std::int64_t value = 0;
  size_t pos = 0;  // 0-based offset into the source text
};

inline std::vector<DslToken> dsl_tokenize(std::string_view src) {
  std::vector<DslToken> out;
  size_t i = 0;
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    DslToken t;
    t.pos = i;
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = DslToken::Ident;
      t.text = std::string(src.substr(i, j - i));
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) ||
               (ch == '-' && i + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = DslToken::Int;
      t.text = std::string(src.substr(i, j - i));
      try {
        t.value = std::stoll(t.text);
      } catch (const std::out_of_range&) {
        throw UsageError("bundle expression: integer '" + t.text +
                         "' out of range at position " + std::to_string(i));
      }
      i = j;
    } else if (std::string_view("()[],+*").find(ch) != std::string_view::npos) {
      t.kind = DslToken::Symbol;
      t.text = std::string(1, ch);
      ++i;
    } else {
      throw UsageError("bundle expression: unexpected character '" +
                       std::string(1, ch) + "' at position " + std::to_string(i));
    }
    out.push_back(std::move(t));
  }
  out.push_back(DslToken{DslToken::End, "", 0, src.size()});
  return out;
}

// Grammar:
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := 'Q' | 'S' | 'T' | 'triv(' INT ')' | 'L[' INT (',' INT)* ']'
//           | 'dual(' expr ')' | 'det(' expr ')'
//           | 'sym(' INT ',' expr ')' | 'wedge(' INT ',' expr ')'
//           | '(' expr ')'
class DslParser {
 public:
  explicit DslParser(std::string_view src) : toks_(dsl_tokenize(src)) {}

  BundleExpr parse() {
    BundleExpr e = expr();
    if (!at_end())
      throw UsageError("bundle expression: unexpected '" + peek().text +
                       "' at position " + std::to_string(peek().pos));
    return e;
  }

 private:
  BundleExpr expr() {
    BundleExpr e = term();
    while (accept_symbol("+")) e = BundleExpr::sum(std::move(e), term());
    return e;
  }

  BundleExpr term() {
    BundleExpr e = factor();
    while (accept_symbol("*")) e = BundleExpr::tensor(std::move(e), factor());
    return e;
  }

  BundleExpr factor() {
    if (accept_symbol("(")) {
      BundleExpr e = expr();
      expect_symbol(")");
      return e;
    }
    const DslToken& t = peek();
    if (t.kind != DslToken::Ident)
      throw UsageError("bundle expression: expected a bundle term at position " +
                       std::to_string(t.pos));
    ++pos_;
    if (t.text == "Q") return BundleExpr::taut_quot();
    if (t.text == "S") return BundleExpr::taut_sub();
    if (t.text == "T") return BundleExpr::tangent();
    if (t.text == "triv") {
      expect_symbol("(");
      const std::int64_t r = expect_int();
      expect_symbol(")");
      return BundleExpr::trivial(r);
    }
    if (t.text == "dual" || t.text == "det") {
      expect_symbol("(");
      BundleExpr e = expr();
      expect_symbol(")");
      return t.text == "dual" ? BundleExpr::dual(std::move(e))
                              : BundleExpr::det(std::move(e));
    }
    if (t.text == "sym" || t.text == "wedge") {
      expect_symbol("(");
      const std::int64_t k = expect_int();
      expect_symbol(",");
      BundleExpr e = expr();
      expect_symbol(")");
      return t.text == "sym" ? BundleExpr::sym(k, std::move(e))
                             : BundleExpr::wedge(k, std::move(e));
    }
    if (t.text == "L") {
      expect_symbol("[");
      Ivec coeffs{expect_int()};
      while (accept_symbol(",")) coeffs.push_back(expect_int());
      expect_symbol("]");
      return BundleExpr::line(Weight(std::move(coeffs)));
    }
    throw UsageError("bundle expression: unknown symbol '" + t.text +
                     "' at position " + std::to_string(t.pos));
  }

  const DslToken& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == DslToken::End; }

  bool accept_symbol(std::string_view s) {
    if (peek().kind == DslToken::Symbol && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_symbol(std::string_view s) {
    if (!accept_symbol(s))
      throw UsageError("bundle expression: expected '" + std::string(s) +
                       "' at position " + std::to_string(peek().pos));
  }

  std::int64_t expect_int() {
    if (peek().kind != DslToken::Int)
      throw UsageError("bundle expression: expected an integer at position " +
                       std::to_string(peek().pos));
    return toks_[pos_++].value;
  }

  std::vector<DslToken> toks_;
  size_t pos_ = 0;
};

}  // namespace detail

inline BundleExpr parse_bundle(std::string_view text) {
  return detail::DslParser(text).parse();
}

}  // namespace gpnef
