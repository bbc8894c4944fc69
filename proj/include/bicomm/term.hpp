#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicomm/errors.hpp"
#include "bicomm/rational.hpp"

namespace bicomm {

// A fully bracketed nonassociative word in generators x1, x2, ...; either a
// single generator or a product of exactly two subterms. Immutable, shared
// structurally.
class Term {
 public:
  static Term leaf(int index) {
    if (index < 1) throw DomainError("generator index must be positive");
    return Term(std::make_shared<const Node>(Node{index, nullptr, nullptr}));
  }

  static Term product(Term l, Term r) {
    return Term(std::make_shared<const Node>(Node{0, l.node_, r.node_}));
  }

  bool is_leaf() const { return node_->index != 0; }
  int index() const {
    if (!is_leaf()) throw DomainError("inner node has no generator index");
    return node_->index;
  }
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }

  int degree() const {
    return is_leaf() ? 1 : left().degree() + right().degree();
  }

  int max_index() const {
    return is_leaf() ? node_->index : std::max(left().max_index(), right().max_index());
  }

  // Canonical text form: "x3" or "(t*u)" with every product parenthesized.
  std::string str() const {
    if (is_leaf()) return "x" + std::to_string(node_->index);
    return "(" + left().str() + "*" + right().str() + ")";
  }

 private:
  struct Node {
    int index;  // 0 for inner nodes
    std::shared_ptr<const Node> left, right;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

namespace detail {

// Recursive-descent parser over the grammar
//   term  := leaf | '(' term '*' term ')'
//   leaf  := 'x' INDEX
// with INDEX a positive decimal integer. No whitespace is allowed inside a
// term; the surrounding sum parser strips it between tokens.
class TermParser {
 public:
  explicit TermParser(std::string_view s, std::size_t offset = 0) : s_(s), offset_(offset) {}

  Term parse_complete() {
    Term t = parse_term();
    if (pos_ != s_.size()) throw ParseError("trailing characters after term", offset_ + pos_);
    return t;
  }

  Term parse_term() {
    if (pos_ >= s_.size()) throw ParseError("unexpected end of term", offset_ + pos_);
    char c = s_[pos_];
    if (c == 'x') return parse_leaf();
    if (c == '(') {
      ++pos_;
      Term l = parse_term();
      expect('*');
      Term r = parse_term();
      expect(')');
      return Term::product(l, r);
    }
    throw ParseError(std::string("expected 'x' or '(', found '") + c + "'", offset_ + pos_);
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t offset_;
  std::size_t pos_ = 0;

  Term parse_leaf() {
    std::size_t start = pos_;
    ++pos_;  // consume 'x'
    std::size_t digits = 0;
    long value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = value * 10 + (s_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("generator index too large", offset_ + start + 1);
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError("expected generator index after 'x'", offset_ + pos_);
    if (value == 0) throw ParseError("generator index must be positive", offset_ + start + 1);
    return Term::leaf(static_cast<int>(value));
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", offset_ + pos_);
    }
    ++pos_;
  }
};

}  // namespace detail

inline Term parse_term(std::string_view s) { return detail::TermParser(s).parse_complete(); }

// A formal rational combination of bracketed terms, as parsed from text like
// "(x1*x2) - 2*(x2*x1) + 1/2*x3".
struct TermSum {
  std::vector<std::pair<Rational, Term>> terms;

  int max_index() const {
    int m = 0;
    for (const auto& [c, t] : terms) m = std::max(m, t.max_index());
    return m;
  }
};

// Grammar: ['-'] item (('+'|'-') item)*, item := [RATIONAL '*'] term, with
// RATIONAL := INT ['/' INT]. Whitespace is allowed around '+', '-' and items.
inline TermSum parse_term_sum(std::string_view s) {
  TermSum sum;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws();
  if (pos == s.size()) throw ParseError("empty expression", pos);
  bool first = true;
  while (true) {
    skip_ws();
    Rational sign(1);
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (first && s[pos] == '+') throw ParseError("unexpected '+'", pos);
      if (s[pos] == '-') sign = Rational(-1);
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    Rational coeff(1);
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) {
        ++pos;
      }
      coeff = Rational::parse(s.substr(start, pos - start));
      skip_ws();
      if (pos >= s.size() || s[pos] != '*') throw ParseError("expected '*' after coefficient", pos);
      ++pos;
      skip_ws();
    }
    detail::TermParser parser(s.substr(pos), pos);
    Term t = parser.parse_term();
    pos += parser.position();
    sum.terms.emplace_back(sign * coeff, t);
    first = false;
    skip_ws();
    if (pos == s.size()) break;
    if (s[pos] != '+' && s[pos] != '-') throw ParseError("expected '+' or '-'", pos);
  }
  return sum;
}

}  // namespace bicomm
