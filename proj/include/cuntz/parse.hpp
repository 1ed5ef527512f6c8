#pragma once

#include "cuntz/element.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <string_view>

namespace cuntz {

namespace detail {

// Grammar, loosest binding first:
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := unary ([*] unary)*          juxtaposition multiplies
//   unary   := '-' unary | postfix
//   postfix := primary '\''*               adjoint
//   primary := 's'<k> | 'I' | 'i' | <int> ['/' <int>] | '(' sum ')'
class Parser {
public:
  Parser(AlgebraTag tag, std::string_view text) : tag_(tag), text_(text) {}

  Element run() {
    skip_space();
    if (pos_ == text_.size())
      throw ParseError(pos_, "empty expression");
    Element e = sum();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size())
      return false;
    char c = text_[pos_];
    return c == 's' || c == 'I' || c == 'i' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Element sum() {
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Element acc = product();
    if (negate)
      acc = scale(-1, acc);
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = add(acc, product());
      } else if (peek('-')) {
        ++pos_;
        acc = subtract(acc, product());
      } else {
        return acc;
      }
    }
  }

  Element product() {
    Element acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = multiply(acc, unary());
      } else if (starts_primary()) {
        acc = multiply(acc, unary());
      } else {
        return acc;
      }
    }
  }

  Element unary() {
    if (peek('-')) {
      ++pos_;
      return scale(-1, unary());
    }
    Element e = primary();
    while (peek('\'')) {
      ++pos_;
      e = adjoint(e);
    }
    return e;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError(pos_, "expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Element primary() {
    skip_space();
    if (pos_ >= text_.size())
      throw ParseError(pos_, "unexpected end of expression");
    const std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element e = sum();
      if (!peek(')'))
        throw ParseError(pos_, "expected ')'");
      ++pos_;
      return e;
    }
    if (c == 'I') {
      ++pos_;
      return Element::unit(tag_);
    }
    if (c == 'i') {
      ++pos_;
      return Element::monomial(tag_, Monomial{}, Coefficient::i());
    }
    if (c == 's') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(pos_, "expected generator index after 's'");
      Integer k = integer();
      if (k < 1 || k > Integer(std::numeric_limits<Letter>::max()))
        throw ParseError(start, "generator index must be a positive 32-bit integer");
      auto letter = static_cast<Letter>(k);
      if (!tag_.admits(letter))
        throw Error("index out of range: s" + std::to_string(letter) + " is not a generator of " + tag_.name() +
                    " (position " + std::to_string(start) + ")");
      return Element::generator(tag_, letter);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = integer();
        if (den == 0)
          throw ParseError(pos_, "zero denominator");
      }
      return Element::monomial(tag_, Monomial{}, Coefficient(Rational(num, den)));
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  AlgebraTag tag_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses an expression such as "s1*s2' + 3/2*I" in the given algebra.
/// Juxtaposition multiplies; `'` is the adjoint; `i` is the imaginary unit.
inline Element parse(AlgebraTag tag, std::string_view text) { return detail::Parser(tag, text).run(); }

} // namespace cuntz
