#include "apoly/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace apoly {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPolynomial run() {
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
      skip_ws();
    }
    term(negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      advance();
      skip_ws();
      term(c == '-');
    }
    return LaurentPolynomial::from_terms(terms_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
    throw ParseError(line_, column_, message + ", found " + found);
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_letter(char c) {
    const auto u = static_cast<unsigned char>(c);
    return u < 0x80 && std::isalpha(u) != 0;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) advance();
    return text_.substr(start, pos_ - start);
  }

  void term(bool negative) {
    Integer coeff = 1;
    bool seen = false;
    if (is_digit(peek())) {
      coeff = Integer(std::string(digits()));
      seen = true;
    }
    Monomial m;
    for (;;) {
      const std::size_t save_pos = pos_, save_line = line_, save_col = column_;
      skip_ws();
      if (peek() == '*') {
        if (!seen) fail("expected a term");
        advance();
        skip_ws();
        if (!is_letter(peek())) fail("expected a variable after '*'");
      } else if (!is_letter(peek())) {
        pos_ = save_pos;
        line_ = save_line;
        column_ = save_col;
        break;
      }
      m = m * factor();
      seen = true;
    }
    if (!seen) fail("expected a term");
    terms_.emplace_back(std::move(m), negative ? Integer(-coeff) : coeff);
  }

  Monomial factor() {
    const std::size_t start = pos_;
    while (!at_end() && (is_letter(peek()) || is_digit(peek()) || peek() == '_')) advance();
    VarName name{std::string(text_.substr(start, pos_ - start))};
    Exponent e = 1;
    skip_ws();
    if (peek() == '^') {
      advance();
      skip_ws();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        advance();
      }
      if (!is_digit(peek())) fail("expected an integer exponent");
      const std::size_t line = line_, col = column_;
      const auto text = digits();
      Exponent value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{}) throw ParseError(line, col, "exponent out of range");
      e = neg ? -value : value;
    }
    return Monomial::of(name, e);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::vector<std::pair<Monomial, Integer>> terms_;
};

}  // namespace

LaurentPolynomial parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace apoly
