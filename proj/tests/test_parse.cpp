#include <gtest/gtest.h>

#include "apoly/parse.hpp"

namespace apoly {
namespace {

LaurentPolynomial M(long c, Monomial m = {}) { return LaurentPolynomial::monomial(c, m); }

TEST(Parse, Constants) {
  EXPECT_EQ(parse_poly("0"), LaurentPolynomial{});
  EXPECT_EQ(parse_poly("42"), M(42));
  EXPECT_EQ(parse_poly("-42"), M(-42));
  EXPECT_EQ(parse_poly("  7  "), M(7));
}

TEST(Parse, ProductsAndPowers) {
  const Monomial lm{{"L", 1}, {"M", 4}};
  EXPECT_EQ(parse_poly("2*L*M^4"), M(2, lm));
  EXPECT_EQ(parse_poly("2 L M^4"), M(2, lm));
  EXPECT_EQ(parse_poly("2LM^4"), M(2, Monomial::of("LM", 4)));
  EXPECT_EQ(parse_poly("L * M ^ 4"), M(1, lm));
  EXPECT_EQ(parse_poly("x^-3"), M(1, Monomial::of("x", -3)));
  EXPECT_EQ(parse_poly("x*x^2"), M(1, Monomial::of("x", 3)));
  EXPECT_EQ(parse_poly("x*x^-1"), M(1));
}

TEST(Parse, SumsCombineLikeTerms) {
  EXPECT_EQ(parse_poly("x + x - 2*x"), LaurentPolynomial{});
  EXPECT_EQ(parse_poly("-x + 1 - y"),
            M(-1, Monomial::of("x")) + M(1) + M(-1, Monomial::of("y")));
}

TEST(Parse, Multiline) {
  EXPECT_EQ(parse_poly("x +\n  y\n"), M(1, Monomial::of("x")) + M(1, Monomial::of("y")));
}

TEST(Parse, BigIntegers) {
  const auto f = parse_poly("-98765432109876543210987654321*t");
  EXPECT_EQ(f.coefficient(Monomial::of("t")), Integer("-98765432109876543210987654321"));
}

TEST(Parse, FigureEight) {
  const auto f = parse_poly("-L + L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + L*M^6 - L*M^8");
  EXPECT_EQ(f.term_count(), 7u);
  EXPECT_EQ(f.coefficient(Monomial{{"L", 1}, {"M", 4}}), 2);
}

void expect_parse_error(const char* text, std::size_t line, std::size_t column) {
  try {
    parse_poly(text);
    ADD_FAILURE() << "no error for '" << text << "'";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << text << ": " << e.what();
    EXPECT_EQ(e.column(), column) << text << ": " << e.what();
  }
}

TEST(Parse, ErrorsCarryPositions) {
  expect_parse_error("", 1, 1);
  expect_parse_error("x +", 1, 4);
  expect_parse_error("2 3", 1, 3);
  expect_parse_error("x^", 1, 3);
  expect_parse_error("x^y", 1, 3);
  expect_parse_error("x + $", 1, 5);
  expect_parse_error("x +\n  * y", 2, 3);
  expect_parse_error("x^99999999999999999999999", 1, 3);
  expect_parse_error("(x)", 1, 1);
  expect_parse_error("*x", 1, 1);
  expect_parse_error("2**x", 1, 3);
}

TEST(Parse, ErrorIsNotMathError) {
  EXPECT_THROW(parse_poly("++"), ParseError);
  try {
    parse_poly("++");
  } catch (const MathError&) {
    FAIL() << "ParseError must not derive from MathError";
  } catch (const Error&) {
  }
}

}  // namespace
}  // namespace apoly
