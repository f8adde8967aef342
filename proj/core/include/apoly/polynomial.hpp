#pragma once

// Sparse Laurent polynomials with arbitrary-precision integer coefficients.
//
// A polynomial stores the sorted list of variables it actually involves and
// a list of terms sorted ascending in the canonical order: variables compared
// alphabetically, exponent vectors compared lexicographically. Zero
// coefficients are never stored and a variable is dropped from the list as
// soon as every term has exponent 0 in it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "apoly/errors.hpp"

namespace apoly {

using Integer = mpz_class;
using Exponent = std::int64_t;

class VarName {
 public:
  /// Throws InvalidVarName unless `name` is a letter followed by letters,
  /// digits or underscores.
  explicit VarName(std::string name);
  VarName(const char* name) : VarName(std::string(name)) {}

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const VarName&, const VarName&) = default;
  friend auto operator<=>(const VarName&, const VarName&) = default;

 private:
  std::string name_;
};

bool is_valid_var_name(std::string_view name) noexcept;

/// Product of variables raised to signed powers. Stored sparse and sorted
/// by variable; no stored exponent is zero.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::pair<VarName, Exponent>> factors);

  static Monomial of(const VarName& var, Exponent e = 1);

  Exponent exponent(std::string_view var) const noexcept;
  const std::vector<std::pair<VarName, Exponent>>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial pow(Exponent e) const;
  Monomial inverse() const { return pow(-1); }

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical order: alphabetical variables, lexicographic exponents, with
  /// an absent variable counting as exponent 0.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  void set(const VarName& var, Exponent e);
  std::vector<std::pair<VarName, Exponent>> factors_;
};

class LaurentPolynomial {
 public:
  /// Exponents are indexed by position in variables().
  struct Term {
    std::vector<Exponent> exps;
    Integer coeff;
  };

  LaurentPolynomial() = default;

  static LaurentPolynomial constant(const Integer& c);
  static LaurentPolynomial variable(const VarName& v);
  static LaurentPolynomial monomial(const Integer& c, const Monomial& m);
  /// Like terms are combined.
  static LaurentPolynomial from_terms(std::span<const std::pair<Monomial, Integer>> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return vars_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<VarName>& variables() const noexcept { return vars_; }
  bool involves(std::string_view var) const noexcept;

  /// Terms in ascending canonical order.
  std::vector<std::pair<Monomial, Integer>> terms() const;
  std::span<const Term> raw_terms() const noexcept { return terms_; }

  Integer coefficient(const Monomial& m) const;
  /// Largest / smallest exponent of `var` over all terms; 0 when `var` is
  /// absent or the polynomial is zero.
  Exponent degree_in(std::string_view var) const noexcept;
  Exponent min_degree_in(std::string_view var) const noexcept;

  /// Coefficients of var^0, var^1, ..., var^deg as polynomials in the other
  /// variables. Requires min_degree_in(var) >= 0.
  std::vector<LaurentPolynomial> coefficients_in(std::string_view var) const;

  /// Greatest term in the canonical order. Requires a nonzero polynomial.
  std::pair<Monomial, Integer> leading_term() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial pow(unsigned e) const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Canonical text, ascending term order, e.g. "1 - t" or "-L + L*M^2".
  /// The output re-parses to an equal polynomial.
  std::string to_string() const;

  /// Builds directly from aligned terms; sorts, merges and trims.
  static LaurentPolynomial from_raw(std::vector<VarName> vars, std::vector<Term> terms);

 private:
  void canonicalize();

  std::vector<VarName> vars_;
  std::vector<Term> terms_;
};

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Greatest common divisor of the coefficients, always nonnegative.
Integer content(const LaurentPolynomial& f);

/// Divides by the content, shifts every variable's minimum exponent to 0
/// and fixes the sign so the greatest monomial has a positive coefficient.
/// Throws ZeroPolynomial.
LaurentPolynomial normalize(const LaurentPolynomial& f);

/// The monomial shift of normalize alone: every variable ends with minimum
/// exponent 0. Coefficients are untouched.
LaurentPolynomial clear_monomial(const LaurentPolynomial& f);

/// Multiplies by -1 if the greatest monomial has a negative coefficient.
LaurentPolynomial fix_sign(const LaurentPolynomial& f);

using MonomialMap = std::map<VarName, Monomial>;

/// Replaces each variable v of f by map[v], simultaneously.
/// Throws UnassignedVariable.
LaurentPolynomial substitute_monomials(const LaurentPolynomial& f, const MonomialMap& map);

/// Sets `var` to an integer value. Throws NegativeExponentAtZero when
/// value = 0 and var has a negative exponent, NonIntegralSpecialization when
/// |value| > 1 and var has a negative exponent.
LaurentPolynomial specialize(const LaurentPolynomial& f, const VarName& var, const Integer& value);

/// Exact quotient f / g in the Laurent polynomial ring over the integers,
/// or nullopt when g does not divide f. Throws ZeroDivisor.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f,
                                              const LaurentPolynomial& g);

/// Process-wide bound on the number of terms of any product or sum.
/// Exceeding it throws TermLimitExceeded. Default: 1'000'000.
void set_term_limit(std::size_t limit) noexcept;
std::size_t term_limit() noexcept;

}  // namespace apoly
