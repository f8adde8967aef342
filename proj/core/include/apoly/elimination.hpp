#pragma once

// Resultants of polynomials whose coefficients are themselves polynomials,
// by Sylvester matrix and fraction-free (Bareiss) elimination.

#include <cstddef>
#include <vector>

#include "apoly/polynomial.hpp"

namespace apoly {

/// Dense square matrix of polynomials, row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t size = 0) : size_(size), entries_(size * size) {}
  PolyMatrix(std::initializer_list<std::initializer_list<LaurentPolynomial>> rows);

  std::size_t size() const noexcept { return size_; }
  LaurentPolynomial& at(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
  const LaurentPolynomial& at(std::size_t row, std::size_t col) const {
    return entries_[row * size_ + col];
  }
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<LaurentPolynomial> entries_;
};

/// Sylvester matrix of f (degree m in var) and g (degree n in var). The
/// first n rows carry f's coefficients from var^m down to var^0, shifted one
/// column per row; the last m rows do the same for g.
struct SylvesterMatrix {
  PolyMatrix matrix;
  VarName var;
  Exponent degree_f = 0;
  Exponent degree_g = 0;
};

/// Throws LaurentInEliminationVar, BothConstant.
SylvesterMatrix sylvester(const LaurentPolynomial& f, const LaurentPolynomial& g, const VarName& var);

/// Determinant of the Sylvester matrix, rows ordered f-block then g-block.
/// With this order Res_x(x - a, x - b) = a - b.
LaurentPolynomial resultant(const LaurentPolynomial& f, const LaurentPolynomial& g, const VarName& var);

/// A resultant computed after multiplying f by var^f_shift and g by
/// var^g_shift to clear negative powers of var. The value equals
/// Res(var^f_shift * f, var^g_shift * g), which differs from the resultant
/// of the uncleared pair by the factor Res(var, g)^f_shift * Res(f, var)^g_shift.
struct ClearedResultant {
  LaurentPolynomial value;
  Exponent f_shift = 0;
  Exponent g_shift = 0;
};

ClearedResultant resultant_cleared(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                   const VarName& var);

/// Multiplies f by the smallest power var^k (k >= 0) leaving no negative
/// exponent of var. Returns the product and k.
std::pair<LaurentPolynomial, Exponent> clear_negative_powers(const LaurentPolynomial& f,
                                                             const VarName& var);

/// Fraction-free Gaussian elimination with row pivoting. Every division is
/// exact; a remainder throws InexactDivision.
LaurentPolynomial determinant_bareiss(PolyMatrix m);

/// Cofactor expansion. Exponential; throws TooLarge above dimension 8.
LaurentPolynomial determinant_naive(const PolyMatrix& m);

}  // namespace apoly
