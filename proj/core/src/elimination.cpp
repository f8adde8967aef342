#include "apoly/elimination.hpp"

#include <utility>

namespace apoly {

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<LaurentPolynomial>> rows)
    : PolyMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != size_) throw InvalidArgument("matrix rows must have equal length");
    std::size_t c = 0;
    for (const auto& entry : row) at(r, c++) = entry;
    ++r;
  }
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < size_; ++c) std::swap(at(a, c), at(b, c));
}

SylvesterMatrix sylvester(const LaurentPolynomial& f, const LaurentPolynomial& g,
                          const VarName& var) {
  if (f.min_degree_in(var.str()) < 0 || g.min_degree_in(var.str()) < 0)
    throw LaurentInEliminationVar(var.str());
  const Exponent m = f.degree_in(var.str());
  const Exponent n = g.degree_in(var.str());
  if (m == 0 && n == 0) throw BothConstant(var.str());

  const auto fc = f.coefficients_in(var.str());
  const auto gc = g.coefficients_in(var.str());
  const auto size = static_cast<std::size_t>(m + n);
  SylvesterMatrix out{PolyMatrix(size), var, m, n};
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
    for (std::size_t k = 0; k <= static_cast<std::size_t>(m); ++k)
      out.matrix.at(r, r + k) = fc[static_cast<std::size_t>(m) - k];
  for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r)
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k)
      out.matrix.at(static_cast<std::size_t>(n) + r, r + k) = gc[static_cast<std::size_t>(n) - k];
  return out;
}

LaurentPolynomial resultant(const LaurentPolynomial& f, const LaurentPolynomial& g,
                            const VarName& var) {
  return determinant_bareiss(sylvester(f, g, var).matrix);
}

std::pair<LaurentPolynomial, Exponent> clear_negative_powers(const LaurentPolynomial& f,
                                                             const VarName& var) {
  const Exponent low = f.min_degree_in(var.str());
  if (low >= 0) return {f, 0};
  return {f * LaurentPolynomial::monomial(1, Monomial::of(var, -low)), -low};
}

ClearedResultant resultant_cleared(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                   const VarName& var) {
  auto [fc, fs] = clear_negative_powers(f, var);
  auto [gc, gs] = clear_negative_powers(g, var);
  return {resultant(fc, gc, var), fs, gs};
}

LaurentPolynomial determinant_bareiss(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial::constant(1);
  bool negate = false;
  LaurentPolynomial previous = LaurentPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    const LaurentPolynomial& diag = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const LaurentPolynomial& lead = m.at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial numerator = diag * m.at(i, j);
        if (!lead.is_zero() && !m.at(k, j).is_zero()) numerator -= lead * m.at(k, j);
        auto quotient = divide_exact(numerator, previous);
        if (!quotient) throw InexactDivision();
        m.at(i, j) = std::move(*quotient);
      }
      m.at(i, k) = LaurentPolynomial{};
    }
    previous = m.at(k, k);
  }
  const LaurentPolynomial& det = m.at(n - 1, n - 1);
  return negate ? -det : det;
}

namespace {

LaurentPolynomial cofactor_expand(const PolyMatrix& m, std::size_t row,
                                  std::vector<bool>& used_cols) {
  const std::size_t n = m.size();
  if (row == n) return LaurentPolynomial::constant(1);
  LaurentPolynomial sum;
  bool positive = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (used_cols[c]) continue;
    if (!m.at(row, c).is_zero()) {
      used_cols[c] = true;
      const auto minor = cofactor_expand(m, row + 1, used_cols);
      used_cols[c] = false;
      const auto contribution = m.at(row, c) * minor;
      if (positive)
        sum += contribution;
      else
        sum -= contribution;
    }
    positive = !positive;
  }
  return sum;
}

}  // namespace

LaurentPolynomial determinant_naive(const PolyMatrix& m) {
  constexpr std::size_t kMaxSize = 8;
  if (m.size() > kMaxSize)
    throw TooLarge("naive determinant limited to dimension " + std::to_string(kMaxSize));
  std::vector<bool> used(m.size(), false);
  return cofactor_expand(m, 0, used);
}

}  // namespace apoly
