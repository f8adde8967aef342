#pragma once

// Floating-point side of the pipeline: all roots of a univariate polynomial
// and the trace of roots of F(A, p) converging to roots of unity as p -> 0.

#include <complex>
#include <span>
#include <vector>

#include "apoly/polynomial.hpp"

namespace apoly {

struct ComplexRootSet {
  std::vector<std::complex<double>> roots;
  /// |f(root)| per root.
  std::vector<double> residuals;
  /// sum |a_i| |root|^i per root; residual / conditioning is the relative
  /// backward error.
  std::vector<double> conditioning;
  double tolerance = 0.0;
  int iterations = 0;
  /// False when the iteration cap was hit or some root's backward error
  /// exceeds the tolerance; the roots are then only a partial result.
  bool converged = false;
};

/// Aberth-Ehrlich simultaneous iteration on coefficients a_0..a_d
/// (ascending, a_d != 0). Throws InvalidArgument for degree < 1.
ComplexRootSet roots_dense(std::span<const double> coefficients, double tol = 1e-12);

/// Roots of a univariate polynomial with nonnegative exponents. Throws
/// InvalidArgument (not univariate, negative exponent, constant, a
/// coefficient overflowing double).
ComplexRootSet roots_univariate(const LaurentPolynomial& f, double tol = 1e-12);

struct RootMatch {
  int k = 0;  // xi = exp(2 pi i k / n)
  std::complex<double> xi;
  std::complex<double> nearest;
  double distance = 0.0;
};

struct TraceStep {
  double p = 0.0;
  double b = 0.0;  // p^n
  std::vector<std::complex<double>> roots;
  std::vector<RootMatch> matched;  // ordered by k
};

struct ConvergenceTrace {
  Exponent n = 1;
  std::vector<TraceStep> steps;
};

/// Greedy nearest matching of each n-th root of unity to a distinct root,
/// shortest distances first.
std::vector<RootMatch> match_roots_of_unity(std::span<const std::complex<double>> roots, Exponent n);

/// Coefficients in A of F(A, p) at a numeric p, ascending.
std::vector<double> coefficients_at(const LaurentPolynomial& f_ap, double p);

/// For p_k = p0 * ratio^k (k = 0..steps-1) solves F(A, p_k) = 0 for A, with
/// F from glue_substitution on the default parameters, and matches the n-th
/// roots of unity. Requires 0 < p0 <= 0.1, 0 < ratio < 1, steps >= 2.
/// Throws InvalidArgument, NonConvergence.
ConvergenceTrace convergence_trace(Exponent n, double p0, double ratio, int steps,
                                   double tol = 1e-12);

}  // namespace apoly
