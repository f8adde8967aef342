#pragma once

// Newton polygons of bivariate Laurent polynomials and the edge
// polynomials carried by their edges. Everything here is exact integer
// arithmetic.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "apoly/polynomial.hpp"

namespace apoly {

/// Exponent pair (horizontal, vertical).
struct LatticePoint {
  Exponent i = 0;
  Exponent j = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Reduced slope num/den with den >= 0, or vertical (den == 0, num == 1).
/// Slope means change in vertical exponent over change in horizontal.
struct Slope {
  Exponent num = 0;
  Exponent den = 1;

  static Slope vertical_slope() { return {1, 0}; }
  /// Reduces (dj, di) to lowest terms. Throws InvalidArgument for (0, 0).
  static Slope from_direction(Exponent di, Exponent dj);

  bool vertical() const noexcept { return den == 0; }
  /// "p/q" or "vertical".
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
};

using VarPair = std::pair<VarName, VarName>;

struct NewtonPolygon {
  /// Counterclockwise, starting at the lexicographically smallest vertex.
  /// One vertex for a point hull, two for a segment.
  std::vector<LatticePoint> vertices;
  VarPair source_vars;
};

struct Edge {
  LatticePoint from;
  LatticePoint to;
  /// Primitive step from `from` towards `to`.
  LatticePoint direction;
  Slope slope;
  VarPair source_vars;

  /// Number of primitive steps between the endpoints.
  Exponent lattice_length() const;
};

/// Unimodular completion of a slope: p*b - q*a == 1.
struct BasisChange {
  Exponent p = 0;
  Exponent q = 0;
  Exponent a = 0;
  Exponent b = 0;

  friend bool operator==(const BasisChange&, const BasisChange&) = default;
};

/// Integer polynomial in one variable with a nonzero constant term, stored
/// densely by ascending degree.
class EdgePolynomial {
 public:
  /// Throws InvalidArgument if the constant or the top coefficient is zero.
  explicit EdgePolynomial(std::vector<Integer> coefficients);
  /// Shifts a univariate polynomial by a power of its variable so the
  /// lowest term becomes the constant term.
  static EdgePolynomial from_polynomial(const LaurentPolynomial& f);

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }

  LaurentPolynomial as_polynomial(const VarName& var = "t") const;
  std::string to_string() const { return as_polynomial().to_string(); }

  /// t^deg * f(1/t)
  EdgePolynomial reversed() const;
  EdgePolynomial negated() const;

  friend bool operator==(const EdgePolynomial&, const EdgePolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Exponent pairs of the nonzero terms of f. Throws WrongArity if f has a
/// variable other than the two given.
std::vector<LatticePoint> support(const LaurentPolynomial& f, const VarName& horizontal,
                                  const VarName& vertical);

/// Convex hull of a point set by monotone chain; collinear boundary points
/// are dropped. Same ordering conventions as NewtonPolygon::vertices.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

/// Throws ZeroPolynomial, WrongArity.
NewtonPolygon newton_polygon(const LaurentPolynomial& f, const VarName& horizontal,
                             const VarName& vertical);

/// Boundary edges in counterclockwise order. A segment hull yields a single
/// edge. Throws DegeneratePolygon for a point hull.
std::vector<Edge> edges(const NewtonPolygon& polygon);

/// Canonical (a, b) with p*b - q*a == 1 and 0 <= a < |p| (b == 0 when p is
/// zero). Throws NotCoprime.
BasisChange basis_change_for_slope(Exponent p, Exponent q);

/// The basis change whose substitution isolates this particular edge (of
/// the two parallel edges with its slope, the one the polygon lies to the
/// left of when walking from `from` to `to`).
BasisChange basis_change_for_edge(const Edge& e);

/// Edge polynomial via the monomial change of variables
///   vertical -> Z^b Y^-q,  horizontal -> Z^-a Y^p,
/// followed by clearing the monomial, fixing the sign, keeping the Y^0 part
/// and shifting it to a nonzero constant term. The content is kept. Either
/// orientation of (p, q, a, b) is accepted; the one that selects `e` is
/// used. Throws SlopeMismatch, NotAnEdge.
EdgePolynomial edge_polynomial_substitution(const LaurentPolynomial& f, const Edge& e,
                                            const BasisChange& bc);

/// Edge polynomial read directly off the coefficients at the lattice points
/// from, from + direction, ..., to. Agrees with the substitution route up
/// to sign and reversal. Throws NotAnEdge.
EdgePolynomial edge_polynomial_direct(const LaurentPolynomial& f, const Edge& e);

/// Largest k with (1 - t^n)^k dividing f exactly. Throws InvalidArgument
/// for n < 1.
unsigned unity_divisibility(const EdgePolynomial& f, Exponent n);

}  // namespace apoly
