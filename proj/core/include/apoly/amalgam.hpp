#pragma once

// The amalgam pipeline: a base A-polynomial in (L, M) is glued to the
// exterior of a (2, 2n) torus link. The new peripheral pair has eigenvalues
// A (of the link generator a) and B = p^n, where p is the eigenvalue of the
// other generator m.

#include <optional>
#include <string_view>
#include <vector>

#include "apoly/newton.hpp"
#include "apoly/polynomial.hpp"

namespace apoly {

/// l = mu^r lambda^s and m = mu^u lambda^v on the identified torus.
struct GluingData {
  Exponent r = 4;
  Exponent s = 1;
  Exponent u = 3;
  Exponent v = 1;

  Exponent determinant() const noexcept { return r * v - s * u; }
  /// Throws InvalidGluing unless the determinant is +1 or -1.
  void validate() const;

  friend bool operator==(const GluingData&, const GluingData&) = default;
};

struct AmalgamParams {
  LaurentPolynomial base;  // in L and M
  GluingData gluing;
  Exponent n = 1;

  /// Figure-eight base, default gluing.
  static AmalgamParams defaults(Exponent n);
  /// Throws InvalidGluing, InvalidArgument (n < 1), WrongArity (base not in
  /// L, M), ZeroPolynomial.
  void validate() const;
};

/// -L + L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + L*M^6 - L*M^8
LaurentPolynomial figure_eight_apolynomial();

/// Built-in polynomials by name ("fig8").
std::optional<LaurentPolynomial> catalog_lookup(std::string_view name);
std::vector<std::string_view> catalog_names();

/// Images of M and L in the eigenvalues A (of a) and p (of m):
/// mu = l^(v/d) m^(-s/d), lambda = l^(-u/d) m^(r/d) with d = rv - su and
/// l -> A^n, m -> p.
Monomial meridian_image(const AmalgamParams& params);
Monomial longitude_image(const AmalgamParams& params);

/// F(A, p): the base with M and L replaced by their images, normalized.
LaurentPolynomial glue_substitution(const AmalgamParams& params);

/// normalize(Res_p(F, p^n - B)).
LaurentPolynomial eliminate_p(const LaurentPolynomial& f_ap, Exponent n);

/// G(A, B) by three resultants: against the cleared M relation, the cleared
/// L relation, then p^n - B; normalized at the end.
LaurentPolynomial resultant_chain(const AmalgamParams& params);

struct VerticalEdgeReport {
  Edge edge;
  EdgePolynomial edge_polynomial;
  unsigned multiplicity = 0;
};

struct UnityReport {
  Exponent n = 1;
  bool vertical_edge_found = false;
  /// Largest k with (1 - t^n)^k dividing a vertical edge polynomial.
  unsigned multiplicity = 0;
  /// normalize(G(A, 0)).
  LaurentPolynomial fiber_polynomial;
  std::vector<VerticalEdgeReport> vertical_edges;
};

/// Vertical-edge analysis of a polynomial G(A, B) with B horizontal.
UnityReport unity_report_for(const LaurentPolynomial& g_ab, Exponent n);

/// unity_report_for(resultant_chain(params), params.n)
UnityReport unity_report(const AmalgamParams& params);

}  // namespace apoly
