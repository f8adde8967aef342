#include "apoly/amalgam.hpp"

#include <algorithm>

#include "apoly/elimination.hpp"
#include "apoly/parse.hpp"

namespace apoly {

namespace {

const VarName kL("L"), kM("M"), kA("A"), kB("B"), kP("p");

/// var - image, multiplied through by the image's denominator so that every
/// exponent is nonnegative: den*var - num with image = num/den.
LaurentPolynomial cleared_relation(const VarName& var, const Monomial& image) {
  Monomial num, den;
  for (const auto& [v, e] : image.factors()) {
    if (e > 0)
      num = num * Monomial::of(v, e);
    else
      den = den * Monomial::of(v, -e);
  }
  return LaurentPolynomial::monomial(1, den * Monomial::of(var)) -
         LaurentPolynomial::monomial(1, num);
}

LaurentPolynomial eliminate(const LaurentPolynomial& f, const LaurentPolynomial& relation,
                            const VarName& var) {
  return resultant_cleared(f, relation, var).value;
}

}  // namespace

void GluingData::validate() const {
  const Exponent d = determinant();
  if (d != 1 && d != -1)
    throw InvalidGluing("gluing (" + std::to_string(r) + "," + std::to_string(s) + "," +
                        std::to_string(u) + "," + std::to_string(v) + ") has determinant " +
                        std::to_string(d) + ", expected +-1");
}

AmalgamParams AmalgamParams::defaults(Exponent n) {
  return {figure_eight_apolynomial(), GluingData{}, n};
}

void AmalgamParams::validate() const {
  gluing.validate();
  if (n < 1) throw InvalidArgument("n must be a positive integer");
  if (base.is_zero()) throw ZeroPolynomial("amalgam base");
  for (const auto& var : base.variables())
    if (var != kL && var != kM)
      throw WrongArity("amalgam base must be a polynomial in L and M, found '" + var.str() + "'");
}

LaurentPolynomial figure_eight_apolynomial() {
  return parse_poly("-L + L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + L*M^6 - L*M^8");
}

std::optional<LaurentPolynomial> catalog_lookup(std::string_view name) {
  if (name == "fig8") return figure_eight_apolynomial();
  return std::nullopt;
}

std::vector<std::string_view> catalog_names() { return {"fig8"}; }

Monomial meridian_image(const AmalgamParams& params) {
  const auto& g = params.gluing;
  const Exponent d = g.determinant();
  return Monomial{{kA, d * params.n * g.v}, {kP, -d * g.s}};
}

Monomial longitude_image(const AmalgamParams& params) {
  const auto& g = params.gluing;
  const Exponent d = g.determinant();
  return Monomial{{kA, -d * params.n * g.u}, {kP, d * g.r}};
}

LaurentPolynomial glue_substitution(const AmalgamParams& params) {
  params.validate();
  MonomialMap map;
  map.emplace(kM, meridian_image(params));
  map.emplace(kL, longitude_image(params));
  return normalize(substitute_monomials(params.base, map));
}

LaurentPolynomial eliminate_p(const LaurentPolynomial& f_ap, Exponent n) {
  if (n < 1) throw InvalidArgument("n must be a positive integer");
  const auto relation = LaurentPolynomial::monomial(1, Monomial::of(kP, n)) -
                        LaurentPolynomial::variable(kB);
  return normalize(eliminate(f_ap, relation, kP));
}

LaurentPolynomial resultant_chain(const AmalgamParams& params) {
  params.validate();
  const auto m_relation = cleared_relation(kM, meridian_image(params));
  const auto l_relation = cleared_relation(kL, longitude_image(params));
  const auto without_m = eliminate(params.base, m_relation, kM);
  const auto without_l = eliminate(without_m, l_relation, kL);
  return eliminate_p(without_l, params.n);
}

UnityReport unity_report_for(const LaurentPolynomial& g_ab, Exponent n) {
  if (n < 1) throw InvalidArgument("n must be a positive integer");
  UnityReport report;
  report.n = n;
  report.fiber_polynomial = normalize(specialize(g_ab, kB, 0));
  const auto polygon = newton_polygon(g_ab, kB, kA);
  if (polygon.vertices.size() < 2) return report;
  for (const auto& e : edges(polygon)) {
    if (!e.slope.vertical()) continue;
    auto fe = edge_polynomial_substitution(g_ab, e, basis_change_for_edge(e));
    const unsigned k = unity_divisibility(fe, n);
    report.vertical_edge_found = true;
    report.multiplicity = std::max(report.multiplicity, k);
    report.vertical_edges.push_back({e, std::move(fe), k});
  }
  return report;
}

UnityReport unity_report(const AmalgamParams& params) {
  return unity_report_for(resultant_chain(params), params.n);
}

}  // namespace apoly
