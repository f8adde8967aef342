#include "apoly/newton.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <cstdlib>
#include <numeric>
#include <tuple>

namespace apoly {

namespace {

__extension__ typedef __int128 Wide;

// Twice the signed area of (o, a, b); positive for a left turn.
Wide cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<Wide>(a.i - o.i) * (b.j - o.j) - static_cast<Wide>(a.j - o.j) * (b.i - o.i);
}

Exponent floor_mod(Exponent x, Exponent m) {
  const Exponent r = x % m;
  return r < 0 ? r + m : r;
}

// Extended Euclid: returns (g, x, y) with a*x + b*y == g == gcd(|a|, |b|).
std::tuple<Exponent, Exponent, Exponent> ext_gcd(Exponent a, Exponent b) {
  Exponent old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const Exponent quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_x, x) = std::make_pair(x, old_x - quot * x);
    std::tie(old_y, y) = std::make_pair(y, old_y - quot * y);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

Edge find_edge(const LaurentPolynomial& f, const Edge& e) {
  const auto polygon = newton_polygon(f, e.source_vars.first, e.source_vars.second);
  if (polygon.vertices.size() < 2) throw NotAnEdge("Newton polygon is a single point");
  for (const auto& candidate : edges(polygon)) {
    if ((candidate.from == e.from && candidate.to == e.to) ||
        (candidate.from == e.to && candidate.to == e.from))
      return candidate;
  }
  throw NotAnEdge("no edge between (" + std::to_string(e.from.i) + "," + std::to_string(e.from.j) +
                  ") and (" + std::to_string(e.to.i) + "," + std::to_string(e.to.j) +
                  ") in the Newton polygon");
}

}  // namespace

// ---------------------------------------------------------------------------

Slope Slope::from_direction(Exponent di, Exponent dj) {
  if (di == 0 && dj == 0) throw InvalidArgument("slope of a zero vector");
  if (di == 0) return vertical_slope();
  const Exponent g = std::gcd(di, dj);
  Exponent num = dj / g, den = di / g;
  if (den < 0) num = -num, den = -den;
  return {num, den};
}

std::string Slope::to_string() const {
  if (vertical()) return "vertical";
  return std::to_string(num) + "/" + std::to_string(den);
}

Exponent Edge::lattice_length() const {
  if (direction.i != 0) return (to.i - from.i) / direction.i;
  return (to.j - from.j) / direction.j;
}

EdgePolynomial::EdgePolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty() || coeffs_.front() == 0 || coeffs_.back() == 0)
    throw InvalidArgument("edge polynomial needs nonzero constant and top coefficients");
}

EdgePolynomial EdgePolynomial::from_polynomial(const LaurentPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("edge polynomial");
  if (f.variables().size() > 1) throw WrongArity("edge polynomial must be univariate");
  const auto terms = f.raw_terms();
  if (f.is_constant()) return EdgePolynomial({terms.front().coeff});
  const Exponent low = terms.front().exps[0];
  std::vector<Integer> coeffs(static_cast<std::size_t>(terms.back().exps[0] - low) + 1, 0);
  for (const auto& t : terms) coeffs[static_cast<std::size_t>(t.exps[0] - low)] = t.coeff;
  return EdgePolynomial(std::move(coeffs));
}

LaurentPolynomial EdgePolynomial::as_polynomial(const VarName& var) const {
  std::vector<LaurentPolynomial::Term> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) terms.push_back({{static_cast<Exponent>(k)}, coeffs_[k]});
  return LaurentPolynomial::from_raw({var}, std::move(terms));
}

EdgePolynomial EdgePolynomial::reversed() const {
  return EdgePolynomial(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

EdgePolynomial EdgePolynomial::negated() const {
  auto c = coeffs_;
  for (auto& x : c) x = -x;
  return EdgePolynomial(std::move(c));
}

// ---------------------------------------------------------------------------

std::vector<LatticePoint> support(const LaurentPolynomial& f, const VarName& horizontal,
                                  const VarName& vertical) {
  if (horizontal == vertical) throw WrongArity("horizontal and vertical variables coincide");
  const auto& vars = f.variables();
  std::ptrdiff_t hi = -1, vi = -1;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (vars[k] == horizontal)
      hi = static_cast<std::ptrdiff_t>(k);
    else if (vars[k] == vertical)
      vi = static_cast<std::ptrdiff_t>(k);
    else
      throw WrongArity("polynomial involves '" + vars[k].str() + "' besides '" + horizontal.str() +
                       "' and '" + vertical.str() + "'");
  }
  std::vector<LatticePoint> points;
  points.reserve(f.term_count());
  for (const auto& t : f.raw_terms())
    points.push_back({hi < 0 ? 0 : t.exps[static_cast<std::size_t>(hi)],
                      vi < 0 ? 0 : t.exps[static_cast<std::size_t>(vi)]});
  return points;
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;

  std::vector<LatticePoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& pt : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  const std::size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

NewtonPolygon newton_polygon(const LaurentPolynomial& f, const VarName& horizontal,
                             const VarName& vertical) {
  if (f.is_zero()) throw ZeroPolynomial("newton_polygon");
  return {convex_hull(support(f, horizontal, vertical)), {horizontal, vertical}};
}

std::vector<Edge> edges(const NewtonPolygon& polygon) {
  const auto& v = polygon.vertices;
  if (v.size() < 2) throw DegeneratePolygon();
  const std::size_t count = v.size() == 2 ? 1 : v.size();
  std::vector<Edge> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& a = v[k];
    const auto& b = v[(k + 1) % v.size()];
    const Exponent di = b.i - a.i, dj = b.j - a.j;
    const Exponent g = std::gcd(di, dj);
    out.push_back({a, b, {di / g, dj / g}, Slope::from_direction(di, dj), polygon.source_vars});
  }
  return out;
}

BasisChange basis_change_for_slope(Exponent p, Exponent q) {
  const auto [g, x, y] = ext_gcd(p, q);
  if (g != 1) throw NotCoprime(p, q);
  // p*x + q*y == 1, so b = x, a = -y solves p*b - q*a == 1.
  Exponent a = -y, b = x;
  if (p == 0) {
    a = -q;
    b = 0;
  } else {
    const Exponent shifted = floor_mod(a, std::abs(p));
    const Exponent k = (shifted - a) / p;
    a = shifted;
    b += k * q;
  }
  return {p, q, a, b};
}

BasisChange basis_change_for_edge(const Edge& e) {
  return basis_change_for_slope(-e.direction.j, -e.direction.i);
}

EdgePolynomial edge_polynomial_substitution(const LaurentPolynomial& f, const Edge& e,
                                            const BasisChange& bc) {
  const Edge edge = find_edge(f, e);
  if (bc.p * edge.direction.i != bc.q * edge.direction.j)
    throw SlopeMismatch("basis change for slope " + std::to_string(bc.p) + "/" +
                        std::to_string(bc.q) + " does not match edge slope " +
                        edge.slope.to_string());
  if (bc.p * bc.b - bc.q * bc.a != 1)
    throw SlopeMismatch("basis change does not satisfy p*b - q*a == 1");

  // The substitution isolates the edge where p*i - q*j is smallest; flip the
  // orientation if `edge` sits at the other extreme.
  BasisChange oriented = bc;
  const auto points = support(f, e.source_vars.first, e.source_vars.second);
  Exponent low = std::numeric_limits<Exponent>::max();
  for (const auto& pt : points) low = std::min(low, bc.p * pt.i - bc.q * pt.j);
  if (bc.p * edge.from.i - bc.q * edge.from.j != low)
    oriented = {-bc.p, -bc.q, -bc.a, -bc.b};

  const VarName y("Y"), z("Z");
  MonomialMap map;
  map.emplace(e.source_vars.first, Monomial{{z, -oriented.a}, {y, oriented.p}});
  map.emplace(e.source_vars.second, Monomial{{z, oriented.b}, {y, -oriented.q}});
  const auto changed = fix_sign(clear_monomial(substitute_monomials(f, map)));
  const auto boundary = specialize(changed, y, 0);
  return EdgePolynomial::from_polynomial(boundary);
}

EdgePolynomial edge_polynomial_direct(const LaurentPolynomial& f, const Edge& e) {
  find_edge(f, e);
  std::map<LatticePoint, Integer> coeff_at;
  const auto points = support(f, e.source_vars.first, e.source_vars.second);
  const auto terms = f.raw_terms();
  for (std::size_t k = 0; k < points.size(); ++k) coeff_at.emplace(points[k], terms[k].coeff);

  const Exponent di = e.to.i - e.from.i, dj = e.to.j - e.from.j;
  const Exponent g = std::gcd(di, dj);
  const LatticePoint step{di / g, dj / g};
  std::vector<Integer> coeffs;
  coeffs.reserve(static_cast<std::size_t>(g) + 1);
  for (Exponent s = 0; s <= g; ++s) {
    auto it = coeff_at.find({e.from.i + s * step.i, e.from.j + s * step.j});
    coeffs.push_back(it == coeff_at.end() ? Integer(0) : it->second);
  }
  return EdgePolynomial(std::move(coeffs));
}

unsigned unity_divisibility(const EdgePolynomial& f, Exponent n) {
  if (n < 1) throw InvalidArgument("root-of-unity order must be positive");
  const VarName t("t");
  const auto divisor = LaurentPolynomial::constant(1) -
                       LaurentPolynomial::monomial(1, Monomial::of(t, n));
  auto current = f.as_polynomial(t);
  unsigned k = 0;
  while (current.degree_in("t") >= n) {
    auto q = divide_exact(current, divisor);
    if (!q) break;
    current = std::move(*q);
    ++k;
  }
  return k;
}

}  // namespace apoly
