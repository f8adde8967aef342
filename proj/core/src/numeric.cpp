#include "apoly/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "apoly/amalgam.hpp"

namespace apoly {

namespace {

using Complex = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 1000;

struct Evaluation {
  Complex value;
  double scale;  // sum |a_i| |z|^i
};

Evaluation evaluate(std::span<const double> a, Complex z) {
  Complex value = 0.0;
  double scale = 0.0;
  const double r = std::abs(z);
  for (std::size_t k = a.size(); k-- > 0;) {
    value = value * z + a[k];
    scale = scale * r + std::abs(a[k]);
  }
  return {value, scale};
}

/// p(z) / p'(z). For |z| > 1 the reversed polynomial is evaluated at 1/z
/// to keep the powers bounded.
Complex newton_ratio(std::span<const double> a, Complex z) {
  const std::size_t d = a.size() - 1;
  if (std::abs(z) <= 1.0) {
    Complex p = a[d], dp = 0.0;
    for (std::size_t k = d; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[k];
    }
    if (dp == 0.0) return p == 0.0 ? Complex(0.0) : Complex(1e-8);
    return p / dp;
  }
  // p(z) = z^d q(w), q(w) = sum a_i w^(d-i), w = 1/z;
  // p/p' = z / (d - w q'(w) / q(w)).
  const Complex w = 1.0 / z;
  Complex q = a[0], dq = 0.0;
  for (std::size_t k = 1; k <= d; ++k) {
    dq = dq * w + q;
    q = q * w + a[k];
  }
  if (q == 0.0) return 0.0;
  const Complex denom = static_cast<double>(d) - w * dq / q;
  if (denom == 0.0) return Complex(1e-8);
  return z / denom;
}

/// Starting points on circles whose radii come from the upper convex hull
/// of (i, log|a_i|).
std::vector<Complex> initial_points(std::span<const double> a) {
  const std::size_t d = a.size() - 1;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k <= d; ++k)
    if (a[k] != 0.0) pts.emplace_back(static_cast<double>(k), std::log(std::abs(a[k])));

  std::vector<std::pair<double, double>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& m = hull.back();
      const double cr = (m.first - o.first) * (pt.second - o.second) -
                        (m.second - o.second) * (pt.first - o.first);
      if (cr >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }

  std::vector<Complex> z;
  z.reserve(d);
  constexpr double kOffset = 0.4;
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const auto count = static_cast<std::size_t>(hull[h + 1].first - hull[h].first);
    const double radius =
        std::exp((hull[h].second - hull[h + 1].second) / static_cast<double>(count));
    for (std::size_t k = 0; k < count; ++k) {
      const double angle = two_pi * static_cast<double>(k) / static_cast<double>(count) +
                           two_pi * static_cast<double>(h) / static_cast<double>(d) + kOffset;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

}  // namespace

ComplexRootSet roots_dense(std::span<const double> coefficients, double tol) {
  if (coefficients.size() < 2 || coefficients.back() == 0.0)
    throw InvalidArgument("root finding needs degree >= 1 and a nonzero leading coefficient");
  for (double c : coefficients)
    if (!std::isfinite(c)) throw InvalidArgument("coefficient is not finite");

  ComplexRootSet out;
  out.tolerance = tol;

  std::size_t zeros = 0;
  while (coefficients[zeros] == 0.0) ++zeros;
  out.roots.assign(zeros, Complex(0.0));
  const auto a = coefficients.subspan(zeros);
  const std::size_t d = a.size() - 1;

  bool capped = false;
  if (d > 0) {
    std::vector<Complex> z = initial_points(a);
    std::vector<bool> done(d, false);
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
      bool all_done = true;
      for (std::size_t i = 0; i < d; ++i) {
        if (done[i]) continue;
        all_done = false;
        const Complex ratio = newton_ratio(a, z[i]);
        Complex repulsion = 0.0;
        for (std::size_t j = 0; j < d; ++j)
          if (j != i) repulsion += 1.0 / (z[i] - z[j]);
        const Complex step = ratio / (1.0 - ratio * repulsion);
        z[i] -= step;
        const auto [value, scale] = evaluate(a, z[i]);
        if (std::abs(step) <= 4.0 * kEps * std::abs(z[i]) ||
            std::abs(value) <= 4.0 * kEps * scale)
          done[i] = true;
      }
      if (all_done) break;
    }
    out.iterations = sweep;
    capped = sweep == kMaxSweeps;
    out.roots.insert(out.roots.end(), z.begin(), z.end());
  }

  out.converged = !capped;
  for (const auto& root : out.roots) {
    const auto [value, scale] = evaluate(coefficients, root);
    out.residuals.push_back(std::abs(value));
    out.conditioning.push_back(scale);
    if (std::abs(value) > tol * scale) out.converged = false;
  }
  return out;
}

ComplexRootSet roots_univariate(const LaurentPolynomial& f, double tol) {
  if (f.variables().size() != 1)
    throw InvalidArgument("root finding needs a polynomial in exactly one variable");
  const auto& var = f.variables().front().str();
  if (f.min_degree_in(var) < 0) throw InvalidArgument("negative exponent in root finding");
  std::vector<double> coeffs(static_cast<std::size_t>(f.degree_in(var)) + 1, 0.0);
  for (const auto& t : f.raw_terms()) {
    const double c = t.coeff.get_d();
    if (!std::isfinite(c)) throw InvalidArgument("coefficient overflows double precision");
    coeffs[static_cast<std::size_t>(t.exps[0])] = c;
  }
  return roots_dense(coeffs, tol);
}

std::vector<RootMatch> match_roots_of_unity(std::span<const std::complex<double>> roots,
                                            Exponent n) {
  if (n < 1) throw InvalidArgument("n must be a positive integer");
  const auto count = static_cast<std::size_t>(n);
  std::vector<Complex> xi(count);
  for (std::size_t k = 0; k < count; ++k)
    xi[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));

  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  pairs.reserve(count * roots.size());
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t r = 0; r < roots.size(); ++r) pairs.emplace_back(std::abs(roots[r] - xi[k]), k, r);
  std::sort(pairs.begin(), pairs.end());

  std::vector<RootMatch> out(count);
  std::vector<bool> xi_used(count, false), root_used(roots.size(), false);
  std::size_t assigned = 0;
  for (const auto& [dist, k, r] : pairs) {
    if (xi_used[k] || root_used[r]) continue;
    xi_used[k] = root_used[r] = true;
    out[k] = {static_cast<int>(k), xi[k], roots[r], dist};
    if (++assigned == count) break;
  }
  out.resize(assigned == count ? count : assigned);
  return out;
}

std::vector<double> coefficients_at(const LaurentPolynomial& f_ap, double p) {
  if (f_ap.min_degree_in("A") < 0) throw InvalidArgument("negative power of A");
  std::vector<double> coeffs(static_cast<std::size_t>(f_ap.degree_in("A")) + 1, 0.0);
  for (const auto& [m, c] : f_ap.terms()) {
    const auto a = static_cast<std::size_t>(m.exponent("A"));
    coeffs[a] += c.get_d() * std::pow(p, static_cast<double>(m.exponent("p")));
  }
  return coeffs;
}

ConvergenceTrace convergence_trace(Exponent n, double p0, double ratio, int steps, double tol) {
  if (n < 1) throw InvalidArgument("n must be a positive integer");
  if (!(p0 > 0.0 && p0 <= 0.1)) throw InvalidArgument("p0 must lie in (0, 0.1]");
  if (!(ratio > 0.0 && ratio < 1.0)) throw InvalidArgument("ratio must lie in (0, 1)");
  if (steps < 2) throw InvalidArgument("at least two steps are required");

  const auto f_ap = glue_substitution(AmalgamParams::defaults(n));
  ConvergenceTrace trace;
  trace.n = n;
  for (int k = 0; k < steps; ++k) {
    TraceStep step;
    step.p = p0 * std::pow(ratio, k);
    step.b = std::pow(step.p, static_cast<double>(n));
    const auto coeffs = coefficients_at(f_ap, step.p);
    auto solved = roots_dense(coeffs, tol);
    if (!solved.converged)
      throw NonConvergence("root finding did not converge at p = " + std::to_string(step.p));
    step.roots = std::move(solved.roots);
    step.matched = match_roots_of_unity(step.roots, n);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace apoly
