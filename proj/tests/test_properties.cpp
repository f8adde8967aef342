#include <gtest/gtest.h>

#include "apoly/elimination.hpp"
#include "apoly/newton.hpp"
#include "apoly/parse.hpp"
#include "support/oracles.hpp"

namespace apoly {
namespace {

using testing::random_nonzero_poly;
using testing::random_poly;
using testing::Rng;

const std::vector<VarName> kVars{"x", "y", "z"};

TEST(RingProperties, Axioms) {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_poly(rng, kVars, 5, -3, 3, 9);
    const auto g = random_poly(rng, kVars, 5, -3, 3, 9);
    const auto h = random_poly(rng, kVars, 5, -3, 3, 9);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f * LaurentPolynomial::constant(1), f);
    EXPECT_TRUE((f * LaurentPolynomial{}).is_zero());
    EXPECT_EQ(-(-f), f);
  }
}

TEST(NormalizeProperties, IdempotentAndScaleInvariant) {
  Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_nonzero_poly(rng, kVars, 6, -3, 3, 30);
    const auto n = normalize(f);
    EXPECT_EQ(normalize(n), n);
    EXPECT_EQ(content(n), 1);
    for (const auto& v : n.variables()) EXPECT_EQ(n.min_degree_in(v.str()), 0);
    EXPECT_GT(n.leading_term().second, 0);
    const auto scaled = f * testing::mono(-testing::uniform(rng, 1, 50), Monomial{{"x", 2}, {"z", -5}});
    EXPECT_EQ(normalize(scaled), n);
  }
}

TEST(SubstitutionProperties, RingHomomorphism) {
  Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    MonomialMap map;
    for (const auto& v : kVars) {
      Monomial m;
      for (const VarName w : {"s", "t"}) m = m * Monomial::of(w, testing::uniform(rng, -3, 3));
      map.emplace(v, m);
    }
    const auto f = random_poly(rng, kVars, 5, -3, 3, 9);
    const auto g = random_poly(rng, kVars, 5, -3, 3, 9);
    EXPECT_EQ(substitute_monomials(f * g, map), substitute_monomials(f, map) * substitute_monomials(g, map));
    EXPECT_EQ(substitute_monomials(f + g, map), substitute_monomials(f, map) + substitute_monomials(g, map));
  }
}

TEST(SpecializeProperties, AtZeroKeepsDegreeZeroTerms) {
  Rng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_poly(rng, kVars, 8, 0, 3, 9);
    std::vector<std::pair<Monomial, Integer>> kept;
    for (const auto& [m, c] : f.terms())
      if (m.exponent("y") == 0) kept.emplace_back(m, c);
    EXPECT_EQ(specialize(f, "y", 0), LaurentPolynomial::from_terms(kept));
  }
}

TEST(SpecializeProperties, Homomorphism) {
  Rng rng(105);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_poly(rng, kVars, 5, 0, 3, 9);
    const auto g = random_poly(rng, kVars, 5, 0, 3, 9);
    const Integer value = testing::uniform(rng, -4, 4);
    EXPECT_EQ(specialize(f * g, "z", value), specialize(f, "z", value) * specialize(g, "z", value));
  }
}

TEST(DivisionProperties, RoundTrip) {
  Rng rng(106);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_poly(rng, kVars, 5, -3, 3, 9);
    const auto g = random_nonzero_poly(rng, kVars, 5, -3, 3, 9);
    const auto q = divide_exact(f * g, g);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, f);
    if (g.term_count() > 1) {
      const auto r = divide_exact(f * g + LaurentPolynomial::constant(1), g);
      if (r) EXPECT_EQ(*r * g, f * g + LaurentPolynomial::constant(1));
    }
  }
}

TEST(ResultantProperties, Antisymmetry) {
  Rng rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = static_cast<int>(testing::uniform(rng, 1, 3));
    const int n = static_cast<int>(testing::uniform(rng, 1, 3));
    const auto f = testing::random_in_var(rng, "v", m, {"a", "b"}, 9);
    const auto g = testing::random_in_var(rng, "v", n, {"a", "b"}, 9);
    const auto sign = LaurentPolynomial::constant((m * n) % 2 == 0 ? 1 : -1);
    EXPECT_EQ(resultant(g, f, "v"), sign * resultant(f, g, "v"));
  }
}

TEST(ResultantProperties, Multiplicative) {
  Rng rng(108);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f1 = testing::random_in_var(rng, "v", static_cast<int>(testing::uniform(rng, 1, 2)), {"a"}, 9);
    const auto f2 = testing::random_in_var(rng, "v", static_cast<int>(testing::uniform(rng, 1, 2)), {"a"}, 9);
    const auto g = testing::random_in_var(rng, "v", static_cast<int>(testing::uniform(rng, 1, 3)), {"a"}, 9);
    EXPECT_EQ(resultant(f1 * f2, g, "v"), resultant(f1, g, "v") * resultant(f2, g, "v"));
  }
}

TEST(ResultantProperties, DegreeOneIsSubstitution) {
  // Res_v(f, v - h) = (-1)^deg f * f(h).
  Rng rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = static_cast<int>(testing::uniform(rng, 1, 4));
    const auto f = testing::random_in_var(rng, "v", m, {"a", "b"}, 9);
    const auto h = random_poly(rng, {"a", "b"}, 3, -2, 2, 9);
    const auto g = LaurentPolynomial::variable("v") - h;
    const auto sign = LaurentPolynomial::constant(m % 2 == 0 ? 1 : -1);
    EXPECT_EQ(resultant(f, g, "v"), sign * testing::evaluate_at(f, "v", h));
  }
}

TEST(ResultantProperties, BareissMatchesCofactorOnSylvester) {
  Rng rng(110);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing::random_in_var(rng, "v", static_cast<int>(testing::uniform(rng, 1, 3)), {"a", "b"}, 9);
    const auto g = testing::random_in_var(rng, "v", static_cast<int>(testing::uniform(rng, 0, 3)), {"a", "b"}, 9);
    EXPECT_EQ(resultant(f, g, "v"), determinant_naive(sylvester(f, g, "v").matrix));
  }
}

bool agree_up_to_sign_and_reversal(const EdgePolynomial& a, const EdgePolynomial& b) {
  return a == b || a == b.negated() || a == b.reversed() || a == b.reversed().negated();
}

TEST(EdgeProperties, MethodsAgreeAndBasisChangeIsIrrelevant) {
  Rng rng(111);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_nonzero_poly(rng, {"x", "y"}, 8, 0, 6, 9);
    const auto polygon = newton_polygon(f, "x", "y");
    if (polygon.vertices.size() < 2) continue;
    for (const auto& e : edges(polygon)) {
      const auto bc = basis_change_for_edge(e);
      const auto sub = edge_polynomial_substitution(f, e, bc);
      EXPECT_TRUE(agree_up_to_sign_and_reversal(sub, edge_polynomial_direct(f, e)));
      EXPECT_EQ(sub.degree(), static_cast<std::size_t>(e.lattice_length()));
      for (Exponent k = -2; k <= 2; ++k) {
        const BasisChange shifted{bc.p, bc.q, bc.a + k * bc.p, bc.b + k * bc.q};
        EXPECT_EQ(edge_polynomial_substitution(f, e, shifted), sub);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(EdgeProperties, InvariantUnderMonomialShift) {
  Rng rng(112);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_nonzero_poly(rng, {"x", "y"}, 8, 0, 6, 9);
    const auto shifted = f * testing::mono(1, Monomial{{"x", 3}, {"y", -2}});
    const auto pa = newton_polygon(f, "x", "y"), pb = newton_polygon(shifted, "x", "y");
    if (pa.vertices.size() < 2) continue;
    const auto ea = edges(pa), eb = edges(pb);
    ASSERT_EQ(ea.size(), eb.size());
    for (std::size_t k = 0; k < ea.size(); ++k) {
      EXPECT_EQ(ea[k].slope, eb[k].slope);
      EXPECT_EQ(edge_polynomial_direct(f, ea[k]), edge_polynomial_direct(shifted, eb[k]));
    }
  }
}

}  // namespace
}  // namespace apoly
