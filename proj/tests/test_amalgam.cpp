#include <gtest/gtest.h>

#include "apoly/amalgam.hpp"
#include "apoly/parse.hpp"

namespace apoly {
namespace {

LaurentPolynomial P(const char* text) { return parse_poly(text); }

LaurentPolynomial term(long c, Exponent a, Exponent p) {
  return LaurentPolynomial::monomial(c, Monomial{{"A", a}, {"p", p}});
}

TEST(Catalog, FigureEight) {
  const auto f = catalog_lookup("fig8");
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, P("-L + L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + L*M^6 - L*M^8"));
  EXPECT_FALSE(catalog_lookup("trefoil").has_value());
  EXPECT_EQ(catalog_names(), std::vector<std::string_view>{"fig8"});
}

TEST(Gluing, Validation) {
  EXPECT_EQ(GluingData{}.determinant(), 1);
  EXPECT_NO_THROW(GluingData{}.validate());
  EXPECT_NO_THROW((GluingData{3, 1, 4, 1}.validate()));
  EXPECT_THROW((GluingData{2, 0, 0, 2}.validate()), InvalidGluing);
  EXPECT_THROW(AmalgamParams::defaults(0).validate(), InvalidArgument);
  AmalgamParams bad = AmalgamParams::defaults(2);
  bad.base = P("x + L");
  EXPECT_THROW(bad.validate(), WrongArity);
}

TEST(Gluing, DefaultImages) {
  for (Exponent n = 1; n <= 4; ++n) {
    const auto params = AmalgamParams::defaults(n);
    EXPECT_EQ(meridian_image(params), (Monomial{{"A", n}, {"p", -1}}));
    EXPECT_EQ(longitude_image(params), (Monomial{{"A", -3 * n}, {"p", 4}}));
  }
}

TEST(Gluing, ImagesInvertTheGluing) {
  // l = mu^r lambda^s and m = mu^u lambda^v must map to A^n and p.
  for (const GluingData g : {GluingData{}, GluingData{3, 1, 4, 1}, GluingData{2, 3, 1, 2}}) {
    AmalgamParams params = AmalgamParams::defaults(3);
    params.gluing = g;
    const auto mu = meridian_image(params), lambda = longitude_image(params);
    EXPECT_EQ(mu.pow(g.r) * lambda.pow(g.s), Monomial::of("A", 3));
    EXPECT_EQ(mu.pow(g.u) * lambda.pow(g.v), Monomial::of("p"));
  }
}

TEST(GlueSubstitution, SevenTermFamily) {
  for (Exponent n = 1; n <= 6; ++n) {
    const auto expected = term(-1, 0, 8) + term(1, 2 * n, 6) + term(1, 7 * n, 0) +
                          term(2, 4 * n, 4) + term(1, n, 8) + term(1, 6 * n, 2) +
                          term(-1, 8 * n, 0);
    const auto f = glue_substitution(AmalgamParams::defaults(n));
    EXPECT_TRUE(f == expected || f == -expected) << "n = " << n << ": " << f.to_string();
  }
}

TEST(EliminateP, DegreeOneIsRenaming) {
  const auto f = glue_substitution(AmalgamParams::defaults(1));
  MonomialMap rename;
  rename.emplace("A", Monomial::of("A"));
  rename.emplace("p", Monomial::of("B"));
  EXPECT_EQ(eliminate_p(f, 1), normalize(substitute_monomials(f, rename)));
}

TEST(ResultantChain, AgreesWithSubstitutionRoute) {
  for (Exponent n = 1; n <= 3; ++n) {
    const auto params = AmalgamParams::defaults(n);
    const auto chain = resultant_chain(params);
    const auto direct = eliminate_p(glue_substitution(params), n);
    EXPECT_TRUE(chain == direct || chain == -direct) << "n = " << n;
  }
}

TEST(UnityReport, MultiplicityGrowsWithN) {
  for (Exponent n = 1; n <= 4; ++n) {
    const auto report = unity_report(AmalgamParams::defaults(n));
    EXPECT_TRUE(report.vertical_edge_found) << "n = " << n;
    EXPECT_EQ(report.multiplicity, static_cast<unsigned>(n)) << "n = " << n;
    EXPECT_EQ(report.n, n);
  }
}

TEST(UnityReport, FiberAtFive) {
  const auto report = unity_report(AmalgamParams::defaults(5));
  EXPECT_EQ(report.fiber_polynomial, P("A^5 - 1").pow(5));
  EXPECT_EQ(report.multiplicity, 5u);
}

TEST(UnityReport, NoVerticalEdge) {
  const auto report = unity_report_for(P("1 + A*B + A^2*B^3"), 2);
  EXPECT_FALSE(report.vertical_edge_found);
  EXPECT_EQ(report.multiplicity, 0u);
}

}  // namespace
}  // namespace apoly
