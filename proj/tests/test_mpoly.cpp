#include <gtest/gtest.h>

#include "cubicfold/mpoly/linear_section.hpp"

using namespace cubicfold;

namespace {
const auto X6 = default_names(6);

Monomial mono(std::initializer_list<int> idx, std::size_t n = 6) { return Monomial::of_indices(n, idx); }

Matrix<Cyclotomic> diag(const std::vector<Cyclotomic>& d) {
  Matrix<Cyclotomic> m(d.size(), std::vector<Cyclotomic>(d.size(), Cyclotomic(0L)));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}
}  // namespace

TEST(Parse, TwoTermCubic) {
  auto p = parse_poly("x0^3 + x1^3", X6);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient(mono({0, 0, 0})), Cyclotomic(1L));
  EXPECT_EQ(p.coefficient(mono({1, 1, 1})), Cyclotomic(1L));
  EXPECT_TRUE(p.is_homogeneous(3));
}

TEST(Parse, BoundParameters) {
  std::map<std::string, Cyclotomic> params{{"a", Cyclotomic(2L)}, {"b", Cyclotomic(make_rational(-1, 3))}};
  auto p = parse_poly(
      "x0^2*x4 + x1^2*x2 + x0*x2^2 + x3^2*x5 + x3*x4^2 + x1*x5^2 + a*x0*x1*x3 + b*x2*x4*x5", X6, params);
  EXPECT_EQ(p.size(), 8u);
  EXPECT_EQ(p.coefficient(mono({0, 1, 3})), Cyclotomic(2L));
  EXPECT_EQ(p.coefficient(mono({2, 4, 5})), Cyclotomic(make_rational(-1, 3)));
}

TEST(Parse, SurdCoefficients) {
  auto p = parse_poly("x0^3 - 3*(sqrt(3)+1)*x0*x1*x2", X6);
  Cyclotomic c = p.coefficient(mono({0, 1, 2}));
  EXPECT_EQ(c.order(), 12u);
  Cyclotomic s = c / Cyclotomic(-3L) - Cyclotomic(1L);
  EXPECT_EQ(s * s, Cyclotomic(3L));
  auto q = parse_poly("i*x0 + zeta(3)*x1", {"x0", "x1"});
  EXPECT_EQ(q.coefficient(Monomial::variable(2, 0)).order(), 12u);
  EXPECT_EQ(q.coefficient(Monomial::variable(2, 0)), Cyclotomic::zeta(4));
}

TEST(Parse, Errors) {
  try {
    parse_poly("x0^3 + * x1", X6);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 7u);
  }
  EXPECT_THROW(parse_poly("x0^3 + y^3", X6), ParseError);
  EXPECT_THROW(parse_poly("zeta(0)*x0", X6), ParseError);
  EXPECT_THROW(parse_poly("(x0 + x1", X6), ParseError);
  EXPECT_THROW(parse_poly("x0/2", X6), ParseError);
}

TEST(Format, GrevlexAndRoundTrip) {
  auto p = parse_poly("x5^3 + x0^3 - 2*x0*x1*x2 + 1/2*x1^2*x5", X6);
  EXPECT_EQ(format_poly(p), "x0^3 - 2*x0*x1*x2 + 1/2*x1^2*x5 + x5^3");
  auto q = parse_poly("-(zeta(12) - 1/3)*x0^2*x3 + zeta(12)^5*x4^3", X6);
  EXPECT_EQ(parse_poly(format_poly(q), X6), q);
  EXPECT_EQ(format_poly(CycPoly(6)), "0");
}

TEST(Substitute, IdentityAndPermutation) {
  auto f = parse_poly("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", X6);
  EXPECT_EQ(substitute_linear(f, identity_matrix<Cyclotomic>(6)), f);
  Matrix<Cyclotomic> perm(6, std::vector<Cyclotomic>(6, Cyclotomic(0L)));
  std::vector<int> pi{3, 0, 5, 1, 2, 4};
  for (int i = 0; i < 6; ++i) perm[i][pi[i]] = Cyclotomic(1L);
  EXPECT_EQ(substitute_linear(f, perm), f);
}

TEST(Substitute, SplitFormUnderSigma2) {
  auto f = parse_poly("x0^3 + 2*x0*x1*x2 - x1^2*x2 + x3^3 - x3*x4*x5 + 3*x5^3 + x4^2*x5", X6);
  Cyclotomic z = Cyclotomic::zeta(3);
  auto g = substitute_linear(f, diag({Cyclotomic(1L), Cyclotomic(1L), Cyclotomic(1L), z, z, z}));
  EXPECT_EQ(g, f);
}

TEST(Substitute, SideConvention) {
  // F(Mx) with M sending x0 -> x1: F = x0 gives x1
  auto f = parse_poly("x0", {"x0", "x1"});
  Matrix<Cyclotomic> m{{Cyclotomic(0L), Cyclotomic(1L)}, {Cyclotomic(1L), Cyclotomic(0L)}};
  EXPECT_EQ(substitute_linear(f, m), parse_poly("x1", {"x0", "x1"}));
  EXPECT_THROW(substitute_linear(f, identity_matrix<Cyclotomic>(3)), std::invalid_argument);
}

TEST(Derivatives, Basic) {
  auto d = partial_derivatives(parse_poly("x0^3", X6));
  EXPECT_EQ(d[0], parse_poly("3*x0^2", X6));
  auto fd = partial_derivatives(parse_poly("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", X6));
  for (int i = 0; i < 6; ++i) EXPECT_EQ(fd[i], parse_poly("3*x" + std::to_string(i) + "^2", X6));
  auto k = parse_poly("x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0 + x5^3", X6);
  EXPECT_EQ(partial_derivatives(k)[0], parse_poly("2*x0*x1 + x4^2", X6));
}

TEST(Evaluate, CoordinatePoints) {
  auto fermat = parse_poly("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", X6);
  std::vector<Cyclotomic> e0(6, Cyclotomic(0L)), e2 = e0, e5 = e0;
  e0[0] = e2[2] = e5[5] = Cyclotomic(1L);
  EXPECT_EQ(fermat.evaluate(e0), Cyclotomic(1L));
  auto f5 = parse_poly("x0^3 - x1^3 + 2*x2*x5*x0 + x3*x4*x1 + x2^2*x4 + x2*x3^2 + x3*x5^2 + x4^2*x5", X6);
  EXPECT_EQ(f5.coefficient(mono({2, 2, 2})), Cyclotomic(0L));
  EXPECT_TRUE(is_zero(f5.evaluate(e2)));
  auto klein = parse_poly("x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0 + x5^3", X6);
  EXPECT_EQ(klein.evaluate(e5), klein.coefficient(mono({5, 5, 5})));
  EXPECT_EQ(klein.evaluate(e5), Cyclotomic(1L));
}

TEST(LinearSection, X15Reduction) {
  auto names = default_names(8);
  std::string cubic;
  for (int i = 0; i < 8; ++i) cubic += (i ? " + x" : "x") + std::to_string(i) + "^3";
  auto f = parse_poly(cubic, names);
  auto s = make_linear_section({parse_poly("x0 + x1 + x2", names), parse_poly("x3 + x4 + x5 + x6 + x7", names)}, 8,
                               std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
  auto r = restrict_to_linear_section(f, s);
  auto y = default_names(6, "y");
  auto expected = parse_poly(
      "(-y0-y1)^3 + y0^3 + y1^3 + y2^3 + y3^3 + y4^3 + y5^3 + (-y2-y3-y4-y5)^3", y);
  EXPECT_EQ(r, expected);
}

TEST(LinearSection, ClebschAndTrivial) {
  auto names = default_names(7);
  std::string cubic;
  for (int i = 0; i < 7; ++i) cubic += (i ? " + x" : "x") + std::to_string(i) + "^3";
  auto s = make_linear_section({parse_poly("x0+x1+x2+x3+x4+x5+x6", names)}, 7);
  auto r = restrict_to_linear_section(parse_poly(cubic, names), s);
  EXPECT_EQ(r.nvars(), 6u);
  EXPECT_TRUE(r.is_homogeneous(3));
  EXPECT_FALSE(r.is_zero());

  auto plane = make_linear_section({parse_poly("x4", X6)}, 6);
  EXPECT_TRUE(restrict_to_linear_section(parse_poly("x4^3", X6), plane).is_zero());
  EXPECT_THROW(make_linear_section({parse_poly("x0", X6), parse_poly("2*x0", X6)}, 6), std::invalid_argument);
}
