#include <gtest/gtest.h>

#include <random>

#include "cubicfold/cert/lines.hpp"
#include "cubicfold/cert/planes.hpp"
#include "cubicfold/cert/smooth.hpp"
#include "cubicfold/families/catalog.hpp"

using namespace cubicfold;

namespace {

CycPoly P6(const std::string& s) { return parse_poly(s, default_names(6)); }

std::vector<Cyclotomic> vec(std::initializer_list<long> xs) {
  std::vector<Cyclotomic> v;
  for (long x : xs) v.push_back(Cyclotomic(x));
  return v;
}

std::vector<Cyclotomic> unit(std::size_t n, std::size_t i) {
  std::vector<Cyclotomic> v(n, Cyclotomic(0));
  v[i] = Cyclotomic(1);
  return v;
}

PlaneInP5 coord_plane(std::size_t a, std::size_t b, std::size_t c) {
  return PlaneInP5::from_basis({unit(6, a), unit(6, b), unit(6, c)});
}

std::uint64_t eval_at(const CycPoly& f, const SpecializationMap& s, const std::vector<std::uint64_t>& x) {
  return detail::eval_mod(detail::reduce_mod(f, s), x, s.prime);
}

}  // namespace

TEST(Smooth, FermatAtSeven) {
  auto x = catalog_member("Fermat").cubic;
  auto c = certify_smooth(x, 7);
  EXPECT_EQ(c.prime, 7u);
  EXPECT_EQ(c.verdict, SmoothVerdict::smooth);
  EXPECT_EQ(c.points_scanned, projective_point_count(6, 7));
  EXPECT_EQ(c.points_scanned, (117649u - 1) / 6);
}

TEST(Smooth, KleinAtTwentyThree) {
  auto x = catalog_member("Klein").cubic;
  auto c = certify_smooth(x, 23);
  EXPECT_EQ(c.prime, 23u);
  EXPECT_EQ(c.verdict, SmoothVerdict::smooth);
  EXPECT_EQ(c.points_scanned, 6728904u);
}

TEST(Smooth, X12WithSurd) {
  auto x = catalog_member("X12").cubic;
  auto c = certify_smooth(x, 13);
  EXPECT_EQ(c.prime, 13u);
  EXPECT_EQ(c.verdict, SmoothVerdict::smooth);
}

TEST(Smooth, X15ReducedModel) {
  auto x = catalog_member("X15").cubic;
  auto c = certify_smooth(x, 31);
  EXPECT_EQ(c.prime, 31u);
  EXPECT_EQ(c.verdict, SmoothVerdict::smooth);
}

TEST(Smooth, ConeIsSingular) {
  auto x = CubicFourfold::plain("cone", P6("x0^3 + x1^3 + x2^3"));
  auto c = certify_smooth(x, 7);
  ASSERT_EQ(c.verdict, SmoothVerdict::singular);
  EXPECT_EQ(to_string(c.verdict), "singular-point-found");
  auto s = find_specialization(1, {}, 7, 7);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(eval_at(x.form.derivative(i), s, c.point), 0u);
  EXPECT_EQ(c.point[0], 0u);
  EXPECT_EQ(c.point[1], 0u);
  EXPECT_EQ(c.point[2], 0u);
}

TEST(Smooth, BadPrimeRejected) {
  auto x = catalog_member("Fermat").cubic;
  SpecializationMap s{1, 3, 1, {}};
  EXPECT_THROW(certify_smooth(x, s), std::invalid_argument);
}

TEST(Smooth, BudgetGivesInconclusive) {
  auto x = catalog_member("Fermat").cubic;
  setenv("CUBICFOLD_BUDGET", "1000", 1);
  auto c = certify_smooth(x, 7);
  unsetenv("CUBICFOLD_BUDGET");
  EXPECT_EQ(c.verdict, SmoothVerdict::inconclusive);
}

TEST(Planes, ContainmentExamples) {
  auto fermat = catalog_member("Fermat").cubic;
  auto p = PlaneInP5::from_basis({vec({1, 0, 0, -1, 0, 0}), vec({0, 1, 0, 0, -1, 0}), vec({0, 0, 1, 0, 0, -1})});
  EXPECT_TRUE(contains_plane(fermat, p));
  EXPECT_FALSE(contains_plane(fermat, coord_plane(0, 1, 2)));

  // reduced Clebsch model: x6 = -(x0+...+x5), so x6 = 0 is the sum of the others
  auto clebsch = catalog_member("Clebsch").cubic;
  auto q = PlaneInP5::from_basis({vec({1, -1, 0, 0, 0, 0}), vec({0, 0, 1, -1, 0, 0}), vec({0, 0, 0, 0, 1, -1})});
  EXPECT_TRUE(contains_plane(clebsch, q));

  auto v1 = catalog_member("V1").cubic;
  EXPECT_FALSE(contains_plane(v1, coord_plane(0, 1, 2)));

  EXPECT_THROW(PlaneInP5::from_basis({unit(6, 0), unit(6, 1), unit(6, 1)}), std::invalid_argument);
  PlaneInP5 bad{{unit(6, 0), unit(6, 1), unit(6, 1)}};
  EXPECT_THROW(contains_plane(fermat, bad), std::invalid_argument);
}

TEST(Planes, BasisChangeInvariance) {
  auto fermat = catalog_member("Fermat").cubic;
  auto a = vec({1, 0, 0, -1, 0, 0}), b = vec({0, 1, 0, 0, -1, 0}), c = vec({0, 0, 1, 0, 0, -1});
  auto sum = [](const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y, long k) {
    std::vector<Cyclotomic> r;
    for (std::size_t i = 0; i < x.size(); ++i) r.push_back(x[i] + Cyclotomic(k) * y[i]);
    return r;
  };
  auto p1 = PlaneInP5::from_basis({a, b, c});
  auto p2 = PlaneInP5::from_basis({sum(a, b, 2), sum(b, c, -3), sum(c, a, 5)});
  EXPECT_EQ(p1, p2);
  EXPECT_TRUE(contains_plane(fermat, p2));
}

TEST(Planes, FermatPatternCount) {
  auto fermat = catalog_member("Fermat").cubic;
  auto planes = search_pattern_planes(fermat, 3);
  EXPECT_EQ(planes.size(), 405u);
  std::set<std::string> keys;
  for (const auto& p : planes) {
    EXPECT_TRUE(contains_plane(fermat, p));
    keys.insert(p.key());
  }
  EXPECT_EQ(keys.size(), planes.size());
}

TEST(Planes, ClebschFermatType) {
  auto clebsch = catalog_member("Clebsch").cubic;
  auto planes = search_pattern_planes(clebsch, 2);
  EXPECT_EQ(planes.size(), 105u);
}

TEST(Planes, G4PlanesFamily) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto e = catalog_member("G4planes", seed);
    auto planes = search_pattern_planes(e.cubic, 6);
    // a_i x0 + b_i x1 = x2 + x3 = x5 = 0 with F(x0,x1) = x0^3 - x1^3
    int found = 0;
    for (unsigned k = 0; k < 3; ++k) {
      std::vector<Cyclotomic> form(6, Cyclotomic::zero(3));
      form[0] = Cyclotomic(1).embed(3);
      form[1] = -Cyclotomic::zeta(3, k);
      auto p = PlaneInP5::from_equations({form, vec({0, 0, 1, 1, 0, 0}), vec({0, 0, 0, 0, 0, 1})}, 6);
      EXPECT_TRUE(contains_plane(e.cubic, p));
      found += static_cast<int>(std::count(planes.begin(), planes.end(), p));
    }
    EXPECT_EQ(found, 3);
    EXPECT_EQ(planes.size(), 3u);
  }
}

TEST(Planes, G8PlanesFamily) {
  auto e = catalog_member("G8planes");
  // s x0 + t x1 = x3 = x4 = 0 with F = x0^3 - x0 x1^2
  for (auto form : {vec({1, 0, 0, 0, 0, 0}), vec({1, 1, 0, 0, 0, 0}), vec({1, -1, 0, 0, 0, 0})}) {
    auto p = PlaneInP5::from_equations({form, vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 0, 1, 0})}, 6);
    EXPECT_TRUE(contains_plane(e.cubic, p));
  }
  auto planes = search_pattern_planes(e.cubic, 2);
  EXPECT_GE(planes.size(), 3u);
}

TEST(Planes, Disjointness) {
  EXPECT_TRUE(planes_disjoint(coord_plane(0, 1, 2), coord_plane(3, 4, 5)));
  EXPECT_FALSE(planes_disjoint(coord_plane(0, 1, 2), coord_plane(0, 1, 2)));
  EXPECT_FALSE(planes_disjoint(coord_plane(0, 1, 2), coord_plane(2, 3, 4)));
  auto w = Cyclotomic::zeta(3);
  auto minus = [](const Cyclotomic& c) {
    std::vector<std::vector<Cyclotomic>> b;
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<Cyclotomic> v(6, Cyclotomic::zero(c.order()));
      v[i] = Cyclotomic(1).embed(c.order());
      v[i + 3] = -c;
      b.push_back(v);
    }
    return PlaneInP5::from_basis(b);
  };
  auto p = minus(Cyclotomic(1).embed(3)), q = minus(w);
  EXPECT_TRUE(planes_disjoint(p, q));
  EXPECT_TRUE(planes_disjoint(q, p));
}

TEST(Planes, V2SplitMemberHasDisjointPlanes) {
  auto x = v2_split_member(0);
  auto planes = search_pattern_planes(x, 3);
  // x_{i+3} = -zeta^k x_i, k = 0, 1, 2
  std::vector<PlaneInP5> graph;
  for (unsigned k = 0; k < 3; ++k) {
    Matrix<Cyclotomic> b;
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<Cyclotomic> v(6, Cyclotomic::zero(3));
      v[i] = Cyclotomic(1).embed(3);
      v[i + 3] = -Cyclotomic::zeta(3, k);
      b.push_back(v);
    }
    graph.push_back(PlaneInP5::from_basis(b));
    EXPECT_TRUE(contains_plane(x, graph.back()));
    EXPECT_NE(std::find(planes.begin(), planes.end(), graph.back()), planes.end());
  }
  EXPECT_TRUE(planes_disjoint(graph[0], graph[1]));
  EXPECT_TRUE(planes_disjoint(graph[0], graph[2]));
  EXPECT_TRUE(planes_disjoint(graph[1], graph[2]));
}

TEST(Lines, FermatSurfaceHas27) {
  auto f = parse_poly("x0^3 + x1^3 + x2^3 + x3^3", default_names(4));
  EXPECT_EQ(count_lines_on_cubic_surface(f, find_specialization(1, {}, 7, 7)), 27u);
  EXPECT_EQ(count_lines_on_cubic_surface(f, find_specialization(1, {}, 13, 13)), 27u);
}

TEST(Lines, SingularSurfaceRejected) {
  auto f = parse_poly("x0^3 - x1^3", default_names(4));
  EXPECT_THROW(count_lines_on_cubic_surface(f, find_specialization(1, {}, 7, 7)), std::domain_error);
}

TEST(Lines, V1FixedSurfaceCountIsAdmissible) {
  // number of F_p-lines on a smooth cubic surface lies in {0,1,2,3,5,7,9,15,27}
  const std::set<std::uint64_t> allowed{0, 1, 2, 3, 5, 7, 9, 15, 27};
  auto x = catalog_member("V1").cubic;
  std::vector<CycPoly> images;
  for (std::size_t i = 0; i < 6; ++i)
    images.push_back(i < 4 ? CycPoly::variable(4, i) : CycPoly(4));
  CycPoly f = substitute(x.form, images, 4);
  for (std::uint64_t p : {7, 13, 19}) {
    auto n = count_lines_on_cubic_surface(f, find_specialization(1, {}, p, p));
    EXPECT_TRUE(allowed.count(n)) << p << ": " << n;
  }
}

TEST(Ruled, Proportional) {
  EXPECT_TRUE(proportional(P6("x0 + 2*x1"), P6("-3*x0 - 6*x1")));
  EXPECT_FALSE(proportional(P6("x0 + 2*x1"), P6("x0 + 3*x1")));
  EXPECT_FALSE(proportional(P6("x0"), CycPoly(6)));
  EXPECT_TRUE(proportional(CycPoly(6), CycPoly(6)));
}

TEST(Ruled, G4MatchesPrintedCondition) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto x = catalog_member("G4", seed).cubic;
    auto c = [&](const char* m) { return x.form.coefficient(P6(m).terms().begin()->first); };
    Cyclotomic alpha = c("x4^2*x2"), beta = c("x4^2*x3"), gamma = c("x5^2*x2"), delta = c("x5^2*x3");
    auto r = ruled_lines_between(x, {unit(6, 2), unit(6, 3)}, {unit(6, 4), unit(6, 5)});
    auto names = std::vector<std::string>{"a2", "a3", "b4", "b5"};
    auto q = [&](const char* s) { return parse_poly(s, names); };
    CycPoly printed = alpha * q("a2*b4^2") + gamma * q("a2*b5^2") + beta * q("a3*b4^2") + delta * q("a3*b5^2");
    EXPECT_TRUE(r.u2v.is_zero());
    EXPECT_TRUE(proportional(r.uv2, printed));
  }
}

TEST(Ruled, G8ConditionAgainstPrinted) {
  auto x = catalog_member("G8").cubic;
  auto r = ruled_lines_between(x, {unit(6, 2), unit(6, 4)}, {unit(6, 3), unit(6, 5)});
  auto names = std::vector<std::string>{"a2", "a4", "b3", "b5"};
  auto q = [&](const char* s) { return parse_poly(s, names); };
  auto c = [&](const char* m) { return x.form.coefficient(P6(m).terms().begin()->first); };
  // two separate binomial conditions
  EXPECT_TRUE(proportional(r.u2v, c("x3*x4^2") * q("b3*a4^2")));
  EXPECT_TRUE(proportional(r.uv2, c("x2*x5^2") * q("a2*b5^2")));
  // the printed single binomial is not one of the two conditions
  EXPECT_FALSE(proportional(r.u2v, q("b3*a4^2 - a2*b5^2")));
  EXPECT_FALSE(proportional(r.uv2, q("b3*a4^2 - a2*b5^2")));
}

TEST(Ruled, PlaneGivesZeroConditions) {
  auto fermat = catalog_member("Fermat").cubic;
  auto r = ruled_lines_between(fermat, {vec({1, 0, 0, -1, 0, 0}), vec({0, 1, 0, 0, -1, 0})},
                               {vec({0, 0, 1, 0, 0, -1}), vec({1, 1, 0, -1, -1, 0})});
  EXPECT_TRUE(r.u2v.is_zero());
  EXPECT_TRUE(r.uv2.is_zero());
}

TEST(Ruled, LineOutsideRejected) {
  auto fermat = catalog_member("Fermat").cubic;
  EXPECT_THROW(ruled_lines_between(fermat, {unit(6, 0), unit(6, 1)}, {unit(6, 2), unit(6, 3)}), std::invalid_argument);
}
