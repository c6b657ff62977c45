#include <doctest.h>

#include "support.hpp"
#include "vanishlab/density.hpp"

using namespace testing_support;

TEST_CASE("ray membership is exact") {
  CHECK(on_ray({1, 1}, {Rational(1, 2), Rational(1, 2)}));
  CHECK(on_ray({0, 0}, {Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(on_ray({-1, -1}, {Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(on_ray({2, 1}, {1, 1}));
  CHECK(on_ray({0, 0}, {0, 0}));
  CHECK_FALSE(on_ray({1, 0}, {0, 0}));
  CHECK(on_ray({4, -6}, {Rational(2, 3), -1}));
}

TEST_CASE("ray hits") {
  auto r = ray_hits_support(P("x + y"), {Rational(1, 2), Rational(1, 2)}, 2);
  CHECK(r.verdict == RayVerdict::Found);
  REQUIRE(r.hits.size() == 1);
  CHECK(r.hits[0].m == 2);
  CHECK(r.hits[0].lambda == ExponentVector{1, 1});

  auto p = P("3*x^2*y - x^-1 + 5*y^-1");
  auto r1 = ray_hits_support(p, {-1, 0}, 1);
  REQUIRE(r1.hits.size() == 1);
  CHECK(r1.hits[0].m == 1);
  CHECK(r1.hits[0].lambda == ExponentVector{-1, 0});

  const VarNames x{"x"};
  auto r0 = ray_hits_support(P("x^-1 + x", x), {0}, 2);
  REQUIRE(r0.hits.size() == 1);
  CHECK(r0.hits[0].m == 2);
  CHECK(r0.hits[0].lambda == ExponentVector{0});

  CHECK_THROWS_AS(ray_hits_support(P("x + y"), {1, 1}, 3), DomainError);
  CHECK_THROWS_AS(ray_hits_support(P("x + y"), {1, 0}, 0), DomainError);

  auto none = ray_hits_support(P("x + y"), {Rational(1, 3), Rational(2, 3)}, 2);
  CHECK(none.verdict == RayVerdict::Inconclusive);
  CHECK(std::string(to_string(none.verdict)) == "inconclusive");
}

TEST_CASE("every hit re-verifies") {
  auto p = P("x + y + x^-1*y^2 - 2");
  auto r = ray_hits_support(p, {0, Rational(1, 2)}, 5);
  for (const auto& h : r.hits) {
    CHECK(pow(p, h.m).coeff_at(h.lambda) != 0);
    CHECK(on_ray(h.lambda, r.u));
  }
}

TEST_CASE("repeated hits") {
  CHECK(repeated_hits(P("x + y"), {Rational(1, 2), Rational(1, 2)}, 6) ==
        std::vector<std::int64_t>{2, 4, 6});
  CHECK(repeated_hits(P("1 + x", {"x"}), {1}, 3) == std::vector<std::int64_t>{1, 2, 3});
  CHECK(repeated_hits(P("x^2 - 3*x*y + y^-1"), {2, 0}, 4) ==
        std::vector<std::int64_t>{1, 2, 3, 4});
}

TEST_CASE("homogeneous density") {
  CHECK(homogeneous_density(P("x + y"), {Rational(1, 2), Rational(1, 2)}, 4) ==
        std::vector<std::int64_t>{2, 4});
  CHECK(homogeneous_density(P("x", {"x"}), {1}, 5) == std::vector<std::int64_t>{1, 2, 3, 4, 5});
  CHECK(homogeneous_density(P("x^2 + x*y"), {2, 0}, 3) == std::vector<std::int64_t>{1, 2, 3});
  CHECK_THROWS_AS(homogeneous_density(P("x + y^2"), {1, 0}, 3), DomainError);
  CHECK_THROWS_AS(homogeneous_density(P("x*y^-1 + 1"), {0, 0}, 3), DomainError);
}

TEST_CASE("constant-term checks") {
  const VarNames x{"x"};
  auto a = dk_check(P("x^-1 + x", x), 4);
  CHECK(a.verdict == DkVerdict::HypothesisFails);
  CHECK(a.first_nonzero == 2);
  CHECK(a.constant_terms[1] == 2);

  auto b = dk_check(P("x^-1", x), 6);
  CHECK(b.verdict == DkVerdict::Consistent);
  CHECK_FALSE(b.origin_in_polytope);
  for (const auto& c : b.constant_terms) CHECK(c == 0);

  // f = z^-beta P^N with P = x + y, beta = N u = (1,1), N = 2.
  auto f = pow(P("x + y"), 2).shifted({-1, -1});
  auto c = dk_check(f, 3);
  CHECK(c.verdict == DkVerdict::HypothesisFails);
  CHECK(c.first_nonzero == 1);
  CHECK(c.constant_terms[0] == 2);
  CHECK(c.origin_in_polytope);

  CHECK_THROWS_AS(dk_check(LaurentPoly(1), 3), DomainError);
  CHECK(std::string(to_string(DkVerdict::PredictsNonzero)) == "predicts-nonzero");
}

TEST_CASE("no polynomial instance stays in the alarm class") {
  // Polynomials with 0 in Poly(f) and random coefficients: a nonzero
  // constant term appears within M = 12.
  std::mt19937_64 rng(61);
  for (int t = 0; t < 25; ++t) {
    auto f = random_poly(rng, 2, 3, -2, 2);
    if (!contains_point(newton_polytope(f), {0, 0})) continue;
    CHECK(dk_check(f, 12).verdict != DkVerdict::PredictsNonzero);
  }
}
