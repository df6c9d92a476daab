#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operad/series.hpp"

using namespace operad;

namespace {

rational_series sin_series(int order) {
  rational_series s = rational_series::zero(order);
  for (int k = 1; k <= order; k += 2) {
    rational c(1);
    c /= rational(factorial(k));
    if ((k / 2) % 2) c = -c;
    s.c[k] = c;
  }
  return s;
}

rational_series arctan_series(int order) {
  rational_series s = rational_series::zero(order);
  for (int k = 1; k <= order; k += 2) {
    rational c(1, k);
    c.canonicalize();
    if ((k / 2) % 2) c = -c;
    s.c[k] = c;
  }
  return s;
}

rational_series mock3_series() {
  // t - t^3/6 + t^5/120
  rational_series f = rational_series::zero(5);
  f.c[1] = 1;
  f.c[3] = make_rational(-1, 6);
  f.c[5] = make_rational(1, 120);
  return f;
}

}  // namespace

TEST_CASE("egf_from_dims sign modes") {
  // LTS dims with alternating weights give the arctan truncation
  std::vector<long> dims = {1, 0, 2, 0, 24};
  std::vector<int> weights = {0, 0, 1, 0, 2};
  rational_series s = egf_from_dims(dims, sign_mode::alternating, weights);
  CHECK(s.at(1) == 1);
  CHECK(s.at(3) == make_rational(-1, 3));
  CHECK(s.at(5) == make_rational(1, 5));
  // tCom^3_1 with euler degrees: t - t^3/6 + t^5/120
  std::vector<long> d2 = {1, 0, 1, 0, 1};
  std::vector<int> degs = {0, 0, 1, 0, 2};
  rational_series e = egf_from_dims(d2, sign_mode::euler, degs);
  CHECK(e.at(3) == make_rational(-1, 6));
  CHECK(e.at(5) == make_rational(1, 120));
  CHECK(egf_from_dims({0, 0, 0}, sign_mode::plain).at(2) == 0);
}

TEST_CASE("lagrange inversion of the identity and the mock series") {
  rational_series id = rational_series::zero(3);
  id.c[1] = 1;
  rational_series inv = lagrange_invert(id, 3);
  CHECK(inv.at(1) == 1);
  CHECK(inv.at(2) == 0);
  CHECK(inv.at(3) == 0);

  rational_series g = lagrange_invert(mock3_series(), 9);
  CHECK(g.at(1) == 1);
  CHECK(g.at(3) == make_rational(1, 6));
  CHECK(g.at(5) == make_rational(3, 40));
  CHECK(is_inverse(mock3_series(), g, 9));
}

TEST_CASE("lagrange inversion agrees with the substitution oracle") {
  // a dense series with even terms
  rational_series f = rational_series::zero(30);
  f.c[1] = 1;
  f.c[2] = make_rational(-1, 2);
  f.c[3] = make_rational(1, 6);
  f.c[4] = make_rational(2, 7);
  rational_series a = lagrange_invert(f, 30);
  rational_series b = invert_by_substitution(f, 30);
  for (int k = 0; k <= 30; ++k) CHECK(a.at(k) == b.at(k));
  // and an odd one through the odd fast path
  rational_series g = lagrange_invert(mock3_series(), 31);
  rational_series h = invert_by_substitution(mock3_series(), 31);
  for (int k = 0; k <= 31; ++k) CHECK(g.at(k) == h.at(k));
}

TEST_CASE("arctan and tan are mutually inverse; sin/arcsin to order 9") {
  rational_series at = arctan_series(9);
  rational_series tan = lagrange_invert(at, 9);
  CHECK(tan.at(3) == make_rational(1, 3));
  CHECK(tan.at(5) == make_rational(2, 15));
  CHECK(tan.at(7) == make_rational(17, 315));
  CHECK(is_inverse(at, tan, 9));
  rational_series sn = sin_series(9);
  rational_series arcsin = lagrange_invert(sn, 9);
  CHECK(arcsin.at(3) == make_rational(1, 6));
  CHECK(arcsin.at(5) == make_rational(3, 40));
  CHECK(arcsin.at(7) == make_rational(15, 336));
  CHECK(is_inverse(sn, arcsin, 9));
  CHECK(is_inverse(arcsin, sn, 9));
}

TEST_CASE("tangent dims from Bernoulli numbers") {
  bernoulli_context bc;
  CHECK(tangent_dims(bc, 1) == 1);
  CHECK(tangent_dims(bc, 2) == 2);
  CHECK(tangent_dims(bc, 3) == 16);
  CHECK(tangent_dims(bc, 4) == 272);
  CHECK(tangent_dims(bc, 5) == 7936);
  // cross-check against the inverse of arctan
  rational_series tan = lagrange_invert(arctan_series(11), 11);
  for (int n = 1; n <= 5; ++n) {
    rational expect = rational(tangent_dims(bc, n)) / rational(factorial(2 * n - 1));
    CHECK(tan.at(2 * n - 1) == expect);
  }
}

TEST_CASE("closed form a_n matches the Lagrange coefficients") {
  CHECK(inverse_coefficient_an(0) == 1);
  CHECK(inverse_coefficient_an(1) == make_rational(1, 6));
  CHECK(inverse_coefficient_an(2) == make_rational(3, 40));
  rational_series g = lagrange_invert(mock3_series(), 61);
  for (int n = 0; n <= 30; ++n) CHECK(inverse_coefficient_an(n) == g.at(2 * n + 1));
}

TEST_CASE("positivity scans") {
  rational_series g = lagrange_invert(mock3_series(), 101);
  CHECK(!positivity_scan(g).has_value());
  // the mock n = 2 series has a negative coefficient in its inverse
  rational_series f = rational_series::zero(3);
  f.c[1] = 1;
  f.c[2] = make_rational(-1, 2);
  f.c[3] = make_rational(1, 6);
  rational_series inv = lagrange_invert(f, 20);
  auto neg = positivity_scan(inv);
  REQUIRE(neg.has_value());
  CHECK(*neg > 1);
}

TEST_CASE("the paper recurrence holds for a_n and propagates b_n") {
  recurrence_spec spec = recurrence_spec::paper_three_term();
  std::vector<rational> a;
  for (int n = 0; n <= 60; ++n) a.push_back(inverse_coefficient_an(n));
  recurrence_report rep = recurrence_verify(a, spec, 2, 60);
  CHECK(rep.ok);
  // negative control
  std::vector<rational> bad = a;
  bad[30] += 1;
  recurrence_report rep2 = recurrence_verify(bad, spec, 2, 60);
  CHECK_FALSE(rep2.ok);
  REQUIRE(!rep2.violations.empty());
  CHECK(rep2.violations.front() == 30);

  std::vector<rational> b = propagate_recurrence(spec, {rational(1), rational(1)}, 60);
  recurrence_report rep3 = recurrence_verify(b, spec, 2, 60);
  CHECK(rep3.ok);
}

TEST_CASE("ratio report converges to the characteristic roots") {
  asymptotics_report rep = ratio_report(200);
  CHECK(std::abs(rep.lambda_minus - 0.9905853066) < 1e-9);
  CHECK(std::abs(rep.lambda_plus - 3.696914693) < 1e-8);
  CHECK(std::abs(rep.a_ratio_extrapolated - rep.lambda_minus) < 1e-6);
  CHECK(std::abs(rep.b_ratio_extrapolated - rep.lambda_plus) < 1e-4);
  CHECK(rep.ab_ratio_strictly_decreasing);
  CHECK(rep.b_ratio_at_least_one);
  CHECK(std::abs(rep.radius_constant - 16.0 * (3.0 + std::sqrt(3.0)) / 75.0) < 1e-12);
}

TEST_CASE("series text round trip") {
  rational_series s = parse_series("1, -1/2, 0, 2/3");
  CHECK(s.order() == 3);
  CHECK(s.at(1) == make_rational(-1, 2));
  CHECK(series_text(s) == "1,-1/2,0,2/3");
}
