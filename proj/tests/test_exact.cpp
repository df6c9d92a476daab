#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operad/exact.hpp"

using namespace operad;

TEST_CASE("bernoulli numbers by the defining recurrence") {
  bernoulli_context bc;
  CHECK(bc.bernoulli(0) == rational(1));
  CHECK(bc.bernoulli(1) == make_rational(-1, 2));
  CHECK(bc.bernoulli(2) == make_rational(1, 6));
  CHECK(bc.bernoulli(4) == make_rational(-1, 30));
  CHECK(bc.bernoulli(6) == make_rational(1, 42));
  CHECK(bc.bernoulli(8) == make_rational(-1, 30));
  CHECK(bc.bernoulli(12) == make_rational(-691, 2730));
  for (unsigned n = 3; n <= 31; n += 2) CHECK(bc.bernoulli(n) == 0);
  // recurrence identity sum_{k<=n} C(n+1,k) B_k = 0
  for (unsigned n = 1; n <= 40; ++n) {
    rational acc(0);
    for (unsigned k = 0; k <= n; ++k) acc += rational(binomial(n + 1, k)) * bc.bernoulli(k);
    CHECK(acc == 0);
  }
}

TEST_CASE("factorials and binomials are exact big integers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(14) == bigint("87178291200"));
  // (2n-2)! at n = 8 overflows 64 bits
  CHECK(factorial(20) == bigint("2432902008176640000") * 1);
  CHECK(binomial(40, 20) == bigint("137846528820"));
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(17) == bigint("34459425"));
}

TEST_CASE("rational round trips exactly") {
  rational a = make_rational(22, 7);
  rational b = make_rational(-3, 11);
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(to_string(make_rational(8, 4)) == "2");
}
