#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace operad {

using bigint = mpz_class;
using rational = mpq_class;

inline rational make_rational(long num, long den = 1) {
  rational r(num, den);
  r.canonicalize();
  return r;
}

bigint factorial(unsigned long n);

// (2n-1)!!-style products; double_factorial(-1) = double_factorial(0) = 1.
bigint double_factorial(long n);

bigint binomial(unsigned long n, unsigned long k);

// "p/q" with optional sign, "p" when q = 1.
std::string to_string(const rational& r);

// Bernoulli numbers by the defining recurrence sum_{k<=n} C(n+1,k) B_k = 0,
// so B_1 = -1/2.  The memo table lives in the context, not in a global.
class bernoulli_context {
 public:
  const rational& bernoulli(unsigned long n) const;

 private:
  mutable std::vector<rational> memo_;
};

}  // namespace operad
