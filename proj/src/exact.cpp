#include "operad/exact.hpp"

namespace operad {

bigint factorial(unsigned long n) {
  bigint r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bigint double_factorial(long n) {
  if (n <= 0) return 1;
  bigint r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

bigint binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  bigint r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_string(const rational& r) {
  return r.get_str();
}

const rational& bernoulli_context::bernoulli(unsigned long n) const {
  while (memo_.size() <= n) {
    unsigned long m = memo_.size();
    if (m == 0) {
      memo_.emplace_back(1);
      continue;
    }
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    rational acc(0);
    for (unsigned long k = 0; k < m; ++k) acc += rational(binomial(m + 1, k)) * memo_[k];
    rational b = -acc / rational(binomial(m + 1, m));
    b.canonicalize();
    memo_.push_back(b);
  }
  return memo_[n];
}

}  // namespace operad
