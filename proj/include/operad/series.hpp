#pragma once

#include <optional>
#include <string>
#include <vector>

#include "operad/exact.hpp"

namespace operad {

enum class series_flavor { ordinary, exponential };

// Truncated power series with exact rational coefficients c0..cN.
struct rational_series {
  series_flavor flavor = series_flavor::ordinary;
  std::vector<rational> c;  // c[k] is the coefficient of t^k

  int order() const { return static_cast<int>(c.size()) - 1; }
  rational at(int k) const { return k < static_cast<int>(c.size()) ? c[k] : rational(0); }
  static rational_series zero(int order, series_flavor f = series_flavor::ordinary) {
    rational_series s;
    s.flavor = f;
    s.c.assign(order + 1, rational(0));
    return s;
  }
};

enum class sign_mode { plain, alternating, euler };

// Sum of sign(n) * dims[n-1] / n! * t^n.  `alternating` takes (-1)^weight
// from the supplied per-arity weights; `euler` takes (-1)^degree from the
// per-arity homological degrees.
rational_series egf_from_dims(const std::vector<long>& dims, sign_mode mode,
                              const std::vector<int>& grading = {}, int order = -1);

rational_series mul_series(const rational_series& a, const rational_series& b, int order);
rational_series compose_series(const rational_series& f, const rational_series& g, int order);
bool is_inverse(const rational_series& f, const rational_series& g, int order);

// Compositional inverse to the given order via Lagrange's formula; requires
// c0 = 0 and c1 != 0.
rational_series lagrange_invert(const rational_series& f, int order);

// Undetermined-coefficients inversion (test oracle).
rational_series invert_by_substitution(const rational_series& f, int order);

std::optional<int> positivity_scan(const rational_series& f);  // least index with negative coeff

// dim Com_inf3(2n-1) = 2^(2n) (2^(2n)-1) |B_(2n)| / (2n)
bigint tangent_dims(const bernoulli_context& bc, int n);

// Closed form for the n-th coefficient of h, where the inverse of
// t - t^3/6 + t^5/120 is t h(t^2).
rational inverse_coefficient_an(int n);

struct recurrence_spec {
  // sum_k sign[k] * s_k(n) * x_{n-k} = 0; coefficient polynomials by
  // ascending power of n.
  std::vector<std::vector<bigint>> polys;
  std::vector<int> signs;

  bigint eval(size_t k, long n) const;
  static recurrence_spec paper_three_term();  // s0 x_n - s1 x_{n-1} + s2 x_{n-2} = 0
};

struct recurrence_report {
  bool ok = true;
  std::vector<long> violations;
};

recurrence_report recurrence_verify(const std::vector<rational>& seq, const recurrence_spec& spec,
                                    long from, long to);

// Propagates the recurrence forward from the given initial values.
std::vector<rational> propagate_recurrence(const recurrence_spec& spec,
                                           const std::vector<rational>& initial, long upto);

struct asymptotics_report {
  std::vector<bigint> characteristic;  // 2560 t^2 - 12000 t + 9375
  double lambda_minus = 0, lambda_plus = 0;
  double a_ratio_last = 0, b_ratio_last = 0;
  double a_ratio_extrapolated = 0, b_ratio_extrapolated = 0;
  double radius_constant = 0;  // 16(3+sqrt 3)/75
  bool ab_ratio_strictly_decreasing = false;
  bool b_ratio_at_least_one = false;
  int n_terms = 0;
};

asymptotics_report ratio_report(int n_terms);

std::string series_text(const rational_series& s);
rational_series parse_series(const std::string& csv);

}  // namespace operad
