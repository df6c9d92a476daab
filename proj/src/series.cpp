#include "operad/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "operad/errors.hpp"

namespace operad {

rational_series egf_from_dims(const std::vector<long>& dims, sign_mode mode,
                              const std::vector<int>& grading, int order) {
  int n_max = static_cast<int>(dims.size());
  if (order < 0) order = n_max;
  rational_series s = rational_series::zero(order, series_flavor::exponential);
  for (int n = 1; n <= n_max && n <= order; ++n) {
    long d = dims[n - 1];
    if (d == 0) continue;
    rational c(d);
    c /= rational(factorial(static_cast<unsigned long>(n)));
    if (mode != sign_mode::plain) {
      if (static_cast<int>(grading.size()) < n) throw error("sign mode needs a grading entry per arity");
      if (grading[n - 1] % 2) c = -c;
    }
    s.c[n] = c;
  }
  return s;
}

rational_series mul_series(const rational_series& a, const rational_series& b, int order) {
  rational_series out = rational_series::zero(order, a.flavor);
  int na = std::min(order, a.order());
  for (int i = 0; i <= na; ++i) {
    if (a.c[i] == 0) continue;
    int nb = std::min(order - i, b.order());
    for (int j = 0; j <= nb; ++j) {
      if (b.c[j] == 0) continue;
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return out;
}

rational_series compose_series(const rational_series& f, const rational_series& g, int order) {
  if (g.at(0) != 0) throw error("series composition needs a zero constant term");
  // Horner: f(g) = c0 + g*(c1 + g*(c2 + ...))
  rational_series out = rational_series::zero(order, f.flavor);
  int nf = std::min(order, f.order());
  out.c[0] = f.at(nf);
  for (int k = nf - 1; k >= 0; --k) {
    out = mul_series(out, g, order);
    out.c[0] += f.at(k);
  }
  return out;
}

bool is_inverse(const rational_series& f, const rational_series& g, int order) {
  rational_series comp = compose_series(f, g, order);
  if (comp.at(1) != 1) return false;
  for (int k = 0; k <= order; ++k)
    if (k != 1 && comp.at(k) != 0) return false;
  return true;
}

namespace {

// 1 / (1 + sum_{k>=1} d_k t^k) to the given order.
rational_series recip_one_plus(const rational_series& d, int order) {
  rational_series out = rational_series::zero(order);
  out.c[0] = 1;
  for (int n = 1; n <= order; ++n) {
    rational acc(0);
    for (int k = 1; k <= n && k <= d.order(); ++k) acc += d.c[k] * out.c[n - k];
    out.c[n] = -acc;
  }
  return out;
}

bool odd_series(const rational_series& f) {
  for (int k = 0; k <= f.order(); k += 2)
    if (f.at(k) != 0) return false;
  return true;
}

}  // namespace

rational_series lagrange_invert(const rational_series& f, int order) {
  if (f.at(0) != 0) throw error("lagrange_invert needs a zero constant term");
  if (f.at(1) == 0) throw error("lagrange_invert needs a nonzero linear term");
  rational_series out = rational_series::zero(order, f.flavor);
  if (order >= 1) out.c[1] = 0;

  if (odd_series(f)) {
    // f = t q(t^2): work in v = t^2; the inverse is t h(t^2) with
    // h_n = [v^n] (1/q)^(2n+1) / (2n+1).
    int vorder = (order - 1) / 2;
    rational_series q = rational_series::zero(vorder);
    for (int k = 0; k <= vorder; ++k) q.c[k] = f.at(2 * k + 1);
    rational lead = q.c[0];
    for (auto& c : q.c) c /= lead;
    rational_series a = recip_one_plus(q, vorder);  // 1/q normalised
    rational_series a2 = mul_series(a, a, vorder);
    rational_series power = a;  // a^(2n+1) at step n
    for (int n = 0; n <= vorder; ++n) {
      rational coef = power.at(n) / rational(2 * n + 1);
      // undo the normalisation: f = lead * t * q_norm, inverse scales by lead^(2n+1)
      rational scale(1);
      for (int j = 0; j < 2 * n + 1; ++j) scale *= lead;
      out.c[2 * n + 1] = coef / scale;
      if (n < vorder) power = mul_series(power, a2, vorder);
    }
    return out;
  }

  // general case: [t^k] f^<-1> = (1/k) [u^(k-1)] (u/f)^k
  rational_series q = rational_series::zero(order);
  for (int k = 0; k <= order; ++k) q.c[k] = f.at(k + 1);
  rational lead = q.c[0];
  for (auto& c : q.c) c /= lead;
  rational_series a = recip_one_plus(q, order);
  rational_series power = a;
  for (int k = 1; k <= order; ++k) {
    rational coef = power.at(k - 1) / rational(k);
    rational scale(1);
    for (int j = 0; j < k; ++j) scale *= lead;
    out.c[k] = coef / scale;
    if (k < order) power = mul_series(power, a, order);
  }
  return out;
}

rational_series invert_by_substitution(const rational_series& f, int order) {
  if (f.at(0) != 0 || f.at(1) == 0) throw error("inversion needs t * (unit + ...)");
  rational_series g = rational_series::zero(order);
  if (order >= 1) g.c[1] = 1 / f.at(1);
  for (int n = 2; n <= order; ++n) {
    // choose g_n so that [t^n] f(g) = 0
    rational_series comp = compose_series(f, g, n);
    g.c[n] = -comp.at(n) / f.at(1);
  }
  return g;
}

std::optional<int> positivity_scan(const rational_series& f) {
  for (int k = 0; k <= f.order(); ++k)
    if (f.at(k) < 0) return k;
  return std::nullopt;
}

bigint tangent_dims(const bernoulli_context& bc, int n) {
  if (n < 1) throw error("tangent_dims needs n >= 1");
  bigint p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(2 * n));
  rational b = bc.bernoulli(static_cast<unsigned long>(2 * n));
  if (b < 0) b = -b;
  rational r = rational(p2) * rational(p2 - 1) * b / rational(2 * n);
  r.canonicalize();
  if (r.get_den() != 1) throw error("tangent_dims: non-integer value");
  return r.get_num();
}

rational inverse_coefficient_an(int n) {
  if (n < 0) throw error("inverse_coefficient_an needs n >= 0");
  rational sum(0);
  rational six(1, 6), c120(1, 120);
  for (int k = n / 2; k <= n; ++k) {
    if (n - k > k) continue;
    rational term = rational(binomial(2 * n + k, k)) * rational(binomial(k, n - k));
    rational p(1);
    for (int j = 0; j < 2 * k - n; ++j) p *= six;
    for (int j = 0; j < n - k; ++j) p *= c120;
    term *= p;
    if ((n - k) % 2) term = -term;
    sum += term;
  }
  sum /= rational(2 * n + 1);
  sum.canonicalize();
  return sum;
}

bigint recurrence_spec::eval(size_t k, long n) const {
  bigint x(static_cast<long>(n));
  bigint acc(0);
  bigint p(1);
  for (const auto& c : polys[k]) {
    acc += c * p;
    p *= x;
  }
  return acc;
}

recurrence_spec recurrence_spec::paper_three_term() {
  // s0(n) = 128 n (n-1) (2n+1) (2n-1) (5n-6)
  // s1(n) = 80 (n-1) (2n-1) (5n-1) (15 n^2 - 30 n + 14)
  // s2(n) = 3 (5n-1) (5n-4) (5n-6) (5n-7) (5n-8)
  auto mul = [](std::vector<bigint> a, const std::vector<bigint>& b) {
    std::vector<bigint> out(a.size() + b.size() - 1, bigint(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  auto lin = [](long c0, long c1) { return std::vector<bigint>{bigint(c0), bigint(c1)}; };
  recurrence_spec spec;
  std::vector<bigint> s0 = {bigint(128)};
  s0 = mul(s0, lin(0, 1));
  s0 = mul(s0, lin(-1, 1));
  s0 = mul(s0, lin(1, 2));
  s0 = mul(s0, lin(-1, 2));
  s0 = mul(s0, lin(-6, 5));
  std::vector<bigint> s1 = {bigint(80)};
  s1 = mul(s1, lin(-1, 1));
  s1 = mul(s1, lin(-1, 2));
  s1 = mul(s1, lin(-1, 5));
  s1 = mul(s1, std::vector<bigint>{bigint(14), bigint(-30), bigint(15)});
  std::vector<bigint> s2 = {bigint(3)};
  s2 = mul(s2, lin(-1, 5));
  s2 = mul(s2, lin(-4, 5));
  s2 = mul(s2, lin(-6, 5));
  s2 = mul(s2, lin(-7, 5));
  s2 = mul(s2, lin(-8, 5));
  spec.polys = {s0, s1, s2};
  spec.signs = {1, -1, 1};
  return spec;
}

recurrence_report recurrence_verify(const std::vector<rational>& seq, const recurrence_spec& spec,
                                    long from, long to) {
  recurrence_report rep;
  long order = static_cast<long>(spec.polys.size()) - 1;
  if (from < order) throw error("verification range must start at the recurrence order");
  for (long n = from; n <= to; ++n) {
    if (n >= static_cast<long>(seq.size())) throw error("sequence too short for the range");
    rational acc(0);
    for (size_t k = 0; k < spec.polys.size(); ++k) {
      rational term = rational(spec.eval(k, n)) * seq[n - static_cast<long>(k)];
      acc += spec.signs[k] < 0 ? -term : term;
    }
    if (acc != 0) {
      rep.ok = false;
      rep.violations.push_back(n);
    }
  }
  return rep;
}

std::vector<rational> propagate_recurrence(const recurrence_spec& spec,
                                           const std::vector<rational>& initial, long upto) {
  std::vector<rational> seq = initial;
  long order = static_cast<long>(spec.polys.size()) - 1;
  for (long n = static_cast<long>(seq.size()); n <= upto; ++n) {
    rational acc(0);
    for (size_t k = 1; k < spec.polys.size(); ++k) {
      rational term = rational(spec.eval(k, n)) * seq[n - static_cast<long>(k)];
      acc += spec.signs[k] < 0 ? -term : term;
    }
    bigint s0 = spec.eval(0, n);
    if (s0 == 0) throw error("leading recurrence coefficient vanishes in range");
    rational v = -acc / rational(s0);
    if (spec.signs[0] < 0) v = -v;
    v.canonicalize();
    seq.push_back(v);
  }
  return seq;
}

namespace {

// Richardson step eliminating the 1/n^p term of r_n = L + c/n^p + ...
std::vector<double> richardson(const std::vector<double>& r, int offset, int p) {
  std::vector<double> out;
  for (size_t j = 1; j < r.size(); ++j) {
    double n1 = static_cast<double>(offset + j);
    double n0 = n1 - 1;
    double w1 = std::pow(n1, p), w0 = std::pow(n0, p);
    out.push_back((r[j] * w1 - r[j - 1] * w0) / (w1 - w0));
  }
  return out;
}

}  // namespace

asymptotics_report ratio_report(int n_terms) {
  if (n_terms < 10) throw error("ratio_report needs at least 10 terms");
  asymptotics_report rep;
  rep.n_terms = n_terms;
  rep.characteristic = {bigint(9375), bigint(-12000), bigint(2560)};  // ascending powers
  double s3 = std::sqrt(3.0);
  rep.lambda_minus = 25.0 * (3.0 - s3) / 32.0;
  rep.lambda_plus = 25.0 * (3.0 + s3) / 32.0;
  rep.radius_constant = 16.0 * (3.0 + s3) / 75.0;

  std::vector<rational> a;
  for (int n = 0; n <= n_terms; ++n) a.push_back(inverse_coefficient_an(n));
  recurrence_spec spec = recurrence_spec::paper_three_term();
  std::vector<rational> b = propagate_recurrence(spec, {rational(1), rational(1)}, n_terms);

  rep.a_ratio_last = rational(a[n_terms] / a[n_terms - 1]).get_d();
  rep.b_ratio_last = rational(b[n_terms] / b[n_terms - 1]).get_d();

  // iterated Richardson on the last few ratios (drift is in powers of 1/n)
  int tail = 8;
  std::vector<double> ra, rb;
  for (int n = n_terms - tail; n <= n_terms; ++n) {
    ra.push_back(rational(a[n] / a[n - 1]).get_d());
    rb.push_back(rational(b[n] / b[n - 1]).get_d());
  }
  int offset = n_terms - tail;
  for (int p = 1; p <= 3; ++p) {
    ra = richardson(ra, offset, p);
    rb = richardson(rb, offset, p);
    ++offset;
  }
  rep.a_ratio_extrapolated = ra.back();
  rep.b_ratio_extrapolated = rb.back();

  rep.b_ratio_at_least_one = true;
  for (int n = 2; n <= n_terms; ++n)
    if (b[n] < b[n - 1]) {
      rep.b_ratio_at_least_one = false;
      break;
    }
  rep.ab_ratio_strictly_decreasing = true;
  for (int n = 2; n <= n_terms; ++n) {
    // a_n / b_n < a_{n-1} / b_{n-1}, exactly
    if (!(a[n] * b[n - 1] < a[n - 1] * b[n])) {
      rep.ab_ratio_strictly_decreasing = false;
      break;
    }
  }
  return rep;
}

std::string series_text(const rational_series& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    if (k) out += ",";
    out += to_string(s.at(k));
  }
  return out;
}

rational_series parse_series(const std::string& csv) {
  rational_series s;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }),
               item.end());
    if (item.empty()) throw error("empty series coefficient");
    rational r(item);
    r.canonicalize();
    s.c.push_back(r);
  }
  if (s.c.empty()) throw error("empty series");
  return s;
}

}  // namespace operad
