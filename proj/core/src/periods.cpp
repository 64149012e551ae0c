#include "wnk/periods.hpp"

#include "wnk/errors.hpp"

namespace wnk {

PeriodMonomial period_t0(int n, int i, int h) {
  if (i < 1 || i > h - 1) throw domain_error("period_t0: i out of range");
  if (n == 0) return {Rational(1), -2 * i};
  if (n > 0) {
    int k = n;
    Rational c = (k % 2 == 0) ? Rational(1) : Rational(-1);
    for (int l = 0; l < k; ++l) c *= Rational(i + l * h);
    return {c, -2 * (k * h + i)};
  }
  int k = -n - 1;  // n = -k-1
  Rational denom(1);
  for (int j = 1; j <= k + 1; ++j) denom *= Rational(j * h - i);
  return {Rational(1) / denom, 2 * ((k + 1) * h - i)};
}

namespace {

// inverse of a power series given by coefficients b (b[0] != 0)
std::vector<Rational> invert_coeffs(const std::vector<Rational>& b, int order) {
  std::vector<Rational> g(order + 1, Rational(0));
  g[0] = Rational(1) / b[0];
  for (int n = 1; n <= order; ++n) {
    Rational acc(0);
    for (int j = 1; j <= n && j < (int)b.size(); ++j) acc += b[j] * g[n - j];
    g[n] = -acc / b[0];
  }
  return g;
}

std::vector<Rational> mul_coeffs(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, int order) {
  std::vector<Rational> r(order + 1, Rational(0));
  for (int i = 0; i < (int)a.size() && i <= order; ++i)
    for (int j = 0; j < (int)b.size() && i + j <= order; ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

std::vector<Rational> c_series(int h, int order) {
  if (h < 2) throw domain_error("c_series: h must be >= 2");
  int N = h - 1;
  // (1+s)^(-N/(2h))
  std::vector<Rational> pre(order + 1);
  for (int j = 0; j <= order; ++j) pre[j] = binomial(rat(-N, 2 * h), j);
  // s / ((1+s)^(1/h) - 1) = 1 / sum_{j>=1} binom(1/h, j) s^(j-1)
  std::vector<Rational> b(order + 1);
  for (int j = 0; j <= order; ++j) b[j] = binomial(rat(1, h), j + 1);
  std::vector<Rational> inv = invert_coeffs(b, order);
  return mul_coeffs(pre, inv, order);
}

std::vector<Rational> c_series_inverse(int h, int order) {
  return invert_coeffs(c_series(h, order), order);
}

PhaseFactor phase_factor(int h, int order) {
  PhaseFactor pf{h, c_series(h, order), LaurentField(h, order), c_series_inverse(h, order)};
  for (int j = 0; j <= order; ++j)
    pf.c_of_u.add_term({-2 * h * j, j, 0}, pf.c[j] * pow_int(Rational(h), j));
  return pf;
}

LaurentField vertex_prefactor_times_hs(int h, int s_cap) {
  int N = h - 1;
  // (h s) * w^{-N/2} zeta^{-N/2} (w-zeta)^{-1}
  //   = (1+u)^{-N/(2h)} / sum_{j>=1} binom(1/h, j) u^{j-1}
  std::vector<Rational> pre(s_cap + 1), b(s_cap + 1);
  for (int j = 0; j <= s_cap; ++j) {
    pre[j] = binomial(rat(-N, 2 * h), j);
    b[j] = binomial(rat(1, h), j + 1);
  }
  std::vector<Rational> coeffs = mul_coeffs(pre, invert_coeffs(b, s_cap), s_cap);
  LaurentField r(h, s_cap);
  for (int j = 0; j <= s_cap; ++j)
    r.add_term({-2 * h * j, j, 0}, coeffs[j] * pow_int(Rational(h), j));
  return r;
}

}  // namespace wnk
