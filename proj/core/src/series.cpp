#include "wnk/series.hpp"

#include <fmt/format.h>

namespace wnk {

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (!series_positive_weight(a))
    throw domain_error("series_exp: argument has a term of t-weight 0");
  TruncatedSeries r = series_one(a.weight_cap(), a.eps_floor());
  TruncatedSeries power = r;
  // a^k has minimal weight >= k, so k stops at the cap
  for (int k = 1; k <= a.weight_cap(); ++k) {
    power = series_mul(power, a);
    if (power.empty()) break;
    TruncatedSeries term = power;
    term.scale(Rational(1) / Rational(factorial(k)));
    r += term;
  }
  return r;
}

TruncatedSeries series_invert(const TruncatedSeries& a) {
  Rational c0 = a.coeff(monomial_one());
  if (is_zero(c0)) throw domain_error("series_invert: zero constant term");
  TruncatedSeries rest = a;
  rest.add_term(monomial_one(), -c0);
  if (!series_positive_weight(rest))
    throw domain_error("series_invert: non-constant term of t-weight 0");
  rest.scale(Rational(-1) / c0);  // now a = c0 (1 - rest·(-1)) ... a/c0 = 1 - rest
  TruncatedSeries r = series_one(a.weight_cap(), a.eps_floor());
  TruncatedSeries power = r;
  for (int k = 1; k <= a.weight_cap(); ++k) {
    power = series_mul(power, rest);
    if (power.empty()) break;
    r += power;
  }
  r.scale(Rational(1) / c0);
  return r;
}

TruncatedSeries series_substitute(const TruncatedSeries& a, int var,
                                  const TruncatedSeries& replacement,
                                  bool allow_const_shift) {
  Rational c0 = replacement.coeff(monomial_one());
  if (!is_zero(c0) && !allow_const_shift)
    throw domain_error("series_substitute: replacement has a constant term");
  for (auto& [m, c] : replacement.terms())
    if (m.weight() == 0 && !(m == monomial_one()))
      throw domain_error("series_substitute: replacement has a weight-0 term");

  TruncatedSeries r(a.weight_cap(), a.eps_floor());
  // cache powers of the replacement
  std::vector<TruncatedSeries> powers;
  powers.push_back(series_one(a.weight_cap(), a.eps_floor()));
  auto power = [&](int e) -> const TruncatedSeries& {
    while ((int)powers.size() <= e) powers.push_back(series_mul(powers.back(), replacement));
    return powers[e];
  };
  for (auto& [m, c] : a.terms()) {
    int e = m.exponent_of(var);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    Monomial base;
    base.eps = m.eps;
    for (auto& [v, k] : m.vars)
      if (v != var) base.vars.emplace_back(v, k);
    for (auto& [mr, cr] : power(e).terms()) r.add_term(base * mr, c * cr);
  }
  return r;
}

std::string render(const Monomial& m) {
  if (m.is_constant()) return "1";
  std::string out;
  for (auto& [n, e] : m.vars) {
    if (!out.empty()) out += ' ';
    out += e == 1 ? fmt::format("t_{}", n) : fmt::format("t_{}^{}", n, e);
  }
  if (m.eps != 0) {
    if (!out.empty()) out += ' ';
    out += fmt::format("eps^{}", m.eps);
  }
  return out;
}

std::string render(const TruncatedSeries& s) {
  if (s.empty()) return "0";
  std::string out;
  for (auto& [m, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    if (m.is_constant())
      out += to_string(c);
    else
      out += fmt::format("{} * {}", to_string(c), render(m));
  }
  return out;
}

}  // namespace wnk
