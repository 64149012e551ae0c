#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wnk/series.hpp"

namespace wnk {

// Heisenberg modes acting on Series<T>:
//   J_{-n} (n > 0): multiplication by n * t_n * eps^{-1}
//   J_{+n} (n > 0): eps * d/dt_n
// so [J_m, J_{m'}] = m delta_{m,-m'} and the eps-degree of a mode is the
// sign of its index.

// One normal-ordered product: all negative (multiplication) modes to the
// left of all positive (derivation) modes, each group sorted ascending.
// eps_pow is an extra eps power on top of the mode dressing (used by the
// dilaton shift), lambda_pow an optional integer power of lam (zero for
// fully extracted operators).
struct ModeTerm {
  Rational coeff;
  std::vector<int> modes;
  int eps_pow = 0;
  int lambda_pow = 0;

  // total t-weight shift of the term: sum of (-m) over modes
  int weight_shift() const {
    int s = 0;
    for (int m : modes) s -= m;
    return s;
  }
  // eps degree including dressing
  int eps_degree() const {
    int d = eps_pow;
    for (int m : modes) d += m > 0 ? 1 : -1;
    return d;
  }
  int num_derivations() const {
    int c = 0;
    for (int m : modes) c += m > 0;
    return c;
  }

  // key ignoring the coefficient, for canonical merging
  friend auto term_key(const ModeTerm& t) {
    return std::tuple(t.lambda_pow, t.eps_pow, t.modes);
  }
  friend bool operator==(const ModeTerm& a, const ModeTerm& b) {
    return term_key(a) == term_key(b) && a.coeff == b.coeff;
  }
};

// Finite sum of normal-ordered mode products with rational coefficients.
// Kept in canonical sorted/merged form.
class ModePolynomial {
 public:
  ModePolynomial() = default;

  static ModePolynomial scalar(const Rational& c, int eps_pow = 0, int lambda_pow = 0);
  static ModePolynomial mode(int m, const Rational& c = Rational(1));

  const std::vector<ModeTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(ModeTerm t);  // sorts modes into normal order (groups commute)
  ModePolynomial& operator+=(const ModePolynomial& o);
  ModePolynomial& operator-=(const ModePolynomial& o);
  ModePolynomial& scale(const Rational& s);
  friend ModePolynomial operator+(ModePolynomial a, const ModePolynomial& b) { return a += b; }
  friend ModePolynomial operator-(ModePolynomial a, const ModePolynomial& b) { return a -= b; }
  friend bool operator==(const ModePolynomial& a, const ModePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // true if every term in the product a*b is already normal-ordered by
  // concatenation (used by the exponential expansion, which only ever
  // multiplies multiplication-side by derivation-side)
  friend ModePolynomial concat_product(const ModePolynomial& a, const ModePolynomial& b);

  // drop terms that cannot act within a weight cap: a term is kept iff the
  // total multiplication weight and the total derivation weight are both
  // <= cap. This is exact for the action on weight-capped series.
  ModePolynomial truncated_to_cap(int cap) const;

  // substitute J_{-(h+1)} -> J_{-(h+1)} - eps^{-1} in every term
  ModePolynomial dilaton_shifted(int h) const;

  // action on a series (lambda_pow must be zero on every term)
  template <class T>
  Series<T> apply(const Series<T>& s) const;

  std::string render() const;

 private:
  std::vector<ModeTerm> terms_;  // sorted by term_key
};

bool mode_term_within_cap(const ModeTerm& t, int cap);

// apply a single mode to a series
template <class T>
Series<T> apply_mode(int m, const Series<T>& s) {
  if (m > 0) {
    // eps * d/dt_m
    Series<T> r = series_derive(s, m);
    Series<T> shifted(r.weight_cap(), r.eps_floor());
    for (auto& [mon, c] : r.terms()) shifted.add_term(mon.with_eps(1), c);
    return shifted;
  }
  // (-m) * t_{-m} * eps^{-1}
  return series_mul_monomial(s, monomial_var(-m, 1, -1), Rational(-m));
}

template <class T>
Series<T> ModePolynomial::apply(const Series<T>& s) const {
  Series<T> out(s.weight_cap(), s.eps_floor());
  for (const ModeTerm& t : terms_) {
    if (t.lambda_pow != 0)
      throw domain_error("ModePolynomial::apply: term carries a lambda power");
    Series<T> cur = s;
    for (auto it = t.modes.rbegin(); it != t.modes.rend(); ++it) cur = apply_mode(*it, cur);
    for (auto& [mon, c] : cur.terms()) {
      T v = c;
      v *= t.coeff;
      out.add_term(mon.with_eps(t.eps_pow), v);
    }
  }
  return out;
}

}  // namespace wnk
