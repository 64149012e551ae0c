#pragma once

#include <map>
#include <string>

#include "wnk/errors.hpp"
#include "wnk/monomial.hpp"
#include "wnk/rational.hpp"

namespace wnk {

// Sparse formal series in t_1, t_2, ... and eps, truncated by total
// t-weight and bounded below in the eps power. Stored coefficients are
// never zero. T is Rational for plain series and AffineForm in the solver.
template <class T>
class Series {
 public:
  Series(int weight_cap, int eps_floor) : weight_cap_(weight_cap), eps_floor_(eps_floor) {}

  int weight_cap() const { return weight_cap_; }
  int eps_floor() const { return eps_floor_; }
  const std::map<Monomial, T>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool in_window(const Monomial& m) const {
    return m.weight() <= weight_cap_ && m.eps >= eps_floor_;
  }

  // adds c * m, silently truncating outside the window, dropping zeros
  void add_term(const Monomial& m, const T& c) {
    if (is_zero(c) || !in_window(m)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  T coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? T{} : it->second;
  }

  Series& operator+=(const Series& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Series& operator-=(const Series& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Series& negate() {
    for (auto& [m, c] : terms_) c = -c;
    return *this;
  }

  Series& scale(const Rational& s) {
    if (wnk::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

  Series truncated(int new_cap, int new_floor) const {
    Series r(new_cap, new_floor);
    for (auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

 private:
  int weight_cap_;
  int eps_floor_;
  std::map<Monomial, T> terms_;
};

using TruncatedSeries = Series<Rational>;

template <class T>
Series<T> series_const(int cap, int floor, const T& c) {
  Series<T> s(cap, floor);
  s.add_term(monomial_one(), c);
  return s;
}

inline TruncatedSeries series_one(int cap, int floor = 0) {
  return series_const<Rational>(cap, floor, Rational(1));
}

// Cauchy product, re-truncated to the tighter of the two windows. Valid as a
// truncation of the true product because every variable has positive weight.
template <class T>
Series<T> series_mul(const Series<T>& a, const Series<T>& b) {
  Series<T> r(std::min(a.weight_cap(), b.weight_cap()),
              std::max(a.eps_floor(), b.eps_floor()));
  for (auto& [ma, ca] : a.terms()) {
    if (ma.weight() > r.weight_cap()) continue;
    for (auto& [mb, cb] : b.terms()) {
      if (ma.weight() + mb.weight() > r.weight_cap()) continue;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

template <class T>
Series<T> series_add(const Series<T>& a, const Series<T>& b) {
  Series<T> r(std::min(a.weight_cap(), b.weight_cap()),
              std::max(a.eps_floor(), b.eps_floor()));
  for (auto& [m, c] : a.terms()) r.add_term(m, c);
  for (auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

// d/dt_n
template <class T>
Series<T> series_derive(const Series<T>& a, int n) {
  Series<T> r(a.weight_cap(), a.eps_floor());
  for (auto& [m, c] : a.terms()) {
    int e = m.exponent_of(n);
    if (e == 0) continue;
    Monomial d;
    d.eps = m.eps;
    for (auto& [v, k] : m.vars) {
      if (v == n) {
        if (k > 1) d.vars.emplace_back(v, k - 1);
      } else {
        d.vars.emplace_back(v, k);
      }
    }
    r.add_term(d, c * Rational(e));
  }
  return r;
}

// multiply by a monomial (with cap re-check)
template <class T>
Series<T> series_mul_monomial(const Series<T>& a, const Monomial& m, const Rational& c) {
  Series<T> r(a.weight_cap(), a.eps_floor());
  for (auto& [ma, ca] : a.terms()) r.add_term(ma * m, ca * c);
  return r;
}

// true if every term has t-weight >= 1
template <class T>
bool series_positive_weight(const Series<T>& a) {
  for (auto& [m, c] : a.terms())
    if (m.weight() == 0) return false;
  return true;
}

// sum_k a^k / k!; requires every term of a to carry positive t-weight
TruncatedSeries series_exp(const TruncatedSeries& a);

// multiplicative inverse; requires a nonzero constant term and positive
// t-weight on every other term
TruncatedSeries series_invert(const TruncatedSeries& a);

// composition t_var -> replacement; a constant term in the replacement is
// rejected unless allow_const_shift (affine re-expansion, exact only on
// polynomial data -- see the dilaton handling in the solver)
TruncatedSeries series_substitute(const TruncatedSeries& a, int var,
                                  const TruncatedSeries& replacement,
                                  bool allow_const_shift = false);

// canonical rendering: "p/q * t_1^2 t_3 eps^-2" terms joined by " + "
std::string render(const Monomial& m);
std::string render(const TruncatedSeries& s);

}  // namespace wnk
