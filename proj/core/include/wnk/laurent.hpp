#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "wnk/errors.hpp"
#include "wnk/rational.hpp"

namespace wnk {

// Formal field in lam with exponents in (1/h)Z, a second expansion variable
// s, and a bookkeeping index z. The atom for a fractional power is
// (h*lam)^(mu/(2h)) so that every coefficient stays rational; mu is an
// integer in half-units (mu = 2h corresponds to h*lam itself).
struct LaurentKey {
  int mu = 0;  // exponent of (h*lam)^(1/(2h))
  int s = 0;   // power of s, >= 0
  int z = 0;   // bookkeeping index (period order)
  friend auto operator<=>(const LaurentKey&, const LaurentKey&) = default;
};

class LaurentField {
 public:
  LaurentField(int h, int s_cap) : h_(h), s_cap_(s_cap) {}

  int h() const { return h_; }
  int s_cap() const { return s_cap_; }
  const std::map<LaurentKey, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const LaurentKey& k, const Rational& c) {
    if (is_zero(c) || k.s > s_cap_) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Rational coeff(const LaurentKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LaurentField& operator+=(const LaurentField& o) {
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }

  LaurentField& scale(const Rational& s) {
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentField operator*(const LaurentField& a, const LaurentField& b) {
    LaurentField r(a.h_, std::min(a.s_cap_, b.s_cap_));
    for (auto& [ka, ca] : a.terms_) {
      if (ka.s > r.s_cap_) continue;
      for (auto& [kb, cb] : b.terms_) {
        if (ka.s + kb.s > r.s_cap_) continue;
        r.add_term({ka.mu + kb.mu, ka.s + kb.s, ka.z + kb.z}, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const LaurentField& a, const LaurentField& b) {
    return a.terms_ == b.terms_;
  }

  // d/d(lam): (h lam)^(mu/2h) -> (mu/2) (h lam)^(mu/2h - 1)
  LaurentField d_lambda() const {
    LaurentField r(h_, s_cap_);
    for (auto& [k, c] : terms_)
      r.add_term({k.mu - 2 * h_, k.s, k.z}, c * rat(k.mu, 2));
    return r;
  }

 private:
  int h_;
  int s_cap_;
  std::map<LaurentKey, Rational> terms_;
};

// single power of (h lam): mu counted in half-units of 1/h
inline LaurentField laurent_power(int h, int s_cap, int mu, const Rational& c,
                                  int s = 0, int z = 0) {
  LaurentField f(h, s_cap);
  f.add_term({mu, s, z}, c);
  return f;
}

// (1 + u)^a expanded in u where u = s/lam = h s (h lam)^{-1}; exponent a is
// rational, result carries powers (h lam)^{-j} s^j
LaurentField binomial_series_u(int h, int s_cap, const Rational& a);

}  // namespace wnk
