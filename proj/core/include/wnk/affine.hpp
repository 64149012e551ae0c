#pragma once

#include <map>

#include "wnk/rational.hpp"

namespace wnk {

// c0 + sum c_a u_a over unknowns indexed by int. A product of two forms
// that both carry unknowns is nonlinear; instead of tracking it we poison
// the result, and poisoned slots are never used as equations.
struct AffineForm {
  Rational c0;
  std::map<int, Rational> lin;
  bool poisoned = false;

  AffineForm() : c0(0) {}
  explicit AffineForm(Rational c) : c0(std::move(c)) {}
  static AffineForm unknown(int id, Rational coeff = Rational(1)) {
    AffineForm f;
    f.lin.emplace(id, std::move(coeff));
    return f;
  }

  bool has_unknowns() const { return !lin.empty(); }
  bool numeric() const { return lin.empty() && !poisoned; }

  AffineForm& operator+=(const AffineForm& o) {
    c0 += o.c0;
    for (auto& [id, c] : o.lin) {
      auto it = lin.find(id);
      if (it == lin.end()) {
        lin.emplace(id, c);
      } else {
        it->second += c;
        if (sgn(it->second) == 0) lin.erase(it);
      }
    }
    poisoned = poisoned || o.poisoned;
    return *this;
  }

  AffineForm operator-() const {
    AffineForm r = *this;
    r.c0 = -r.c0;
    for (auto& [id, c] : r.lin) c = -c;
    return r;
  }

  friend AffineForm operator*(AffineForm a, const Rational& s) {
    a *= s;
    return a;
  }

  AffineForm& operator*=(const Rational& s) {
    if (sgn(s) == 0 && !poisoned) {
      c0 = 0;
      lin.clear();
      return *this;
    }
    c0 *= s;
    for (auto& [id, c] : lin) c *= s;
    return *this;
  }

  // substitutes a solved value for an unknown
  void substitute(int id, const Rational& value) {
    auto it = lin.find(id);
    if (it == lin.end()) return;
    c0 += it->second * value;
    lin.erase(it);
  }

  friend AffineForm operator*(const AffineForm& a, const AffineForm& b) {
    AffineForm r;
    r.poisoned = a.poisoned || b.poisoned || (a.has_unknowns() && b.has_unknowns());
    r.c0 = a.c0 * b.c0;
    for (auto& [id, c] : a.lin) r.lin.emplace(id, c * b.c0);
    for (auto& [id, c] : b.lin) {
      auto it = r.lin.find(id);
      if (it == r.lin.end()) {
        r.lin.emplace(id, c * a.c0);
      } else {
        it->second += c * a.c0;
        if (sgn(it->second) == 0) r.lin.erase(it);
      }
    }
    return r;
  }
};

inline bool is_zero(const AffineForm& f) {
  return !f.poisoned && f.lin.empty() && sgn(f.c0) == 0;
}

}  // namespace wnk
