#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace wnk {

// Monomial in the graded variables t_n (n >= 1) together with an integer
// power of eps (possibly negative). t_n carries weight n.
struct Monomial {
  // (variable index, exponent), sorted by index, exponents >= 1
  std::vector<std::pair<int, int>> vars;
  int eps = 0;

  int weight() const {
    int w = 0;
    for (auto& [n, e] : vars) w += n * e;
    return w;
  }

  int exponent_of(int n) const {
    for (auto& [v, e] : vars)
      if (v == n) return e;
    return 0;
  }

  bool is_constant() const { return vars.empty() && eps == 0; }

  Monomial with_eps(int delta) const {
    Monomial m = *this;
    m.eps += delta;
    return m;
  }

  // product of monomials
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.eps = a.eps + b.eps;
    r.vars.reserve(a.vars.size() + b.vars.size());
    std::size_t i = 0, j = 0;
    while (i < a.vars.size() && j < b.vars.size()) {
      if (a.vars[i].first == b.vars[j].first) {
        r.vars.emplace_back(a.vars[i].first, a.vars[i].second + b.vars[j].second);
        ++i, ++j;
      } else if (a.vars[i].first < b.vars[j].first) {
        r.vars.push_back(a.vars[i++]);
      } else {
        r.vars.push_back(b.vars[j++]);
      }
    }
    for (; i < a.vars.size(); ++i) r.vars.push_back(a.vars[i]);
    for (; j < b.vars.size(); ++j) r.vars.push_back(b.vars[j]);
    return r;
  }

  // canonical order: lexicographic on the (index, exponent) list, then eps
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial monomial_one() { return Monomial{}; }

inline Monomial monomial_var(int n, int exp = 1, int eps = 0) {
  Monomial m;
  if (exp != 0) m.vars.emplace_back(n, exp);
  m.eps = eps;
  return m;
}

inline Monomial monomial_eps(int eps) {
  Monomial m;
  m.eps = eps;
  return m;
}

}  // namespace wnk
