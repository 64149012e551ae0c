#pragma once

#include <vector>

#include "wnk/monomial.hpp"

namespace wnk {

// All monomials in the t variables of total weight <= cap, eps = 0.
// If exclude_multiples_of > 0, indices divisible by it are left out
// (the mod-h reduced Fock space). Ordered deterministically.
inline std::vector<Monomial> enumerate_basis(int cap, int exclude_multiples_of = 0) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int min_var, int budget) -> void {
    out.push_back(cur);
    for (int n = min_var; n <= budget; ++n) {
      if (exclude_multiples_of > 0 && n % exclude_multiples_of == 0) continue;
      if (!cur.vars.empty() && cur.vars.back().first == n)
        ++cur.vars.back().second;
      else
        cur.vars.emplace_back(n, 1);
      self(self, n, budget - n);
      if (cur.vars.back().second > 1)
        --cur.vars.back().second;
      else
        cur.vars.pop_back();
    }
  };
  rec(rec, 1, cap);
  return out;
}

}  // namespace wnk
