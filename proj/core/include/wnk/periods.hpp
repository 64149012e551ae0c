#pragma once

#include <vector>

#include "wnk/laurent.hpp"
#include "wnk/rational.hpp"

namespace wnk {

// A period component (I^(n)(0,lam), v_i): an exact monomial c * (h lam)^(mu/(2h)).
struct PeriodMonomial {
  Rational coeff;
  int mu;  // exponent numerator in half-units of 1/h

  LaurentField as_laurent(int h, int s_cap, int z = 0) const {
    return laurent_power(h, s_cap, mu, coeff, 0, z);
  }
};

// Closed forms of the period components at t = 0:
//   n = 0:      (h lam)^(-i/h)
//   n = k > 0:  (-1)^k i (i+h) ... (i+(k-1)h) (h lam)^(-k-i/h)
//   n = -k-1:   (h lam)^(k+1-i/h) / ((h-i)(2h-i)...((k+1)h-i))
PeriodMonomial period_t0(int n, int i, int h);

// c(s) = (1+s)^(-N/(2h)) * s / ((1+s)^(1/h) - 1), N = h-1, as exact
// coefficients c_0..c_order. c_0 = h, c_1 = 0.
std::vector<Rational> c_series(int h, int order);

// 1/c(s) to the given order
std::vector<Rational> c_series_inverse(int h, int order);

// Phase prefactor data: c(s) together with c(s/lam) as a Laurent field
// (entries h^j c_j s^j (h lam)^{-j}).
struct PhaseFactor {
  int h;
  std::vector<Rational> c;          // c(s) coefficients
  LaurentField c_of_u;              // c(s/lam)
  std::vector<Rational> c_inverse;  // 1/c(s)
};

PhaseFactor phase_factor(int h, int order);

// (h s) * w^{-N/2} zeta^{-N/2} (w - zeta)^{-1} as a Laurent field; equals
// c(s/lam) -- the identity is checked by the equivalence module.
LaurentField vertex_prefactor_times_hs(int h, int s_cap);

}  // namespace wnk
