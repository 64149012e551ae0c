#include "wnk/laurent.hpp"

namespace wnk {

LaurentField binomial_series_u(int h, int s_cap, const Rational& a) {
  LaurentField r(h, s_cap);
  for (int j = 0; j <= s_cap; ++j) {
    Rational c = binomial(a, j) * pow_int(Rational(h), j);
    r.add_term({-2 * h * j, j, 0}, c);
  }
  return r;
}

}  // namespace wnk
