#pragma once

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "wnk/series.hpp"

namespace wnk::test {

inline unsigned long seed() {
  if (const char* s = std::getenv("WNK_TEST_SEED")) return std::strtoul(s, nullptr, 10);
  return 20240801ul;
}

// random sparse series with small rational coefficients
inline TruncatedSeries random_series(std::mt19937_64& rng, int cap, int terms,
                                     bool zero_constant = false, int eps_span = 0) {
  TruncatedSeries s(cap, -4 - eps_span);
  std::uniform_int_distribution<int> var(1, cap);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<int> eps(-eps_span, eps_span);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    int budget = cap;
    int nvars = 1 + (int)(rng() % 3);
    for (int v = 0; v < nvars && budget > 0; ++v) {
      int n = 1 + (int)(rng() % budget);
      m = m * monomial_var(n);
      budget -= n;
    }
    if (eps_span > 0) m.eps = eps(rng);
    if (zero_constant && m.weight() == 0) continue;
    s.add_term(m, rat(num(rng), den(rng)));
  }
  return s;
}

inline std::string read_golden(const std::string& name) {
  std::ifstream f(std::string(WNK_GOLDEN_DIR) + "/" + name);
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

}  // namespace wnk::test
