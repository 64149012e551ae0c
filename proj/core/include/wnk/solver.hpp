#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wnk/affine.hpp"
#include "wnk/errors.hpp"
#include "wnk/vertex.hpp"

namespace wnk {

// a primary field label together with a psi power
struct Insertion {
  int i = 1;  // 1..N, pairing (v_i, v_j) = delta_{i+j, N+1}
  int k = 0;  // psi power, >= 0
  friend auto operator<=>(const Insertion&, const Insertion&) = default;

  // t-weight of the corresponding variable: (k+1)h - i
  int weight(int h) const { return (k + 1) * h - i; }
};

struct CorrKey {
  int g = 0;
  std::vector<Insertion> insertions;  // sorted
  friend auto operator<=>(const CorrKey&, const CorrKey&) = default;

  int weight(int h) const {
    int w = 0;
    for (const Insertion& x : insertions) w += x.weight(h);
    return w;
  }
  std::string str() const;
};

class CorrelatorTable {
 public:
  CorrelatorTable(int h, int g_max, int weight_max)
      : h_(h), g_max_(g_max), weight_max_(weight_max) {}

  int h() const { return h_; }
  int g_max() const { return g_max_; }
  int weight_max() const { return weight_max_; }
  const std::map<CorrKey, Rational>& values() const { return values_; }

  void set(const CorrKey& key, const Rational& v) { values_[key] = v; }
  std::optional<Rational> get(const CorrKey& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

 private:
  int h_, g_max_, weight_max_;
  std::map<CorrKey, Rational> values_;
};

struct solver_incomplete : error {
  std::vector<CorrKey> stuck;
  solver_incomplete(std::string msg, std::vector<CorrKey> s)
      : error(std::move(msg)), stuck(std::move(s)) {}
};

struct solver_inconsistent : error {
  using error::error;
};

struct missing_entry : error {
  CorrKey key;
  missing_entry(std::string msg, CorrKey k) : error(std::move(msg)), key(std::move(k)) {}
};

struct SolveOptions {
  std::vector<int> k_set;    // constraint families to use; empty = 1..N
  bool genus_major = false;  // alternative elimination order
  bool spin_filter = false;  // cross-check the moduli non-emptiness filter
};

// Solves {J^k_n D = 0 : k in k_set, n + k >= 0} for all correlators of
// t-weight <= weight_max and genus <= g_max by graded elimination on the
// connected-form equations.
CorrelatorTable solve_constraints(int h, int g_max, int weight_max, SolveOptions opts = {});

// the generating series assembled from a complete table: exp of
// sum eps^{2g-2} <mu> prod (d(i,k) t)^{mult} / mult!
TruncatedSeries assemble_D(const CorrelatorTable& table, int weight_cap, int eps_floor);

// bijection between reduced monomials and correlator keys
CorrKey monomial_to_key(const Monomial& m, int h, int g);
Monomial key_to_monomial(const CorrKey& key, int h);

// moduli non-emptiness: (2g - 2 - sum (N - i_j)) divisible by h
bool spin_selection_allowed(int g, const std::vector<Insertion>& insertions, int h);

struct ResidualViolation {
  int k, n;
  std::string slot;
};

struct ResidualReport {
  int h = 0;
  int extra_k_max = 0;
  // per-operator reliable window: (k, n) -> (max slot weight, max eps power)
  std::map<std::pair<int, int>, std::pair<int, int>> windows;
  std::vector<ResidualViolation> violations;
  long checked_slots = 0;
  bool ok() const { return violations.empty(); }
};

// applies every J^k_n with 1 <= k <= extra_k_max (n + k >= 0) to the
// assembled series and verifies exact vanishing inside the reliable window
ResidualReport residual_check(int h, const CorrelatorTable& table, int extra_k_max);

}  // namespace wnk
