#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wnk/mode_poly.hpp"
#include "wnk/periods.hpp"
#include "wnk/series.hpp"

namespace wnk {

// Powers of the two expansion variables of a vertex operator: zeta is the
// exponent of (h lam)^(1/h) (its residue mod h is the branch label), s the
// Taylor variable.
struct VertexKey {
  int zeta = 0;
  int s = 0;
  friend auto operator<=>(const VertexKey&, const VertexKey&) = default;
};

// Exponent data of a vertex operator per (zeta, s) power: coefficients of
// t_n in the multiplication exponent, of d/dt_n in the derivation exponent,
// and a scalar carrying eps^{-1} (produced by the dilaton shift).
struct VertexEntry {
  std::map<int, Rational> mult;
  std::map<int, Rational> deriv;
  Rational shift = Rational(0);

  bool empty() const { return mult.empty() && deriv.empty() && is_zero(shift); }
  friend bool operator==(const VertexEntry& a, const VertexEntry& b) {
    return a.mult == b.mult && a.deriv == b.deriv && a.shift == b.shift;
  }
};

class VertexOperatorData {
 public:
  explicit VertexOperatorData(int h) : h_(h) {}
  int h() const { return h_; }
  const std::map<VertexKey, VertexEntry>& entries() const { return entries_; }

  void add_mult(VertexKey k, int n, const Rational& c);
  void add_deriv(VertexKey k, int n, const Rational& c);
  void add_shift(VertexKey k, const Rational& c);

  friend bool operator==(const VertexOperatorData& a, const VertexOperatorData& b) {
    return a.h_ == b.h_ && a.entries_ == b.entries_;
  }

 private:
  void prune(const VertexKey& k);
  int h_;
  std::map<VertexKey, VertexEntry> entries_;
};

// sets t_h = t_{2h} = ... = 0 in the multiplication part and drops
// d/dt_{kh} terms
VertexOperatorData mod_h_reduce(const VertexOperatorData& v);

// Gamma(w, zeta) with w = (h(lam+s))^{1/h}, zeta = (h lam)^{1/h}:
// multiplication exponent -sum_n (w^n - zeta^n) t_n / eps, derivation
// exponent sum_n (w^{-n} - zeta^{-n}) eps d/dt_n / n, Taylor-expanded in s
// to s_order with t-indices up to weight_cap; optional dilaton shift
// t_{h+1} -> t_{h+1} - 1/(h+1) applied to the multiplication exponent.
VertexOperatorData build_gamma_kp(int h, int s_order, int weight_cap, bool dilaton);

// Scalar series in (zeta, s), e.g. c(s/lam) or 1/c(s).
using VertexScalar = std::map<VertexKey, Rational>;

VertexScalar scalar_c_of_u(int h, int s_order);        // c(s/lam)
VertexScalar scalar_c_inverse(int h, int s_order);     // 1/c(s)
VertexScalar scalar_c(int h, int s_order);             // c(s)
VertexScalar scalar_mul(const VertexScalar& a, const VertexScalar& b, int s_order);

// The expanded operator e^M e^D: a normal-ordered ModePolynomial per
// (zeta, s) power.
class OperatorSeries {
 public:
  explicit OperatorSeries(int h) : h_(h) {}
  int h() const { return h_; }
  const std::map<VertexKey, ModePolynomial>& entries() const { return entries_; }
  std::map<VertexKey, ModePolynomial>& mutable_entries() { return entries_; }

  void add(const VertexKey& k, const ModePolynomial& p);

  OperatorSeries scaled(const VertexScalar& s, int s_order) const;
  friend OperatorSeries operator*(const OperatorSeries& a, const OperatorSeries& b);
  friend bool operator==(const OperatorSeries& a, const OperatorSeries& b) {
    return a.h_ == b.h_ && a.entries_ == b.entries_;
  }
  OperatorSeries& operator+=(const OperatorSeries& o);
  OperatorSeries& operator-=(const OperatorSeries& o);

  int s_order = 0;      // budget used during expansion
  int weight_cap = 0;   // mode truncation used during expansion

 private:
  int h_;
  std::map<VertexKey, ModePolynomial> entries_;
};

// exponent data -> e^M e^D, expanded with the given s budget and mode cap
OperatorSeries expand_vertex(const VertexOperatorData& v, int s_order, int weight_cap);

// Branch projector: keeps entries with zeta-exponent divisible by h and
// rescales; the result is indexed by integer powers of lam.
struct BranchKey {
  int lam = 0;
  int s = 0;
  friend auto operator<=>(const BranchKey&, const BranchKey&) = default;
};

class BranchSummed {
 public:
  std::map<BranchKey, ModePolynomial> entries;
  const ModePolynomial* find(int lam, int s) const {
    auto it = entries.find({lam, s});
    return it == entries.end() ? nullptr : &it->second;
  }
};

// sum over the h branches zeta -> omega^a zeta: kills fractional powers,
// multiplies surviving zeta^{p h} by h and rewrites it as h^{p+1} lam^p
BranchSummed branch_sum(const OperatorSeries& o);

// --- extraction -----------------------------------------------------------

struct ExtractOptions {
  bool reduced = false;   // drop t_{kh} content before expanding
  bool dilaton = false;   // apply the dilaton shift to the exponent
};

struct ExtractedOperators {
  int h;
  int k_max;
  int n_min, n_max;
  int weight_cap;
  std::map<std::pair<int, int>, ModePolynomial> ops;  // (k, n) -> J^k_n

  const ModePolynomial& at(int k, int n) const;
};

// Expands sum_a c(s/lam) Gamma(w,zeta) = h^2 + h s sum J^k_n lam^{-n-k-1}
// s^k / k! and reads off the window. Throws internal_error if the s^0 part
// is not exactly the scalar h^2 (the pole-cancellation invariant).
ExtractedOperators extract_J(int h, int k_max, int n_min, int n_max, int weight_cap,
                             ExtractOptions opts = {});

// Eq. of the closed-form Virasoro component: for reduced = true
//   (h^{-n-1}/2) sum_{m in E} :J_m J_{nh-m}: + delta_{n,0} (h^2-1)/(24h)
// and for reduced = false additionally the modes divisible by h plus the
// linear tail (n+1) h^{-n} J_{nh} / 2.
ModePolynomial virasoro_closed_form(int h, int n, int weight_cap, bool reduced = true);

// --- change of variables ---------------------------------------------------

// t_{-i+kh} = q_{k-1}^i / ((h-i)(2h-i)...(kh-i)), 1 <= i <= N = h-1.
struct ChangeVars {
  int h;

  // q_k^i = d(i,k) * t_m with m = (k+1)h - i
  int t_index(int k, int i) const;
  Rational d_factor(int i, int k) const;  // (h-i)(2h-i)...((k+1)h-i)

  // inverse: reduced index m -> (k, i); rejects m divisible by h
  std::pair<int, int> q_label(int m) const;
};

// --- action ----------------------------------------------------------------

// Action of a vertex operator on a series, per (zeta, s) power: shift the
// arguments by the derivation part, then multiply by the exponential of the
// multiplication part (equivalently, apply the expanded e^M e^D).
std::map<VertexKey, TruncatedSeries> apply_vertex(const VertexOperatorData& v,
                                                  const TruncatedSeries& d, int s_order);

}  // namespace wnk
