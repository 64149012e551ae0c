#include "wnk/equivalence.hpp"

#include <fmt/format.h>

#include "wnk/basis.hpp"

namespace wnk {

VertexOperatorData build_gamma_a(int h, int s_order, int weight_cap, bool dilaton) {
  if (s_order < 1) throw domain_error("build_gamma_a: s_order must be >= 1");
  const int N = h - 1;
  ChangeVars cv{h};
  VertexOperatorData v(h);

  // Taylor difference of a period monomial c (h lam)^{mu/(2h)} between
  // lam + s and lam: entries at ((mu/2 - j h), s^j), j >= 1
  auto add_delta = [&](const PeriodMonomial& pm, const Rational& scale, bool is_mult, int n) {
    if (pm.mu % 2 != 0)
      throw internal_error("build_gamma_a: period exponent not an integer over h");
    for (int j = 1; j <= s_order; ++j) {
      Rational c = scale * pm.coeff * binomial(rat(pm.mu, 2 * h), j) * pow_int(Rational(h), j);
      VertexKey key{pm.mu / 2 - j * h, j};
      if (is_mult)
        v.add_mult(key, n, c);
      else
        v.add_deriv(key, n, c);
    }
  };

  for (int i = 1; i <= N; ++i) {
    for (int k = 0;; ++k) {
      int m = cv.t_index(k, i);
      if (m > weight_cap) break;
      // multiplication exponent: the quantization of Omega(q(z), phi_-) is
      // -sum_k q_k^i (v_i, Delta I^{(-1-k)}) / eps with q_k^i = d(i,k) t_m
      add_delta(period_t0(-k - 1, i, h), -cv.d_factor(i, k), true, m);
      // derivation exponent: the argument shift by eps phi_+ gives
      // eps (-1)^k (I^{(k)}, v^i) d/dq_k^i,  v^i = v_{h-i},
      // d/dq_k^i = d/dt_m / d(i,k)
      Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
      add_delta(period_t0(k, h - i, h), sign / cv.d_factor(i, k), false, m);
    }
  }
  if (dilaton) {
    // same scalar as on the t side: t_{h+1} -> t_{h+1} - 1/(h+1)
    for (int j = 1; j <= s_order; ++j) {
      Rational up = binomial(rat(h + 1, h), j) * pow_int(Rational(h), j);
      v.add_shift({h + 1 - j * h, j}, up / Rational(h + 1));
    }
  }
  return v;
}

ExtractedOperators extract_W(int h, int k_max, int n_min, int n_max, int weight_cap) {
  const int s_order = k_max;
  VertexOperatorData gamma = build_gamma_a(h, std::max(1, s_order), weight_cap);
  OperatorSeries expanded = expand_vertex(gamma, s_order, weight_cap);
  VertexScalar c_a = scalar_mul(scalar_c_of_u(h, s_order), scalar_c_inverse(h, s_order), s_order);
  BranchSummed bs = branch_sum(expanded.scaled(c_a, s_order));

  ExtractedOperators out{h, k_max, n_min, n_max, weight_cap, {}};
  for (int k = 0; k <= k_max; ++k)
    for (int n = n_min; n <= n_max; ++n) {
      ModePolynomial op;
      if (const ModePolynomial* p = bs.find(-n - k, k)) op = *p;
      out.ops.emplace(std::pair{k, n}, std::move(op));
    }
  return out;
}

std::optional<Monomial> first_action_mismatch(const ModePolynomial& a, const ModePolynomial& b,
                                              int weight_cap, int reduced_h) {
  if (a == b) return std::nullopt;  // canonical forms equal, action equal
  const int eps_floor = -(weight_cap + 4);
  for (const Monomial& m : enumerate_basis(weight_cap, reduced_h)) {
    TruncatedSeries probe(weight_cap, eps_floor);
    probe.add_term(m, Rational(1));
    if (!(a.apply(probe) == b.apply(probe))) return m;
  }
  return std::nullopt;
}

namespace {

// multiplication exponent restricted to indices divisible by h (full minus
// reduced), as vertex data
VertexOperatorData split_h_part(const VertexOperatorData& full, bool mult_side) {
  VertexOperatorData r(full.h());
  for (auto& [k, e] : full.entries()) {
    if (mult_side)
      for (auto& [n, c] : e.mult)
        if (n % full.h() == 0) r.add_mult(k, n, c);
    if (!mult_side)
      for (auto& [n, c] : e.deriv)
        if (n % full.h() == 0) r.add_deriv(k, n, c);
  }
  return r;
}

// s-convolution of a branch-summed expansion with a scalar s-series
BranchSummed convolve_s(const BranchSummed& b, const std::vector<Rational>& c, int s_order) {
  BranchSummed r;
  for (auto& [k, p] : b.entries)
    for (int j = 0; j < (int)c.size(); ++j) {
      if (is_zero(c[j]) || k.s + j > s_order) continue;
      ModePolynomial q = p;
      q.scale(c[j]);
      auto it = r.entries.find({k.lam, k.s + j});
      if (it == r.entries.end())
        r.entries.emplace(BranchKey{k.lam, k.s + j}, std::move(q));
      else
        it->second += q;
    }
  for (auto it = r.entries.begin(); it != r.entries.end();)
    it = it->second.empty() ? r.entries.erase(it) : std::next(it);
  return r;
}

bool branch_summed_equal(const BranchSummed& a, const BranchSummed& b, int s_order,
                         std::vector<std::string>& mismatches, const char* what) {
  bool ok = true;
  auto scan = [&](const BranchSummed& x, const BranchSummed& y, bool flip) {
    for (auto& [k, p] : x.entries) {
      if (k.s > s_order) continue;
      const ModePolynomial* q = y.find(k.lam, k.s);
      if (q && *q == p) continue;
      if (!q && p.empty()) continue;
      if (flip && q) continue;  // already reported from the other side
      ok = false;
      mismatches.push_back(fmt::format("{}: entry lam^{} s^{} differs", what, k.lam, k.s));
    }
  };
  scan(a, b, false);
  scan(b, a, true);
  return ok;
}

}  // namespace

EquivalenceReport check_picture_equivalence(int h, int n_window, int k_max, int weight_cap,
                                            int s_order) {
  EquivalenceReport rep;

  // (1) the prefactor identity behind the bosonic expansion:
  //     (h s) w^{-N/2} zeta^{-N/2} (w - zeta)^{-1} = c(s/lam)
  rep.prefactor_ok = vertex_prefactor_times_hs(h, s_order) == phase_factor(h, s_order).c_of_u;
  if (!rep.prefactor_ok) rep.mismatches.push_back("prefactor series differ");

  // (2) per branch, the period-side operator equals the reduced t-side one
  VertexOperatorData gamma_a = build_gamma_a(h, s_order, weight_cap);
  VertexOperatorData gamma_full = build_gamma_kp(h, s_order, weight_cap, false);
  VertexOperatorData gamma_red = mod_h_reduce(gamma_full);
  rep.per_branch_ok = gamma_a == gamma_red;
  if (!rep.per_branch_ok) rep.mismatches.push_back("Gamma_a != reduced Gamma as exponent data");

  // (3) branch-summed: c(s) * (W expansion) == sum_a c(s/lam) red Gamma
  OperatorSeries red_exp = expand_vertex(gamma_red, s_order, weight_cap);
  BranchSummed rhs = branch_sum(red_exp.scaled(scalar_c_of_u(h, s_order), s_order));
  VertexScalar c_a = scalar_mul(scalar_c_of_u(h, s_order), scalar_c_inverse(h, s_order), s_order);
  OperatorSeries a_exp = expand_vertex(build_gamma_a(h, s_order, weight_cap), s_order, weight_cap);
  BranchSummed w_side = branch_sum(a_exp.scaled(c_a, s_order));
  BranchSummed lhs = convolve_s(w_side, c_series(h, s_order), s_order);
  rep.convolution_ok = branch_summed_equal(lhs, rhs, s_order, rep.mismatches, "convolution");

  // (4) Gamma = e^{M_h} red Gamma e^{D_h}; the M_h exponent in closed form
  VertexOperatorData mh = split_h_part(gamma_full, true);
  VertexOperatorData dh = split_h_part(gamma_full, false);
  VertexOperatorData mh_closed(h);
  for (int k = 1; k * h <= weight_cap; ++k)
    for (int j = 1; j <= std::min(k, s_order); ++j) {
      // -(w^{kh} - zeta^{kh}) t_{kh} = -h^k ((lam+s)^k - lam^k) t_{kh}
      Rational c = binomial(Rational(k), j) * pow_int(Rational(h), j);
      mh_closed.add_mult({(k - j) * h, j}, k * h, -c);
    }
  bool closed_ok = mh == mh_closed;
  OperatorSeries full_exp = expand_vertex(gamma_full, s_order, weight_cap);
  OperatorSeries factored = expand_vertex(mh, s_order, weight_cap) * red_exp *
                            expand_vertex(dh, s_order, weight_cap);
  bool factor_ok = full_exp == factored;
  rep.reduction_factor_ok = closed_ok && factor_ok;
  if (!closed_ok) rep.mismatches.push_back("M_h exponent differs from its closed form");
  if (!factor_ok) rep.mismatches.push_back("Gamma != e^{M_h} red Gamma e^{D_h}");

  // (5) the same identities checked by action on basis monomials: compare
  // the branch-summed entries of (3) inside the requested window
  rep.action_ok = true;
  for (int k = 0; k <= k_max && rep.action_ok; ++k)
    for (int n = -n_window; n <= n_window && rep.action_ok; ++n) {
      for (int j = 0; j <= s_order; ++j) {
        ModePolynomial l, r;
        if (const ModePolynomial* p = lhs.find(-n - k, j)) l = *p;
        if (const ModePolynomial* p = rhs.find(-n - k, j)) r = *p;
        if (auto bad = first_action_mismatch(l, r, weight_cap, h)) {
          rep.action_ok = false;
          rep.mismatches.push_back(fmt::format(
              "action mismatch at lam^{} s^{} on monomial {}", -n - k, j, render(*bad)));
          break;
        }
      }
    }
  return rep;
}

}  // namespace wnk
