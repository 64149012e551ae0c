#include "wnk/winf.hpp"

#include <fmt/format.h>

#include "wnk/basis.hpp"

namespace wnk {

void XSeries::trim() {
  while (!c.empty() && is_zero(c.front())) {
    c.erase(c.begin());
    ++lo;
  }
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

XSeries x_exp(const Rational& a, int order) {
  XSeries r;
  r.lo = 0;
  r.c.resize(order + 1);
  Rational pw(1);
  for (int k = 0; k <= order; ++k) {
    r.c[k] = pw / Rational(factorial(k));
    pw *= a;
  }
  return r;
}

XSeries x_mul(const XSeries& a, const XSeries& b, int hi) {
  XSeries r;
  r.lo = a.lo + b.lo;
  if (a.c.empty() || b.c.empty()) return r;
  int len = hi - r.lo + 1;
  if (len <= 0) return r;
  r.c.assign(len, Rational(0));
  for (int i = 0; i < (int)a.c.size(); ++i)
    for (int j = 0; j < (int)b.c.size(); ++j) {
      int k = a.lo + i + b.lo + j;
      if (k > hi) continue;
      r.c[k - r.lo] += a.c[i] * b.c[j];
    }
  r.trim();
  return r;
}

XSeries x_add(const XSeries& a, const XSeries& b) {
  if (a.c.empty()) return b;
  if (b.c.empty()) return a;
  XSeries r;
  r.lo = std::min(a.lo, b.lo);
  int hi = std::max(a.lo + (int)a.c.size(), b.lo + (int)b.c.size()) - 1;
  r.c.assign(hi - r.lo + 1, Rational(0));
  for (int i = 0; i < (int)a.c.size(); ++i) r.c[a.lo + i - r.lo] += a.c[i];
  for (int i = 0; i < (int)b.c.size(); ++i) r.c[b.lo + i - r.lo] += b.c[i];
  r.trim();
  return r;
}

XSeries x_inv_one_minus_exp(const Rational& a, int order) {
  // 1 - e^{ax} = -a x * unit(x), unit(0) = 1
  std::vector<Rational> unit(order + 1);
  Rational pw(1);
  for (int k = 0; k <= order; ++k) {
    unit[k] = pw / Rational(factorial(k + 1));
    pw *= a;
  }
  std::vector<Rational> inv(order + 1, Rational(0));
  inv[0] = Rational(1);
  for (int n = 1; n <= order; ++n) {
    Rational acc(0);
    for (int j = 1; j <= n; ++j) acc += unit[j] * inv[n - j];
    inv[n] = -acc;
  }
  XSeries r;
  r.lo = -1;
  r.c.resize(order + 2);
  for (int k = 0; k <= order; ++k) r.c[k] = -inv[k] / a;
  r.trim();
  return r;
}

XSeries central_term(int n, int h, int N, int x_order, int K) {
  if (n != 0) return XSeries{};
  XSeries first = x_mul(x_exp(rat(-N, 2 * h), x_order + 1),
                        x_inv_one_minus_exp(rat(1, h), x_order + 1), x_order);
  XSeries second = x_inv_one_minus_exp(Rational(1), x_order + 1);
  for (auto& v : second.c) v *= Rational(-K);
  XSeries r = x_add(first, second);
  // drop coefficients above the requested order
  if (!r.c.empty() && r.lo + (int)r.c.size() - 1 > x_order)
    r.c.resize(x_order - r.lo + 1);
  r.trim();
  if (K == h && r.lo < 0) throw internal_error("central_term: pole survives with K = h");
  return r;
}

std::vector<Rational> stirling_first(int k) {
  std::vector<Rational> p{Rational(1)};
  for (int l = 0; l < k; ++l) {
    std::vector<Rational> q(p.size() + 1, Rational(0));
    for (int j = 0; j < (int)p.size(); ++j) {
      q[j + 1] += p[j];
      q[j] -= p[j] * Rational(l);
    }
    p = std::move(q);
  }
  return p;
}

BandedMatrix phi_matrix(int n, int k, int h, int N) {
  PolyQ prod = PolyQ::constant(Rational(1));
  for (int l = 0; l < k; ++l)
    prod = prod * PolyQ::linear(rat(-N, 2) - Rational(l * h), Rational(-1));
  prod.scale(-pow_int(Rational(h), -n - k));
  BandedMatrix m;
  m.add_diag(-n * h, prod);
  return m;
}

Rational alpha_correction(int n, int k, int h, int N) {
  if (n != 0) return Rational(0);
  XSeries series = central_term(0, h, N, k + 1, h);
  std::vector<Rational> s = stirling_first(k);
  Rational r(0);
  for (int p = 0; p < (int)s.size(); ++p)
    r -= s[p] * Rational(factorial(p)) * series.coeff(p);
  return r;
}

namespace {

// bivariate series truncated at x^xo y^yo
struct XY {
  int xo, yo;
  std::vector<Rational> c;
  XY(int xo_, int yo_) : xo(xo_), yo(yo_), c((xo_ + 1) * (yo_ + 1), Rational(0)) {}
  Rational& at(int p, int q) { return c[p * (yo + 1) + q]; }
  const Rational& at(int p, int q) const { return c[p * (yo + 1) + q]; }
};

XY xy_mul(const XY& a, const XY& b) {
  XY r(a.xo, a.yo);
  for (int p = 0; p <= a.xo; ++p)
    for (int q = 0; q <= a.yo; ++q) {
      if (is_zero(a.at(p, q))) continue;
      for (int p2 = 0; p + p2 <= a.xo && p2 <= b.xo; ++p2)
        for (int q2 = 0; q + q2 <= a.yo && q2 <= b.yo; ++q2)
          r.at(p + p2, q + q2) += a.at(p, q) * b.at(p2, q2);
    }
  return r;
}

// (e^{x n2} - e^{y n1}) / (1 - e^{x+y}) for n1 + n2 = 0
XY central_series_xy(int n1, int n2, int xo, int yo) {
  // grid wide enough for the division by (x+y)
  const int W = xo + yo + 3;
  auto N_at = [&](int p, int q) -> Rational {
    Rational v(0);
    if (q == 0) v += pow_int(Rational(n2), p) / Rational(factorial(p));
    if (p == 0) v -= pow_int(Rational(n1), q) / Rational(factorial(q));
    return v;
  };
  // Q (x+y) = N: Q_{p,q} = N_{p+1,q} - Q_{p+1,q-1}
  std::vector<std::vector<Rational>> Q(W + 1, std::vector<Rational>(yo + 2, Rational(0)));
  for (int q = 0; q <= yo + 1; ++q)
    for (int p = W - 1; p >= 0; --p) {
      Rational v = N_at(p + 1, q);
      if (q > 0) v -= Q[p + 1][q - 1];
      Q[p][q] = v;
    }
  // consistency of the division: N_{0,q} = Q_{0,q-1} for q >= 1
  for (int q = 1; q <= yo + 1; ++q)
    if (N_at(0, q) != Q[0][q - 1])
      throw internal_error("central_series_xy: numerator not divisible by x+y");

  // 1 - e^{x+y} = (x+y) * v with v = -(1 + w), w = sum_{k>=1} (x+y)^k/(k+1)!
  XY w(xo, yo);
  for (int k = 1; k <= xo + yo; ++k) {
    Rational inv = Rational(1) / Rational(factorial(k + 1));
    for (int p = 0; p <= std::min(k, xo); ++p) {
      int q = k - p;
      if (q > yo) continue;
      w.at(p, q) += inv * binomial(Rational(k), p);
    }
  }
  // v^{-1} = -(1+w)^{-1} = -(1 - w + w^2 - ...)
  XY vinv(xo, yo);
  XY pw(xo, yo);
  pw.at(0, 0) = Rational(1);
  vinv.at(0, 0) = Rational(-1);
  for (int j = 1; j <= xo + yo; ++j) {
    pw = xy_mul(pw, w);
    Rational sign = (j % 2 == 0) ? Rational(-1) : Rational(1);
    for (int p = 0; p <= xo; ++p)
      for (int q = 0; q <= yo; ++q) vinv.at(p, q) += sign * pw.at(p, q);
  }
  XY quot(xo, yo);
  for (int p = 0; p <= xo; ++p)
    for (int q = 0; q <= yo; ++q) quot.at(p, q) = Q[p][q];
  return xy_mul(quot, vinv);
}

}  // namespace

Rational omega_exponential(int n1, int p, int n2, int q) {
  if (n1 + n2 != 0) return Rational(0);
  XY s = central_series_xy(n1, n2, p, q);
  return s.at(p, q) * Rational(factorial(p)) * Rational(factorial(q));
}

namespace {

std::map<std::pair<int, int>, Rational> diffop_product(int a, int j, int b, int l) {
  std::map<std::pair<int, int>, Rational> r;
  for (int t = 0; t <= j; ++t) {
    Rational falling(1);
    for (int u = 0; u < t; ++u) falling *= Rational(b - u);
    Rational c = binomial(Rational(j), t) * falling;
    if (is_zero(c)) continue;
    r[{a + b - t, j + l - t}] += c;
  }
  return r;
}

}  // namespace

ExpectedBracket expected_bracket(int n1, int k1, int n2, int k2, int h, int N) {
  (void)N;
  ExpectedBracket out;
  auto ab = diffop_product(n1 + k1, k1, n2 + k2, k2);
  auto ba = diffop_product(n2 + k2, k2, n1 + k1, k1);
  std::map<std::pair<int, int>, Rational> comm;
  for (auto& [key, c] : ab) comm[key] += c;
  for (auto& [key, c] : ba) comm[key] -= c;
  for (auto& [key, c] : comm) {
    if (is_zero(c)) continue;
    auto [gamma, cc] = key;
    out.combo[{cc, gamma - cc}] += -c;
  }
  for (auto it = out.combo.begin(); it != out.combo.end();)
    it = is_zero(it->second) ? out.combo.erase(it) : std::next(it);

  if (n1 + n2 == 0) {
    std::vector<Rational> s1 = stirling_first(k1), s2 = stirling_first(k2);
    Rational w(0);
    for (int p = 0; p < (int)s1.size(); ++p)
      for (int q = 0; q < (int)s2.size(); ++q) {
        if (is_zero(s1[p]) || is_zero(s2[q])) continue;
        w += s1[p] * s2[q] * omega_exponential(n1, p, n2, q);
      }
    out.central = w * Rational(h);
  }
  return out;
}

namespace {

void accumulate(std::map<WedgeState, Rational>& acc, const SignedState& s, const Rational& c) {
  if (s.zero()) return;
  auto [it, inserted] = acc.try_emplace(s.state, Rational(s.sign) * c);
  if (!inserted) {
    it->second += Rational(s.sign) * c;
    if (is_zero(it->second)) acc.erase(it);
  }
}

}  // namespace

FermionCheckReport check_fermion_algebra(int energy_cap, int charge_window) {
  FermionCheckReport rep;
  std::vector<WedgeState> states = enumerate_states(energy_cap, charge_window);
  rep.anticommutators_ok = true;

  int r_bound = 2 * (energy_cap + charge_window) + 3;
  for (int tr = -r_bound; tr <= r_bound && rep.failures.size() < 8; tr += 2) {
    for (int ts = -r_bound; ts <= r_bound && rep.failures.size() < 8; ts += 2) {
      for (const WedgeState& st : states) {
        // [psi_r, psi*_s]_+ = delta_{r,-s}
        std::map<WedgeState, Rational> acc;
        if (SignedState a = psi_star_apply(ts, st); !a.zero())
          accumulate(acc, psi_apply(tr, a.state), Rational(a.sign));
        if (SignedState b = psi_apply(tr, st); !b.zero())
          accumulate(acc, psi_star_apply(ts, b.state), Rational(b.sign));
        std::map<WedgeState, Rational> expect;
        if (tr + ts == 0) expect.emplace(st, Rational(1));
        if (acc != expect) {
          rep.anticommutators_ok = false;
          rep.failures.push_back(fmt::format("[psi,psi*]+ != delta at 2r={}, 2s={}", tr, ts));
          break;
        }
        // [psi, psi]_+ = 0
        std::map<WedgeState, Rational> acc2;
        if (SignedState c1 = psi_apply(ts, st); !c1.zero())
          accumulate(acc2, psi_apply(tr, c1.state), Rational(c1.sign));
        if (SignedState c2 = psi_apply(tr, st); !c2.zero())
          accumulate(acc2, psi_apply(ts, c2.state), Rational(c2.sign));
        if (!acc2.empty()) {
          rep.anticommutators_ok = false;
          rep.failures.push_back(fmt::format("[psi,psi]+ != 0 at 2r={}, 2s={}", tr, ts));
          break;
        }
        // [psi*, psi*]_+ = 0
        std::map<WedgeState, Rational> acc3;
        if (SignedState d1 = psi_star_apply(ts, st); !d1.zero())
          accumulate(acc3, psi_star_apply(tr, d1.state), Rational(d1.sign));
        if (SignedState d2 = psi_star_apply(tr, st); !d2.zero())
          accumulate(acc3, psi_star_apply(ts, d2.state), Rational(d2.sign));
        if (!acc3.empty()) {
          rep.anticommutators_ok = false;
          rep.failures.push_back(fmt::format("[psi*,psi*]+ != 0 at 2r={}, 2s={}", tr, ts));
          break;
        }
      }
    }
  }

  rep.projective_ok = true;
  std::vector<BandedMatrix> probes;
  for (int d = -2; d <= 2; ++d) {
    BandedMatrix m;
    m.add_diag(d, PolyQ::constant(Rational(1)));
    probes.push_back(m);
    BandedMatrix m2;
    m2.add_diag(d, PolyQ::linear(Rational(0), Rational(1)));
    probes.push_back(m2);
  }
  int cap = energy_cap + 8;
  for (std::size_t x = 0; x < probes.size() && rep.projective_ok; ++x)
    for (std::size_t y = x; y < probes.size() && rep.projective_ok; ++y) {
      try {
        measure_gl_cocycle(probes[x], probes[y], cap, charge_window);
      } catch (const internal_error&) {
        rep.projective_ok = false;
        rep.failures.push_back(
            fmt::format("projective defect not scalar for probe pair ({},{})", x, y));
      }
    }
  return rep;
}

Rational measure_gl_cocycle(const BandedMatrix& a, const BandedMatrix& b, int energy_cap,
                            int charge_window) {
  BandedMatrix ab_comm = bracket(a, b);
  std::vector<WedgeState> states = enumerate_states(energy_cap / 2, charge_window);
  bool have = false;
  Rational scalar(0);
  for (const WedgeState& st : states) {
    WedgeVector lhs;
    for (auto& [s2, c] : rhat_matrix_apply(b, st, energy_cap).terms)
      for (auto& [s3, c3] : rhat_matrix_apply(a, s2, energy_cap).terms)
        lhs.add(s3, c3 * c, energy_cap);
    for (auto& [s2, c] : rhat_matrix_apply(a, st, energy_cap).terms)
      for (auto& [s3, c3] : rhat_matrix_apply(b, s2, energy_cap).terms)
        lhs.add(s3, -(c3 * c), energy_cap);
    for (auto& [s3, c3] : rhat_matrix_apply(ab_comm, st, energy_cap).terms)
      lhs.add(s3, -c3, energy_cap);
    if (lhs.overflow) throw internal_error("measure_gl_cocycle: energy truncation too small");
    Rational here(0);
    for (auto& [s3, c3] : lhs.terms) {
      if (!(s3 == st)) throw internal_error("measure_gl_cocycle: defect is not scalar");
      here = c3;
    }
    if (!have) {
      scalar = here;
      have = true;
    } else if (scalar != here) {
      throw internal_error("measure_gl_cocycle: defect scalar varies across states");
    }
  }
  return scalar;
}

namespace {

struct FermionOp {
  BandedMatrix matrix;
  Rational constant;
};

FermionOp fermion_image(int n, int k, int h, int N) {
  return {phi_matrix(n, k, h, N), alpha_correction(n, k, h, N)};
}

WedgeVector apply_fermion(const FermionOp& op, const WedgeState& st, int cap) {
  WedgeVector v = rhat_matrix_apply(op.matrix, st, cap);
  if (!is_zero(op.constant)) v.add(st, op.constant, cap);
  return v;
}

}  // namespace

BracketCheckReport check_fermionic_brackets(int h, int n_window, int k_max, int energy_cap,
                                            int charge_window) {
  BracketCheckReport rep;
  const int N = h - 1;

  bool unique = true;
  try {
    central_term(0, h, N, 4, h);
  } catch (const internal_error&) {
    unique = false;
  }
  for (int K : {h - 1, h + 1}) {
    XSeries s = central_term(0, h, N, 4, K);
    if (!(s.lo == -1 && s.coeff(-1) == Rational(K - h))) unique = false;
  }
  rep.central_unique_ok = unique;
  if (!unique) rep.failures.push_back("central constant uniqueness check failed");

  std::vector<std::pair<int, int>> gens;  // (n, k)
  for (int k = 0; k <= k_max; ++k)
    for (int n = -n_window; n <= n_window; ++n) gens.emplace_back(n, k);

  int probe_energy = energy_cap - 2 * n_window * h - 2;
  if (probe_energy < 0) probe_energy = 0;
  std::vector<WedgeState> states = enumerate_states(probe_energy, charge_window);

  for (auto [n1, k1] : gens)
    for (auto [n2, k2] : gens) {
      if (std::make_pair(n1, k1) > std::make_pair(n2, k2)) continue;
      ExpectedBracket eb = expected_bracket(n1, k1, n2, k2, h, N);
      FermionOp A = fermion_image(n1, k1, h, N);
      FermionOp B = fermion_image(n2, k2, h, N);
      bool pair_ok = true;
      for (const WedgeState& st : states) {
        WedgeVector lhs;
        for (auto& [s2, c] : apply_fermion(B, st, energy_cap).terms)
          for (auto& [s3, c3] : apply_fermion(A, s2, energy_cap).terms)
            lhs.add(s3, c3 * c, energy_cap);
        for (auto& [s2, c] : apply_fermion(A, st, energy_cap).terms)
          for (auto& [s3, c3] : apply_fermion(B, s2, energy_cap).terms)
            lhs.add(s3, -(c3 * c), energy_cap);
        WedgeVector rhs;
        for (auto& [kn, c] : eb.combo) {
          FermionOp C = fermion_image(kn.second, kn.first, h, N);
          for (auto& [s3, c3] : apply_fermion(C, st, energy_cap).terms)
            rhs.add(s3, c3 * c, energy_cap);
        }
        rhs.add(st, eb.central, energy_cap);
        if (lhs.overflow || rhs.overflow)
          throw internal_error("check_fermionic_brackets: probe left the truncation");
        if (!(lhs == rhs)) {
          pair_ok = false;
          break;
        }
      }
      ++rep.pairs_checked;
      rep.lines.push_back(fmt::format("[J^{}_{}, J^{}_{}] central={} {}", k1, n1, k2, n2,
                                      to_string(eb.central), pair_ok ? "PASS" : "FAIL"));
      if (!pair_ok)
        rep.failures.push_back(fmt::format(
            "fermionic bracket mismatch at (n1={},k1={},n2={},k2={})", n1, k1, n2, k2));
    }
  return rep;
}

BracketCheckReport check_bosonic_brackets(int h, int n_window, int k_max, int weight_cap) {
  BracketCheckReport rep;
  rep.central_unique_ok = true;  // a fermionic concern, recorded there
  const int N = h - 1;

  // the bracket of two window generators lands on k <= k1+k2-1, n = n1+n2
  int combo_k = std::max(k_max, 2 * k_max - 1);
  int combo_n = 2 * n_window;
  int cap_op = weight_cap + 2 * n_window * h + h;
  ExtractedOperators ops = extract_J(h, combo_k, -combo_n, combo_n, cap_op, {false, false});

  const int eps_floor = -(weight_cap + 8);
  std::vector<Monomial> basis = enumerate_basis(weight_cap);

  std::vector<std::pair<int, int>> gens;
  for (int k = 0; k <= k_max; ++k)
    for (int n = -n_window; n <= n_window; ++n) gens.emplace_back(n, k);

  for (auto [n1, k1] : gens)
    for (auto [n2, k2] : gens) {
      if (std::make_pair(n1, k1) > std::make_pair(n2, k2)) continue;
      ExpectedBracket eb = expected_bracket(n1, k1, n2, k2, h, N);
      const ModePolynomial& A = ops.at(k1, n1);
      const ModePolynomial& B = ops.at(k2, n2);
      bool pair_ok = true;
      for (const Monomial& m : basis) {
        TruncatedSeries probe(cap_op, eps_floor);
        probe.add_term(m, Rational(1));
        TruncatedSeries lhs = A.apply(B.apply(probe)) - B.apply(A.apply(probe));
        TruncatedSeries rhs(cap_op, eps_floor);
        for (auto& [kn, c] : eb.combo) {
          TruncatedSeries t = ops.at(kn.first, kn.second).apply(probe);
          t.scale(c);
          rhs += t;
        }
        TruncatedSeries central = probe;
        central.scale(eb.central);
        rhs += central;
        if (!(lhs == rhs)) {
          pair_ok = false;
          break;
        }
      }
      ++rep.pairs_checked;
      rep.lines.push_back(fmt::format("[J^{}_{}, J^{}_{}] central={} {}", k1, n1, k2, n2,
                                      to_string(eb.central), pair_ok ? "PASS" : "FAIL"));
      if (!pair_ok)
        rep.failures.push_back(fmt::format(
            "bosonic bracket mismatch at (n1={},k1={},n2={},k2={})", n1, k1, n2, k2));
    }
  return rep;
}

}  // namespace wnk
