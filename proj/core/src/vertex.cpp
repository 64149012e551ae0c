#include "wnk/vertex.hpp"

#include <fmt/format.h>

namespace wnk {

void VertexOperatorData::add_mult(VertexKey k, int n, const Rational& c) {
  if (is_zero(c)) return;
  auto& slot = entries_[k].mult[n];
  slot += c;
  if (is_zero(slot)) {
    entries_[k].mult.erase(n);
    prune(k);
  }
}

void VertexOperatorData::add_deriv(VertexKey k, int n, const Rational& c) {
  if (is_zero(c)) return;
  auto& slot = entries_[k].deriv[n];
  slot += c;
  if (is_zero(slot)) {
    entries_[k].deriv.erase(n);
    prune(k);
  }
}

void VertexOperatorData::add_shift(VertexKey k, const Rational& c) {
  if (is_zero(c)) return;
  auto& e = entries_[k];
  e.shift += c;
  if (e.empty()) prune(k);
}

void VertexOperatorData::prune(const VertexKey& k) {
  auto it = entries_.find(k);
  if (it != entries_.end() && it->second.empty()) entries_.erase(it);
}

VertexOperatorData mod_h_reduce(const VertexOperatorData& v) {
  VertexOperatorData r(v.h());
  for (auto& [k, e] : v.entries()) {
    for (auto& [n, c] : e.mult)
      if (n % v.h() != 0) r.add_mult(k, n, c);
    for (auto& [n, c] : e.deriv)
      if (n % v.h() != 0) r.add_deriv(k, n, c);
    r.add_shift(k, e.shift);
  }
  return r;
}

VertexOperatorData build_gamma_kp(int h, int s_order, int weight_cap, bool dilaton) {
  if (s_order < 1) throw domain_error("build_gamma_kp: s_order must be >= 1");
  VertexOperatorData v(h);
  for (int n = 1; n <= weight_cap; ++n) {
    for (int j = 1; j <= s_order; ++j) {
      // w^n - zeta^n = sum_j binom(n/h, j) h^j s^j zeta^{n - jh}
      Rational up = binomial(rat(n, h), j) * pow_int(Rational(h), j);
      if (!is_zero(up)) v.add_mult({n - j * h, j}, n, -up);
      // (w^{-n} - zeta^{-n})/n
      Rational down = binomial(rat(-n, h), j) * pow_int(Rational(h), j) / Rational(n);
      if (!is_zero(down)) v.add_deriv({-n - j * h, j}, n, down);
    }
  }
  if (dilaton) {
    // t_{h+1} -> t_{h+1} - 1/(h+1): the multiplication exponent gains the
    // scalar (w^{h+1} - zeta^{h+1})/(h+1) carried on eps^{-1}
    for (int j = 1; j <= s_order; ++j) {
      Rational up = binomial(rat(h + 1, h), j) * pow_int(Rational(h), j);
      v.add_shift({h + 1 - j * h, j}, up / Rational(h + 1));
    }
  }
  return v;
}

VertexScalar scalar_c_of_u(int h, int s_order) {
  VertexScalar r;
  auto c = c_series(h, s_order);
  for (int j = 0; j <= s_order; ++j) {
    Rational v = c[j] * pow_int(Rational(h), j);
    if (!is_zero(v)) r[{-j * h, j}] = v;
  }
  return r;
}

VertexScalar scalar_c_inverse(int h, int s_order) {
  VertexScalar r;
  auto c = c_series_inverse(h, s_order);
  for (int j = 0; j <= s_order; ++j)
    if (!is_zero(c[j])) r[{0, j}] = c[j];
  return r;
}

VertexScalar scalar_c(int h, int s_order) {
  VertexScalar r;
  auto c = c_series(h, s_order);
  for (int j = 0; j <= s_order; ++j)
    if (!is_zero(c[j])) r[{0, j}] = c[j];
  return r;
}

VertexScalar scalar_mul(const VertexScalar& a, const VertexScalar& b, int s_order) {
  VertexScalar r;
  for (auto& [ka, ca] : a)
    for (auto& [kb, cb] : b) {
      if (ka.s + kb.s > s_order) continue;
      auto& slot = r[{ka.zeta + kb.zeta, ka.s + kb.s}];
      slot += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();)
    it = is_zero(it->second) ? r.erase(it) : std::next(it);
  return r;
}

void OperatorSeries::add(const VertexKey& k, const ModePolynomial& p) {
  if (p.empty()) return;
  auto it = entries_.find(k);
  if (it == entries_.end())
    entries_.emplace(k, p);
  else {
    it->second += p;
    if (it->second.empty()) entries_.erase(it);
  }
}

OperatorSeries OperatorSeries::scaled(const VertexScalar& s, int s_order) const {
  OperatorSeries r(h_);
  r.s_order = s_order;
  r.weight_cap = weight_cap;
  for (auto& [k, p] : entries_)
    for (auto& [ks, c] : s) {
      if (k.s + ks.s > s_order) continue;
      ModePolynomial q = p;
      q.scale(c);
      r.add({k.zeta + ks.zeta, k.s + ks.s}, q);
    }
  return r;
}

OperatorSeries operator*(const OperatorSeries& a, const OperatorSeries& b) {
  OperatorSeries r(a.h_);
  r.s_order = std::min(a.s_order, b.s_order);
  r.weight_cap = std::max(a.weight_cap, b.weight_cap);
  for (auto& [ka, pa] : a.entries_)
    for (auto& [kb, pb] : b.entries_) {
      if (ka.s + kb.s > r.s_order) continue;
      ModePolynomial prod = concat_product(pa, pb).truncated_to_cap(r.weight_cap);
      r.add({ka.zeta + kb.zeta, ka.s + kb.s}, prod);
    }
  return r;
}

OperatorSeries& OperatorSeries::operator+=(const OperatorSeries& o) {
  for (auto& [k, p] : o.entries_) add(k, p);
  return *this;
}

OperatorSeries& OperatorSeries::operator-=(const OperatorSeries& o) {
  for (auto& [k, p] : o.entries_) {
    ModePolynomial q = p;
    q.scale(Rational(-1));
    add(k, q);
  }
  return *this;
}

namespace {

// exponential of a one-sided exponent (all multiplication or all
// derivation); factors commute, so plain powers divided by factorials
OperatorSeries exp_one_sided(const OperatorSeries& x, int s_order, int weight_cap, int h) {
  OperatorSeries r(h);
  r.s_order = s_order;
  r.weight_cap = weight_cap;
  r.add({0, 0}, ModePolynomial::scalar(Rational(1)));
  OperatorSeries power = r;
  // every factor carries s >= 1
  for (int p = 1; p <= s_order; ++p) {
    power = power * x;
    if (power.entries().empty()) break;
    Rational inv_fact = Rational(1) / Rational(factorial(p));
    OperatorSeries term = power;
    for (auto& [k, mp] : term.mutable_entries()) mp.scale(inv_fact);
    r += term;
  }
  return r;
}

}  // namespace

OperatorSeries expand_vertex(const VertexOperatorData& v, int s_order, int weight_cap) {
  const int h = v.h();
  OperatorSeries m_exp(h), d_exp(h);
  m_exp.s_order = d_exp.s_order = s_order;
  m_exp.weight_cap = d_exp.weight_cap = weight_cap;
  for (auto& [k, e] : v.entries()) {
    if (k.s > s_order) continue;
    for (auto& [n, c] : e.mult) {
      if (n > weight_cap) continue;
      // c * t_n = (c/n) J_{-n} (the mode carries the eps dressing)
      m_exp.add(k, ModePolynomial::mode(-n, c / Rational(n)));
    }
    if (!is_zero(e.shift)) m_exp.add(k, ModePolynomial::scalar(e.shift, -1));
    for (auto& [n, c] : e.deriv) {
      if (n > weight_cap) continue;
      // c * d/dt_n = c J_n
      d_exp.add(k, ModePolynomial::mode(n, c));
    }
  }
  OperatorSeries em = exp_one_sided(m_exp, s_order, weight_cap, h);
  OperatorSeries ed = exp_one_sided(d_exp, s_order, weight_cap, h);
  return em * ed;
}

BranchSummed branch_sum(const OperatorSeries& o) {
  BranchSummed r;
  const int h = o.h();
  for (auto& [k, p] : o.entries()) {
    if (k.zeta % h != 0) continue;
    int lam_pow = k.zeta / h;
    ModePolynomial q = p;
    q.scale(Rational(h) * pow_int(Rational(h), lam_pow));
    auto it = r.entries.find({lam_pow, k.s});
    if (it == r.entries.end())
      r.entries.emplace(BranchKey{lam_pow, k.s}, q);
    else
      it->second += q;
  }
  for (auto it = r.entries.begin(); it != r.entries.end();)
    it = it->second.empty() ? r.entries.erase(it) : std::next(it);
  return r;
}

const ModePolynomial& ExtractedOperators::at(int k, int n) const {
  auto it = ops.find({k, n});
  if (it == ops.end()) throw domain_error(fmt::format("extracted window has no (k={}, n={})", k, n));
  return it->second;
}

ExtractedOperators extract_J(int h, int k_max, int n_min, int n_max, int weight_cap,
                             ExtractOptions opts) {
  const int s_order = k_max + 1;
  VertexOperatorData gamma = build_gamma_kp(h, s_order, weight_cap, opts.dilaton);
  if (opts.reduced) gamma = mod_h_reduce(gamma);
  OperatorSeries expanded = expand_vertex(gamma, s_order, weight_cap);
  BranchSummed bs = branch_sum(expanded.scaled(scalar_c_of_u(h, s_order), s_order));

  // pole cancellation: the s^0 part must be exactly the scalar h^2 at lam^0
  for (auto& [k, p] : bs.entries) {
    if (k.s != 0) continue;
    ModePolynomial expect;
    if (k.lam == 0) expect = ModePolynomial::scalar(Rational(h * h));
    if (!(p == expect))
      throw internal_error(fmt::format(
          "extract_J: s^0 term at lam^{} is {}, violating pole cancellation", k.lam, p.render()));
  }

  ExtractedOperators out{h, k_max, n_min, n_max, weight_cap, {}};
  for (int k = 0; k <= k_max; ++k) {
    Rational scale = Rational(factorial(k)) / Rational(h);
    for (int n = n_min; n <= n_max; ++n) {
      ModePolynomial op;
      if (const ModePolynomial* p = bs.find(-n - k - 1, k + 1)) op = *p;
      op.scale(scale);
      out.ops.emplace(std::pair{k, n}, std::move(op));
    }
  }
  return out;
}

ModePolynomial virasoro_closed_form(int h, int n, int weight_cap, bool reduced) {
  ModePolynomial r;
  Rational quad = pow_int(Rational(h), -n - 1) / Rational(2);
  int bound = weight_cap + std::abs(n) * h + h;
  for (int m = -bound; m <= bound; ++m) {
    int mm = n * h - m;
    if (m == 0 || mm == 0) continue;
    if (reduced && (m % h == 0)) continue;
    ModeTerm t{quad, {m, mm}, 0, 0};
    if (!mode_term_within_cap(t, weight_cap)) continue;
    r.add_term(std::move(t));
  }
  if (!reduced && n != 0) {
    ModeTerm lin{Rational(n + 1) * pow_int(Rational(h), -n) / Rational(2), {n * h}, 0, 0};
    if (mode_term_within_cap(lin, weight_cap)) r.add_term(std::move(lin));
  }
  if (n == 0) r += ModePolynomial::scalar(rat(h * h - 1, 24 * h));
  return r;
}

int ChangeVars::t_index(int k, int i) const {
  if (i < 1 || i > h - 1) throw domain_error("ChangeVars: i out of range");
  if (k < 0) throw domain_error("ChangeVars: k must be >= 0");
  return (k + 1) * h - i;
}

Rational ChangeVars::d_factor(int i, int k) const {
  if (i < 1 || i > h - 1) throw domain_error("ChangeVars: i out of range");
  Rational d(1);
  for (int j = 1; j <= k + 1; ++j) d *= Rational(j * h - i);
  return d;
}

std::pair<int, int> ChangeVars::q_label(int m) const {
  if (m <= 0 || m % h == 0)
    throw domain_error(fmt::format("ChangeVars: index {} has no q preimage", m));
  int i = h - (m % h);
  int k = (m + i) / h - 1;
  return {k, i};
}

std::map<VertexKey, TruncatedSeries> apply_vertex(const VertexOperatorData& v,
                                                  const TruncatedSeries& d, int s_order) {
  OperatorSeries o = expand_vertex(v, s_order, d.weight_cap());
  std::map<VertexKey, TruncatedSeries> out;
  for (auto& [k, p] : o.entries()) {
    TruncatedSeries img = p.apply(d);
    if (!img.empty()) out.emplace(k, std::move(img));
  }
  return out;
}

}  // namespace wnk
