#include "wnk/wedge.hpp"

#include <algorithm>

namespace wnk {

namespace {

// explicit labels of the state from s = 0 down to values >= floor
std::vector<int> materialize(const WedgeState& st, int floor) {
  std::vector<int> labels;
  int s = 0;
  while (true) {
    int l = st.label(s);
    if (l < floor && s >= (int)st.parts.size()) break;
    labels.push_back(l);
    ++s;
  }
  return labels;
}

// rebuild (charge, partition) from a strictly decreasing explicit label
// list that is followed by the untouched vacuum tail of the given charge
WedgeState from_labels(const std::vector<int>& labels, int charge) {
  WedgeState st;
  st.charge = charge;
  st.parts.reserve(labels.size());
  for (int s = 0; s < (int)labels.size(); ++s) {
    int part = labels[s] - (charge - s - 1);
    if (part < 0) throw internal_error("wedge: label list not canonical");
    st.parts.push_back(part);
  }
  while (!st.parts.empty() && st.parts.back() == 0) st.parts.pop_back();
  return st;
}

bool occupied(const WedgeState& st, int label) {
  if (label <= st.charge - (int)st.parts.size() - 1) return true;  // vacuum tail
  for (int s = 0; s < (int)st.parts.size(); ++s)
    if (st.label(s) == label) return true;
  return false;
}

}  // namespace

SignedState wedge_label(int label, const WedgeState& st) {
  if (occupied(st, label)) return {0, {}};
  int floor = std::min(label, st.charge - (int)st.parts.size() - 1) - 1;
  std::vector<int> labels = materialize(st, floor);
  auto pos = std::lower_bound(labels.begin(), labels.end(), label, std::greater<int>());
  int p = (int)(pos - labels.begin());
  labels.insert(pos, label);
  return {(p % 2 == 0) ? 1 : -1, from_labels(labels, st.charge + 1)};
}

SignedState contract_label(int label, const WedgeState& st) {
  if (!occupied(st, label)) return {0, {}};
  int floor = std::min(label, st.charge - (int)st.parts.size() - 1) - 1;
  std::vector<int> labels = materialize(st, floor);
  auto pos = std::find(labels.begin(), labels.end(), label);
  int p = (int)(pos - labels.begin());
  labels.erase(pos);
  return {(p % 2 == 0) ? 1 : -1, from_labels(labels, st.charge - 1)};
}

SignedState psi_apply(int twice_r, const WedgeState& st) {
  if ((twice_r & 1) == 0) throw domain_error("psi_apply: r must be a half-integer");
  return wedge_label((1 - twice_r) / 2, st);
}

SignedState psi_star_apply(int twice_r, const WedgeState& st) {
  if ((twice_r & 1) == 0) throw domain_error("psi_star_apply: r must be a half-integer");
  return contract_label((twice_r + 1) / 2, st);
}

SignedState rhat_apply(int i, int j, const WedgeState& st) {
  if (j > 0) {
    SignedState a = contract_label(j, st);
    if (a.zero()) return a;
    SignedState b = wedge_label(i, a.state);
    if (b.zero()) return b;
    b.sign *= a.sign;
    return b;
  }
  SignedState a = wedge_label(i, st);
  if (a.zero()) return a;
  SignedState b = contract_label(j, a.state);
  if (b.zero()) return b;
  b.sign *= -a.sign;
  return b;
}

PolyQ PolyQ::constant(const Rational& v) {
  PolyQ p;
  if (!is_zero(v)) p.c = {v};
  return p;
}

PolyQ PolyQ::linear(const Rational& a0, const Rational& a1) {
  PolyQ p;
  p.c = {a0, a1};
  p.trim();
  return p;
}

void PolyQ::trim() {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

Rational PolyQ::eval(int x) const {
  Rational r(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * Rational(x) + *it;
  return r;
}

PolyQ PolyQ::shifted_arg(int delta) const {
  // p(x + delta) via binomial expansion
  PolyQ r;
  r.c.assign(c.size(), Rational(0));
  for (int k = 0; k < (int)c.size(); ++k) {
    Rational pw(1);
    for (int j = k; j >= 0; --j) {
      r.c[j] += c[k] * binomial(Rational(k), k - j) * pw;
      pw *= Rational(delta);
    }
  }
  r.trim();
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), Rational(0));
  for (int k = 0; k < (int)o.c.size(); ++k) c[k] += o.c[k];
  trim();
  return *this;
}

PolyQ& PolyQ::scale(const Rational& s) {
  if (is_zero(s)) {
    c.clear();
    return *this;
  }
  for (auto& v : c) v *= s;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  PolyQ r;
  if (a.zero() || b.zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (int i = 0; i < (int)a.c.size(); ++i)
    for (int j = 0; j < (int)b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

void BandedMatrix::add_diag(int offset, const PolyQ& p) {
  if (p.zero()) return;
  auto it = diags_.find(offset);
  if (it == diags_.end()) {
    diags_.emplace(offset, p);
  } else {
    it->second += p;
    if (it->second.zero()) diags_.erase(it);
  }
}

BandedMatrix& BandedMatrix::operator+=(const BandedMatrix& o) {
  for (auto& [d, p] : o.diags_) add_diag(d, p);
  return *this;
}

BandedMatrix& BandedMatrix::operator-=(const BandedMatrix& o) {
  for (auto [d, p] : o.diags_) {
    p.scale(Rational(-1));
    add_diag(d, p);
  }
  return *this;
}

BandedMatrix& BandedMatrix::scale(const Rational& s) {
  if (is_zero(s)) {
    diags_.clear();
    return *this;
  }
  for (auto& [d, p] : diags_) p.scale(s);
  return *this;
}

BandedMatrix operator*(const BandedMatrix& a, const BandedMatrix& b) {
  // (AB)_{j+da+db, j} = A(col j + db) B(col j)
  BandedMatrix r;
  for (auto& [da, pa] : a.diags_)
    for (auto& [db, pb] : b.diags_) r.add_diag(da + db, pa.shifted_arg(db) * pb);
  return r;
}

BandedMatrix bracket(const BandedMatrix& a, const BandedMatrix& b) {
  BandedMatrix r = a * b;
  r -= b * a;
  return r;
}

void WedgeVector::add(const WedgeState& st, const Rational& c, int energy_cap) {
  if (is_zero(c)) return;
  if (st.energy() > energy_cap) {
    overflow = true;
    return;
  }
  auto it = terms.find(st);
  if (it == terms.end()) {
    terms.emplace(st, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& o) {
  for (auto& [st, c] : o.terms) {
    auto it = terms.find(st);
    if (it == terms.end()) {
      terms.emplace(st, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }
  overflow = overflow || o.overflow;
  return *this;
}

WedgeVector rhat_matrix_apply(const BandedMatrix& a, const WedgeState& st, int energy_cap) {
  WedgeVector out;
  int len = (int)st.parts.size();
  int top = st.label(0);
  for (auto& [d, p] : a.diags()) {
    int lo = st.charge - len - std::abs(d) - 4;
    int hi = top + std::abs(d) + 4;
    for (int col = lo; col <= hi; ++col) {
      SignedState img = rhat_apply(col + d, col, st);
      if (img.zero()) continue;
      Rational c = p.eval(col);
      if (is_zero(c)) continue;
      out.add(img.state, Rational(img.sign) * c, energy_cap);
    }
  }
  return out;
}

std::vector<WedgeState> enumerate_states(int energy_cap, int charge_window) {
  std::vector<WedgeState> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int max_part, int budget) -> void {
    for (int m = -charge_window; m <= charge_window; ++m) out.push_back(WedgeState{m, cur});
    for (int p = std::min(max_part, budget); p >= 1; --p) {
      cur.push_back(p);
      self(self, p, budget - p);
      cur.pop_back();
    }
  };
  rec(rec, energy_cap, energy_cap);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wnk
