#include "wnk/solver.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "wnk/basis.hpp"

namespace wnk {

std::string CorrKey::str() const {
  std::string s = fmt::format("<g={};", g);
  for (const Insertion& x : insertions) s += fmt::format(" ({},{})", x.i, x.k);
  return s + ">";
}

CorrKey monomial_to_key(const Monomial& m, int h, int g) {
  ChangeVars cv{h};
  CorrKey key;
  key.g = g;
  for (auto& [n, e] : m.vars) {
    auto [k, i] = cv.q_label(n);
    for (int r = 0; r < e; ++r) key.insertions.push_back({i, k});
  }
  std::sort(key.insertions.begin(), key.insertions.end());
  return key;
}

Monomial key_to_monomial(const CorrKey& key, int h) {
  ChangeVars cv{h};
  Monomial m;
  m.eps = 2 * key.g - 2;
  for (const Insertion& x : key.insertions) {
    Monomial v = monomial_var(cv.t_index(x.k, x.i));
    m = m * v;
  }
  return m;
}

bool spin_selection_allowed(int g, const std::vector<Insertion>& insertions, int h) {
  int N = h - 1;
  int total = 2 * g - 2;
  for (const Insertion& x : insertions) total -= N - x.i;
  return total % h == 0;
}

namespace {

using AffSeries = Series<AffineForm>;

// F-coefficient of a correlator: prod d(i,k)^{mult} / prod mult!
Rational f_coefficient(const CorrKey& key, int h) {
  ChangeVars cv{h};
  Rational c(1);
  int run = 1;
  for (std::size_t j = 0; j < key.insertions.size(); ++j) {
    const Insertion& x = key.insertions[j];
    c *= cv.d_factor(x.i, x.k);
    if (j > 0 && key.insertions[j] == key.insertions[j - 1])
      ++run;
    else
      run = 1;
    c /= Rational(run);
  }
  return c;
}

// set partitions of {0..n-1} as lists of blocks; iterate blocks by index
// because the recursion grows and shrinks the block vector
std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  auto rec = [&](auto&& self, int e) -> void {
    if (e == n) {
      out.push_back(cur);
      return;
    }
    std::size_t existing = cur.size();
    for (std::size_t b = 0; b < existing; ++b) {
      cur[b].push_back(e);
      self(self, e + 1);
      cur[b].pop_back();
    }
    cur.push_back({e});
    self(self, e + 1);
    cur.pop_back();
  };
  rec(rec, 0);
  return out;
}

// Reliability data for one constraint operator. The windows are derived
// from the shape inventory of the UNTRUNCATED operator (any multiset of at
// most k+1 modes with total shift -nh, with up to k dilaton replacements),
// not from the stored terms: cap truncation drops terms whose reads lie
// beyond the table, and those dropped terms are exactly the reason a slot
// near the cap can be inexact.
struct OpInfo {
  int h, k, n;
  bool dilaton;
  int g_max;
  ModePolynomial poly;

  // largest slot weight that any valid slot can have (harvest cap)
  int slot_weight_cap(int W) const { return std::max(0, W - n * h); }

  // whether the coefficient of (mon, eps) in the connected action is exact
  // for a table truncated at (W, g_max)
  bool valid_slot(const Monomial& mon, int W) const {
    int w = mon.weight();
    // plain terms read weight w + n h
    if (w + n * h > W) return false;
    // a term with j dilaton replacements reads weight w + n h + j(h+1);
    // j <= k since at least one derivation must remain
    if (dilaton) {
      for (int j = 1; j <= k; ++j) {
        if (n * h + j * (h + 1) < 1) continue;  // no derivation content
        if (w + n * h + j * (h + 1) > W) return false;
      }
    }
    // genus side: a shape of size s (modes plus replacements) can read a
    // single block of genus (e + s)/2; only shapes with s = e (mod 2)
    // contribute at eps power e
    int e = mon.eps;
    int par = ((e % 2) + 2) % 2;
    int s_max = 0;
    for (int s = 1; s <= k + 1; ++s)
      if (s % 2 == par) s_max = s;
    if (s_max > 0 && e + s_max > 2 * g_max) return false;
    return true;
  }
};

OpInfo make_op_info(int h, int k, int n, bool dilaton, int g_max, const ModePolynomial& p) {
  return OpInfo{h, k, n, dilaton, g_max, p};
}

// connected action of an operator on F = log D: for a term c :t_A d_B: the
// contribution is c (prod A) t_A sum over set partitions of B of
// prod_blocks d_block F, carried on eps^(term eps degree)
AffSeries connected_apply(const OpInfo& op, const AffSeries& f, int out_cap, int out_floor) {
  AffSeries out(out_cap, out_floor);
  // cache of derivative series of f
  std::map<std::vector<int>, AffSeries> dcache;
  auto derived = [&](const std::vector<int>& idx) -> const AffSeries& {
    auto it = dcache.find(idx);
    if (it != dcache.end()) return it->second;
    AffSeries d = f;
    for (int n : idx) d = series_derive(d, n);
    return dcache.emplace(std::move(idx), std::move(d)).first->second;
  };
  static std::map<int, std::vector<std::vector<std::vector<int>>>> partition_cache;
  auto partitions_of = [&](int n) -> const std::vector<std::vector<std::vector<int>>>& {
    auto it = partition_cache.find(n);
    if (it != partition_cache.end()) return it->second;
    return partition_cache.emplace(n, set_partitions(n)).first->second;
  };

  for (const ModeTerm& t : op.poly.terms()) {
    std::vector<int> mult, deriv;
    Rational factor = t.coeff;
    for (int m : t.modes) {
      if (m < 0) {
        mult.push_back(-m);
        factor *= Rational(-m);
      } else {
        deriv.push_back(m);
      }
    }
    Monomial amon;
    amon.eps = t.eps_degree();
    for (int n : mult) amon = amon * monomial_var(n);

    if (deriv.empty()) {
      out.add_term(amon, AffineForm(factor));
      continue;
    }
    for (const auto& part : partitions_of((int)deriv.size())) {
      AffSeries prod = series_const<AffineForm>(out_cap, out_floor, AffineForm(Rational(1)));
      bool started = false;
      for (const auto& block : part) {
        std::vector<int> idx;
        idx.reserve(block.size());
        for (int pos : block) idx.push_back(deriv[pos]);
        std::sort(idx.begin(), idx.end());
        const AffSeries& d = derived(idx);
        prod = started ? series_mul(prod, d) : d.truncated(out_cap, out_floor);
        started = true;
        if (prod.empty()) break;
      }
      if (prod.empty()) continue;
      for (auto& [mon, c] : prod.terms()) {
        AffineForm v = c;
        v *= factor;
        out.add_term(mon * amon, v);
      }
    }
  }
  return out;
}

std::vector<CorrKey> enumerate_keys(int h, int g_max, int weight_max) {
  std::vector<CorrKey> keys;
  for (const Monomial& m : enumerate_basis(weight_max, h)) {
    if (m.vars.empty()) continue;  // the empty correlator is fixed by D = 1 + ...
    for (int g = 0; g <= g_max; ++g) keys.push_back(monomial_to_key(m, h, g));
  }
  return keys;
}

}  // namespace

CorrelatorTable solve_constraints(int h, int g_max, int weight_max, SolveOptions opts) {
  const int N = h - 1;
  if (h < 2) throw domain_error("solve_constraints: h must be >= 2");
  std::vector<int> k_set = opts.k_set;
  if (k_set.empty())
    for (int k = 1; k <= N; ++k) k_set.push_back(k);
  int k_max = *std::max_element(k_set.begin(), k_set.end());

  // constraint operators (reduced, dilaton-shifted)
  int n_hi = weight_max / h + 1;
  ExtractedOperators ext = extract_J(h, k_max, -k_max, n_hi, weight_max, {true, true});
  std::vector<OpInfo> ops;
  for (int k : k_set)
    for (int n = -k; n <= n_hi; ++n)
      ops.push_back(make_op_info(h, k, n, true, g_max, ext.at(k, n)));

  // unknowns
  std::vector<CorrKey> keys = enumerate_keys(h, g_max, weight_max);
  std::map<CorrKey, int> key_id;
  for (const CorrKey& k : keys) key_id.emplace(k, (int)key_id.size());

  // levels in the requested elimination order
  std::map<std::pair<int, int>, std::vector<int>> levels;  // level tag -> unknown ids
  for (const CorrKey& k : keys) {
    int w = k.weight(h);
    std::pair<int, int> tag = opts.genus_major ? std::pair{k.g, w} : std::pair{w, k.g};
    levels[tag].push_back(key_id.at(k));
  }
  // weight-major runs all genera of one weight together
  if (!opts.genus_major) {
    std::map<std::pair<int, int>, std::vector<int>> merged;
    for (auto& [tag, ids] : levels) {
      auto& slot = merged[{tag.first, 0}];
      slot.insert(slot.end(), ids.begin(), ids.end());
    }
    levels = std::move(merged);
  }

  // symbolic F; the floor leaves room for genus-0 block products
  const int eps_floor = -2 * weight_max - 20;
  AffSeries f(weight_max, eps_floor);
  for (const CorrKey& k : keys)
    f.add_term(key_to_monomial(k, h),
               AffineForm::unknown(key_id.at(k), f_coefficient(k, h)));

  CorrelatorTable table(h, g_max, weight_max);
  std::vector<std::optional<Rational>> solved(keys.size());

  auto substitute_solved = [&](const std::vector<std::pair<int, Rational>>& vals) {
    AffSeries next(f.weight_cap(), f.eps_floor());
    for (auto& [mon, c] : f.terms()) {
      AffineForm v = c;
      for (auto& [id, value] : vals) v.substitute(id, value);
      next.add_term(mon, v);
    }
    f = std::move(next);
  };

  for (auto& [tag, ids] : levels) {
    std::vector<int> unknowns = ids;
    std::sort(unknowns.begin(), unknowns.end());
    std::map<int, int> column;  // unknown id -> column
    for (int i = 0; i < (int)unknowns.size(); ++i) column.emplace(unknowns[i], i);

    // harvest equations whose support lies in this level
    std::vector<AffineForm> eqs;
    std::vector<std::string> provenance;
    for (const OpInfo& op : ops) {
      AffSeries e = connected_apply(op, f, op.slot_weight_cap(weight_max), eps_floor);
      for (auto& [mon, c] : e.terms()) {
        if (c.poisoned) continue;
        if (!op.valid_slot(mon, weight_max)) continue;
        bool in_level = true;
        for (auto& [id, coeff] : c.lin)
          if (!column.count(id)) {
            in_level = false;
            break;
          }
        if (!in_level) continue;
        if (c.lin.empty()) {
          if (!is_zero(c.c0))
            throw solver_inconsistent(fmt::format(
                "constraint J^{}_{} has nonzero numeric residue {} at slot {} eps^{}", op.k, op.n,
                to_string(c.c0), render(mon), mon.eps));
          continue;
        }
        eqs.push_back(c);
        provenance.push_back(fmt::format("J^{}_{} at slot {} eps^{}", op.k, op.n, render(mon),
                                         mon.eps));
      }
    }

    // Gaussian elimination in the level
    std::vector<AffineForm> pivot(unknowns.size());
    std::vector<bool> have_pivot(unknowns.size(), false);
    for (std::size_t ei = 0; ei < eqs.size(); ++ei) {
      AffineForm eq = eqs[ei];
      while (!eq.lin.empty()) {
        int id = eq.lin.begin()->first;
        int col = column.at(id);
        if (!have_pivot[col]) {
          Rational lead = eq.lin.begin()->second;
          eq *= Rational(1) / lead;
          pivot[col] = eq;
          have_pivot[col] = true;
          break;
        }
        Rational lead = eq.lin.begin()->second;
        AffineForm scaled = pivot[col];
        scaled *= -lead;
        eq += scaled;
      }
      if (eq.lin.empty() && !is_zero(eq.c0))
        throw solver_inconsistent(fmt::format(
            "inconsistent constraint system at level ({}, {}): residue {} from {}", tag.first,
            tag.second, to_string(eq.c0), provenance[ei]));
    }

    // back substitution within the level
    std::vector<std::pair<int, Rational>> vals;
    std::vector<CorrKey> stuck;
    for (int col = (int)unknowns.size() - 1; col >= 0; --col) {
      if (!have_pivot[col]) {
        stuck.push_back(keys[unknowns[col]]);
        continue;
      }
      AffineForm eq = pivot[col];
      for (auto& [id, value] : vals) eq.substitute(id, value);
      if (eq.lin.size() != 1)
        throw internal_error("solver: pivot row not triangular after substitution");
      Rational value = -eq.c0 / eq.lin.begin()->second;
      vals.emplace_back(unknowns[col], value);
    }
    if (!stuck.empty()) {
      std::string msg = "solver incomplete; no pivot for:";
      for (auto& k : stuck) msg += " " + k.str();
      throw solver_incomplete(msg, stuck);
    }
    for (auto& [id, value] : vals) {
      solved[id] = value;
      table.set(keys[id], value);
    }
    substitute_solved(vals);
  }

  // spin filter cross-check: filtered correlators must have solved to zero
  if (opts.spin_filter) {
    for (const CorrKey& k : keys)
      if (!spin_selection_allowed(k.g, k.insertions, h)) {
        Rational v = *table.get(k);
        if (!is_zero(v))
          throw solver_inconsistent(fmt::format(
              "spin selection filter disagrees with solved value {} for {}", to_string(v),
              k.str()));
      }
  }
  return table;
}

TruncatedSeries assemble_D(const CorrelatorTable& table, int weight_cap, int eps_floor) {
  const int h = table.h();
  TruncatedSeries f(weight_cap, eps_floor);
  int cap = std::min(weight_cap, table.weight_max());
  for (const Monomial& m : enumerate_basis(cap, h)) {
    if (m.vars.empty()) continue;
    for (int g = 0; g <= table.g_max(); ++g) {
      CorrKey key = monomial_to_key(m, h, g);
      auto v = table.get(key);
      if (!v)
        throw missing_entry(fmt::format("assemble_D: missing table entry {}", key.str()), key);
      if (is_zero(*v)) continue;
      f.add_term(key_to_monomial(key, h), *v * f_coefficient(key, h));
    }
  }
  return series_exp(f);
}

ResidualReport residual_check(int h, const CorrelatorTable& table, int extra_k_max) {
  ResidualReport rep;
  rep.h = h;
  rep.extra_k_max = extra_k_max;
  const int W = table.weight_max();
  const int g_max = table.g_max();
  const int eps_floor = -2 * W - 20;

  // numeric F (validates completeness like assemble_D)
  AffSeries f(W, eps_floor);
  for (const Monomial& m : enumerate_basis(W, h)) {
    if (m.vars.empty()) continue;
    for (int g = 0; g <= g_max; ++g) {
      CorrKey key = monomial_to_key(m, h, g);
      auto v = table.get(key);
      if (!v)
        throw missing_entry(fmt::format("residual_check: missing table entry {}", key.str()), key);
      if (is_zero(*v)) continue;
      f.add_term(key_to_monomial(key, h), AffineForm(*v * f_coefficient(key, h)));
    }
  }

  int n_hi = W / h + 1;
  ExtractedOperators ext = extract_J(h, extra_k_max, -extra_k_max, n_hi, W, {true, true});
  for (int k = 1; k <= extra_k_max; ++k)
    for (int n = -k; n <= n_hi; ++n) {
      OpInfo op = make_op_info(h, k, n, true, g_max, ext.at(k, n));
      // conservative rectangle for the report; the per-slot test is finer
      int v_max = W - n * h - k * (h + 1);
      int e_even = 0;
      for (int s = 1; s <= k + 1; ++s)
        if (s % 2 == 0) e_even = s;
      rep.windows[{k, n}] = {v_max, 2 * g_max - (e_even > 0 ? e_even : 1)};
      AffSeries e = connected_apply(op, f, op.slot_weight_cap(W), eps_floor);
      // count every candidate grid slot; the sparse result stores only the
      // nonzero ones, which must all lie outside the window
      for (const Monomial& base : enumerate_basis(op.slot_weight_cap(W), h))
        for (int eps = eps_floor; eps <= 2 * g_max + k + 2; ++eps) {
          Monomial mon = base.with_eps(eps);
          if (!op.valid_slot(mon, W)) continue;
          ++rep.checked_slots;
        }
      for (auto& [mon, c] : e.terms()) {
        if (!op.valid_slot(mon, W)) continue;
        if (!is_zero(c.c0))
          rep.violations.push_back(
              {k, n, fmt::format("{} eps^{} -> {}", render(mon), mon.eps, to_string(c.c0))});
      }
    }
  return rep;
}

}  // namespace wnk
