#include "commands.hpp"

#include <fmt/format.h>

#include "wnk/equivalence.hpp"
#include "wnk/solver.hpp"
#include "wnk/table_io.hpp"
#include "wnk/winf.hpp"

namespace wnk::cli {

namespace {

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

CommandResult cmd_correlators(const CorrelatorsConfig& cfg) {
  CommandResult res;
  try {
    SolveOptions opts;
    opts.k_set = cfg.k_set;
    opts.genus_major = cfg.genus_major;
    opts.spin_filter = cfg.spin_filter;
    CorrelatorTable table = solve_constraints(cfg.h, cfg.g_max, cfg.weight_max, opts);
    int extra_k = cfg.residual_k < 0 ? cfg.h + 1 : cfg.residual_k;
    if (extra_k > 0) {
      ResidualReport rep = residual_check(cfg.h, table, extra_k);
      res.out = render_table(table, parse_format(cfg.format), &rep);
      if (!rep.ok()) res.code = exit_inconsistent;
    } else {
      res.out = render_table(table, parse_format(cfg.format), nullptr);
    }
  } catch (const solver_incomplete& e) {
    res.code = exit_incomplete;
    res.out = fmt::format("error: {}\n", e.what());
  } catch (const solver_inconsistent& e) {
    res.code = exit_inconsistent;
    res.out = fmt::format("error: {}\n", e.what());
  }
  return res;
}

CommandResult cmd_expand_c_series(const ExpandConfig& cfg) {
  CommandResult res;
  auto c = c_series(cfg.h, cfg.order);
  for (int k = 0; k <= cfg.order; ++k) res.out += fmt::format("{}: {}\n", k, to_string(c[k]));
  return res;
}

CommandResult cmd_dump_op(const DumpOpConfig& cfg) {
  CommandResult res;
  ExtractedOperators ops = extract_J(cfg.h, cfg.k, cfg.n, cfg.n, cfg.weight_cap,
                                     {cfg.reduced, cfg.dilaton});
  res.out = ops.at(cfg.k, cfg.n).render() + "\n";
  return res;
}

namespace {

CommandResult verify_c_series(const VerifyConfig& cfg) {
  CommandResult res;
  auto c = c_series(cfg.h, std::max(cfg.order, 3));
  Rational expect2 = rat(cfg.h * cfg.h - 1, 24 * cfg.h);
  bool ok = c[0] == Rational(cfg.h) && is_zero(c[1]) && c[2] == expect2 && c[3] == -expect2;
  res.out = fmt::format("c-series h={}: coefficients {} {} {} {} {}\n", cfg.h, to_string(c[0]),
                        to_string(c[1]), to_string(c[2]), to_string(c[3]), pass_fail(ok));
  res.code = ok ? exit_ok : exit_failure;
  return res;
}

CommandResult verify_virasoro(const VerifyConfig& cfg) {
  CommandResult res;
  ExtractedOperators ext =
      extract_J(cfg.h, 1, -cfg.n_window, cfg.n_window, cfg.weight_cap, {true, false});
  bool all_ok = true;
  for (int n = -cfg.n_window; n <= cfg.n_window; ++n) {
    ModePolynomial closed = virasoro_closed_form(cfg.h, n, cfg.weight_cap, true);
    auto bad = first_action_mismatch(ext.at(1, n), closed, cfg.weight_cap, cfg.h);
    bool ok = !bad.has_value();
    all_ok = all_ok && ok;
    res.out += fmt::format("virasoro h={} n={}: {}\n", cfg.h, n, pass_fail(ok));
  }
  res.code = all_ok ? exit_ok : exit_failure;
  return res;
}

CommandResult verify_w_bracket(const VerifyConfig& cfg) {
  CommandResult res;
  if (cfg.k_max < 0 || cfg.n_window < 0) {
    res.out = "w-bracket: empty generator window, nothing to check\n";
    res.code = exit_skipped;
    return res;
  }
  BracketCheckReport fermi = check_fermionic_brackets(cfg.h, cfg.n_window, cfg.k_max,
                                                      cfg.energy_max, cfg.charge_window);
  for (auto& line : fermi.lines) res.out += "fermionic " + line + "\n";
  res.out += fmt::format("fermionic central uniqueness (K = h): {}\n",
                         pass_fail(fermi.central_unique_ok));
  BracketCheckReport boso = check_bosonic_brackets(cfg.h, cfg.n_window, cfg.k_max,
                                                   std::min(cfg.weight_cap, 8));
  for (auto& line : boso.lines) res.out += "bosonic " + line + "\n";
  bool ok = fermi.ok() && boso.ok();
  res.out += fmt::format("w-bracket h={}: {} pairs, {}\n", cfg.h,
                         fermi.pairs_checked + boso.pairs_checked, pass_fail(ok));
  res.code = ok ? exit_ok : exit_failure;
  return res;
}

CommandResult verify_theorem2a(const VerifyConfig& cfg) {
  CommandResult res;
  EquivalenceReport rep =
      check_picture_equivalence(cfg.h, cfg.n_window, cfg.k_max, cfg.weight_cap, cfg.s_order);
  res.out += fmt::format("prefactor identity: {}\n", pass_fail(rep.prefactor_ok));
  res.out += fmt::format("per-branch operator identity: {}\n", pass_fail(rep.per_branch_ok));
  res.out += fmt::format("branch-summed convolution identity: {}\n",
                         pass_fail(rep.convolution_ok));
  res.out += fmt::format("reduction factorization: {}\n", pass_fail(rep.reduction_factor_ok));
  res.out += fmt::format("action on basis monomials: {}\n", pass_fail(rep.action_ok));
  for (auto& m : rep.mismatches) res.out += "  mismatch: " + m + "\n";
  res.out += fmt::format("theorem2a h={}: {}\n", cfg.h, pass_fail(rep.ok()));
  res.code = rep.ok() ? exit_ok : exit_failure;
  return res;
}

CommandResult verify_residuals(const VerifyConfig& cfg) {
  CommandResult res;
  try {
    CorrelatorTable table = solve_constraints(cfg.h, cfg.g_max, cfg.weight_max, {});
    ResidualReport rep = residual_check(cfg.h, table, cfg.h + 1);
    bool vacuous = rep.checked_slots == 0;
    res.out += fmt::format("residuals h={} g_max={} weight_max={}: checked {} slots, {}{}\n",
                           cfg.h, cfg.g_max, cfg.weight_max, rep.checked_slots,
                           pass_fail(rep.ok()), vacuous ? " (vacuous)" : "");
    for (auto& v : rep.violations)
      res.out += fmt::format("  violation at k={} n={}: {}\n", v.k, v.n, v.slot);
    res.code = rep.ok() ? exit_ok : exit_failure;
  } catch (const solver_incomplete& e) {
    res.code = exit_incomplete;
    res.out = fmt::format("error: {}\n", e.what());
  }
  return res;
}

CommandResult verify_fermion(const VerifyConfig& cfg) {
  CommandResult res;
  FermionCheckReport rep = check_fermion_algebra(cfg.energy_max, cfg.charge_window);
  res.out += fmt::format("anticommutation relations (energy <= {}, |charge| <= {}): {}\n",
                         cfg.energy_max, cfg.charge_window, pass_fail(rep.anticommutators_ok));
  res.out += fmt::format("projective scalar defect: {}\n", pass_fail(rep.projective_ok));
  for (auto& f : rep.failures) res.out += "  " + f + "\n";
  res.code = rep.ok() ? exit_ok : exit_failure;
  return res;
}

}  // namespace

CommandResult cmd_verify(const VerifyConfig& cfg) {
  if (cfg.which == "c-series") return verify_c_series(cfg);
  if (cfg.which == "virasoro") return verify_virasoro(cfg);
  if (cfg.which == "w-bracket") return verify_w_bracket(cfg);
  if (cfg.which == "theorem2a" || cfg.which == "equivalence") return verify_theorem2a(cfg);
  if (cfg.which == "residuals") return verify_residuals(cfg);
  if (cfg.which == "fermion") return verify_fermion(cfg);
  CommandResult res;
  res.code = exit_skipped;
  res.out = fmt::format("unknown check '{}' skipped\n", cfg.which);
  return res;
}

}  // namespace wnk::cli
