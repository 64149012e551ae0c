#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace {

int emit(const wnk::cli::CommandResult& res, const std::string& out_file) {
  if (out_file.empty()) {
    std::fputs(res.out.c_str(), stdout);
  } else {
    std::ofstream f(out_file);
    f << res.out;
  }
  return res.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic engine for W-constraint operators and intersection numbers"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");
  app.set_help_all_flag("--help-all", "print help for all subcommands");

  std::string out_file;
  int threads = 1;
  app.add_option("--threads", threads, "worker threads (output is thread-count independent)");

  // correlators
  wnk::cli::CorrelatorsConfig cc;
  auto* corr = app.add_subcommand("correlators", "solve the constraints and print the table");
  corr->set_help_flag("--help", "print help");
  corr->add_option("--h", cc.h, "singularity parameter h = N+1")->check(CLI::Range(2, 64));
  corr->add_option("--g-max", cc.g_max, "genus cap");
  corr->add_option("--weight-max", cc.weight_max, "t-weight cap");
  corr->add_option("--k-set", cc.k_set, "constraint families to use (default 1..N)");
  corr->add_option("--residual-k", cc.residual_k, "residual check up to this k (0 disables)");
  corr->add_flag("--genus-major", cc.genus_major, "use the genus-major elimination order");
  corr->add_flag("--spin-filter", cc.spin_filter, "cross-check the moduli non-emptiness filter");
  corr->add_option("--format", cc.format, "json|csv|text");
  corr->add_option("--out", out_file, "write the table to a file instead of stdout");

  // verify
  wnk::cli::VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->set_help_flag("--help", "print help");
  verify->add_option("which", vc.which,
                     "c-series|virasoro|w-bracket|theorem2a|residuals|fermion")
      ->required();
  verify->add_option("--h", vc.h)->check(CLI::Range(2, 64));
  verify->add_option("--order", vc.order);
  verify->add_option("--n-window", vc.n_window);
  verify->add_option("--k-max", vc.k_max);
  verify->add_option("--weight-cap", vc.weight_cap);
  verify->add_option("--s-order", vc.s_order);
  verify->add_option("--x-order", vc.x_order);
  verify->add_option("--energy-max", vc.energy_max);
  verify->add_option("--charge-window", vc.charge_window);
  verify->add_option("--g-max", vc.g_max);
  verify->add_option("--weight-max", vc.weight_max);
  verify->add_option("--seed", vc.seed);

  // expand c-series
  wnk::cli::ExpandConfig ec;
  auto* expand = app.add_subcommand("expand", "print series expansions");
  expand->set_help_flag("--help", "print help");
  std::string what = "c-series";
  expand->add_option("what", what, "c-series")->required();
  expand->add_option("--h", ec.h)->check(CLI::Range(2, 64));
  expand->add_option("--order", ec.order);

  // dump-op
  wnk::cli::DumpOpConfig dc;
  bool full = false;
  auto* dump = app.add_subcommand("dump-op", "print one extracted operator in canonical form");
  dump->set_help_flag("--help", "print help");
  dump->add_option("--h", dc.h)->check(CLI::Range(2, 64));
  dump->add_option("--k", dc.k);
  dump->add_option("--n", dc.n);
  dump->add_option("--weight-cap", dc.weight_cap);
  dump->add_flag("--full", full, "keep the modes divisible by h");
  dump->add_flag("--dilaton", dc.dilaton, "apply the dilaton shift");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*corr) return emit(wnk::cli::cmd_correlators(cc), out_file);
    if (*verify) {
      vc.threads = threads;
      return emit(wnk::cli::cmd_verify(vc), out_file);
    }
    if (*expand) {
      if (what != "c-series") {
        std::fprintf(stderr, "unknown expansion '%s'\n", what.c_str());
        return wnk::cli::exit_skipped;
      }
      return emit(wnk::cli::cmd_expand_c_series(ec), out_file);
    }
    if (*dump) {
      dc.reduced = !full;
      return emit(wnk::cli::cmd_dump_op(dc), out_file);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return wnk::cli::exit_failure;
  }
  return wnk::cli::exit_failure;
}
