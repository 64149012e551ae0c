#pragma once

#include <string>
#include <vector>

namespace wnk::cli {

// exit codes shared by every subcommand
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_incomplete = 2;
inline constexpr int exit_inconsistent = 3;
inline constexpr int exit_skipped = 4;

struct CommandResult {
  int code = exit_ok;
  std::string out;  // machine-readable stdout payload
};

struct CorrelatorsConfig {
  int h = 2;
  int g_max = 1;
  int weight_max = 8;
  std::vector<int> k_set;  // empty = 1..N
  int residual_k = -1;     // -1 = h+1, 0 = disabled
  bool genus_major = false;
  bool spin_filter = false;
  std::string format = "json";
};

CommandResult cmd_correlators(const CorrelatorsConfig& cfg);

struct VerifyConfig {
  std::string which;
  int h = 2;
  int order = 6;        // c-series order
  int n_window = 3;
  int k_max = 2;
  int weight_cap = 10;
  int s_order = 4;
  int x_order = 6;
  int energy_max = 8;
  int charge_window = 2;
  int g_max = 2;
  int weight_max = 12;
  int threads = 1;
  unsigned seed = 1;
};

CommandResult cmd_verify(const VerifyConfig& cfg);

struct ExpandConfig {
  int h = 2;
  int order = 6;
};

CommandResult cmd_expand_c_series(const ExpandConfig& cfg);

struct DumpOpConfig {
  int h = 2;
  int k = 1;
  int n = 0;
  int weight_cap = 8;
  bool reduced = true;
  bool dilaton = false;
};

CommandResult cmd_dump_op(const DumpOpConfig& cfg);

}  // namespace wnk::cli
