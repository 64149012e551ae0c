#include "wnk/table_io.hpp"

#include <fmt/format.h>

#include <algorithm>

#include <json.hpp>

namespace wnk {

TableFormat parse_format(const std::string& name) {
  if (name == "json") return TableFormat::json;
  if (name == "csv") return TableFormat::csv;
  if (name == "text") return TableFormat::text;
  throw domain_error("unknown format: " + name);
}

namespace {

std::vector<std::pair<CorrKey, Rational>> sorted_entries(const CorrelatorTable& table) {
  std::vector<std::pair<CorrKey, Rational>> out(table.values().begin(), table.values().end());
  int h = table.h();
  std::stable_sort(out.begin(), out.end(), [h](const auto& a, const auto& b) {
    int wa = a.first.weight(h), wb = b.first.weight(h);
    return std::tuple(a.first.g, wa, a.first.insertions) <
           std::tuple(b.first.g, wb, b.first.insertions);
  });
  return out;
}

std::string encode_insertions(const CorrKey& key) {
  std::string s;
  for (const Insertion& x : key.insertions) {
    if (!s.empty()) s += ';';
    s += fmt::format("{}:{}", x.i, x.k);
  }
  return s;
}

nlohmann::ordered_json residual_json(const ResidualReport& rep) {
  nlohmann::ordered_json r;
  r["extra_k_max"] = rep.extra_k_max;
  r["status"] = rep.ok() ? "pass" : "fail";
  r["checked_slots"] = rep.checked_slots;
  nlohmann::ordered_json windows = nlohmann::ordered_json::array();
  for (auto& [kn, win] : rep.windows) {
    nlohmann::ordered_json w;
    w["k"] = kn.first;
    w["n"] = kn.second;
    w["max_weight"] = win.first;
    w["max_eps"] = win.second;
    windows.push_back(w);
  }
  r["windows"] = windows;
  nlohmann::ordered_json viols = nlohmann::ordered_json::array();
  for (auto& v : rep.violations) {
    nlohmann::ordered_json j;
    j["k"] = v.k;
    j["n"] = v.n;
    j["slot"] = v.slot;
    viols.push_back(j);
  }
  r["violations"] = viols;
  return r;
}

}  // namespace

std::string render_table(const CorrelatorTable& table, TableFormat format,
                         const ResidualReport* residuals) {
  auto entries = sorted_entries(table);
  switch (format) {
    case TableFormat::json: {
      nlohmann::ordered_json root;
      root["h"] = table.h();
      root["caps"] = {{"g_max", table.g_max()}, {"weight_max", table.weight_max()}};
      nlohmann::ordered_json corr = nlohmann::ordered_json::array();
      for (auto& [key, value] : entries) {
        nlohmann::ordered_json e;
        e["g"] = key.g;
        nlohmann::ordered_json ins = nlohmann::ordered_json::array();
        for (const Insertion& x : key.insertions) ins.push_back({{"i", x.i}, {"k", x.k}});
        e["insertions"] = ins;
        e["value"] = to_string(value);
        corr.push_back(e);
      }
      root["correlators"] = corr;
      if (residuals) root["residual_report"] = residual_json(*residuals);
      return root.dump(2) + "\n";
    }
    case TableFormat::csv: {
      std::string out = "g,insertions,value\n";
      for (auto& [key, value] : entries)
        out += fmt::format("{},{},{}\n", key.g, encode_insertions(key), to_string(value));
      if (residuals)
        out += fmt::format("# residuals: extra_k_max={} status={} checked={}\n",
                           residuals->extra_k_max, residuals->ok() ? "pass" : "fail",
                           residuals->checked_slots);
      return out;
    }
    case TableFormat::text: {
      std::string out;
      for (auto& [key, value] : entries)
        out += fmt::format("g={} [{}] = {}\n", key.g, encode_insertions(key), to_string(value));
      if (residuals)
        out += fmt::format("residuals: extra_k_max={} status={} checked={} violations={}\n",
                           residuals->extra_k_max, residuals->ok() ? "pass" : "fail",
                           residuals->checked_slots, residuals->violations.size());
      return out;
    }
  }
  throw internal_error("render_table: unreachable");
}

}  // namespace wnk
