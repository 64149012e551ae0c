#pragma once

#include <string>

#include "wnk/solver.hpp"

namespace wnk {

enum class TableFormat { json, csv, text };

TableFormat parse_format(const std::string& name);

// deterministic rendering: correlators sorted by (g, weight, insertions)
std::string render_table(const CorrelatorTable& table, TableFormat format,
                         const ResidualReport* residuals = nullptr);

}  // namespace wnk
