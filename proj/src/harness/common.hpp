#pragma once

#include <chrono>
#include <functional>

#include "kmatch/harness.hpp"

namespace kmatch::harness::detail {

std::string cell_label(const Cell& cell);

/// Row skeleton with the cell parameters.
Row cell_row(const Cell& cell);

/// Runs the extremal pipeline for a cell and fills the common columns.
/// Engine errors are caught and returned in `error`.
struct CellOutcome {
  Row row;
  std::optional<ExtremalReport> report;
  std::string error;
};
CellOutcome run_cell(const Cell& cell, const ExtremalOptions& opt);

/// Does every enumerated maximum have the extremal structure the predicate
/// calls for (t-stars, or t-set-stars for the set kinds)?
bool maxima_are_stars(const ExtremalReport& rep);

/// Evaluates cells (possibly worker-parallel) keeping grid order.
std::vector<Row> map_cells(const std::vector<Cell>& cells, unsigned workers,
                           const std::function<Row(const Cell&, unsigned inner_workers)>& f);

json campaign_meta(const Campaign& c);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace kmatch::harness::detail
