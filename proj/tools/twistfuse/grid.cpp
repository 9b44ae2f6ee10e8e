#include <algorithm>
#include <future>

#include "twistfuse/cli.hpp"
#include "twistfuse/log.hpp"

namespace twistfuse::cli {

std::vector<GridCell> default_grid() {
  std::vector<GridCell> cells;
  for (int n = 1; n <= 3; ++n)
    for (int level = 1; level <= (n == 3 ? 3 : 4); ++level) cells.push_back({n, level});
  return cells;
}

bool GridReport::passed() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const VerifyReport& r) { return r.passed(); });
}

GridReport run_grid_verify(std::span<const GridCell> cells, bool parallel) {
  GridReport report;
  if (cells.empty()) {
    warn("verification grid is empty; nothing was checked");
    return report;
  }
  auto run = [](GridCell cell) { return verify_suite(LevelContext(cell.n, cell.level)); };
  if (!parallel) {
    for (const auto& cell : cells) report.cells.push_back(run(cell));
    return report;
  }
  std::vector<std::future<VerifyReport>> pending;
  for (const auto& cell : cells) pending.push_back(std::async(std::launch::async, run, cell));
  for (auto& f : pending) report.cells.push_back(f.get());
  return report;
}

}  // namespace twistfuse::cli
