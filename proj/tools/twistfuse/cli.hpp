#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistfuse/signature.hpp"
#include "twistfuse/verify.hpp"

namespace twistfuse::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kCacheEnv = "TWISTFUSE_CACHE";

/// Runs one invocation; `args` excludes the program name. Exit codes: 0 on
/// success, 1 when a verification gate fails, 2 on usage errors.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// "a,b,c" -> parts. Throws InvalidArgument naming the offending text.
std::vector<int> parse_parts(std::string_view text);
GLSignature parse_gl(std::string_view text);
SpSignature parse_sp(std::string_view text);

struct GridCell {
  int n;
  int level;
};

/// N in {1,2,3} x level in {1..4}, with N = 3 capped at level 3.
std::vector<GridCell> default_grid();

struct GridReport {
  std::vector<VerifyReport> cells;
  bool passed() const;
};

/// verify_suite on every cell, concurrently when `parallel`. Results keep
/// the order of `cells`. An empty grid passes with a warning.
GridReport run_grid_verify(std::span<const GridCell> cells, bool parallel = true);

struct ExportResult {
  std::filesystem::path path;
  bool reused = false;
};

/// Writes the fusion-table document for ctx to `path` (temp file + rename).
/// An existing file whose format, (N, level) and basis checksum match a
/// fresh enumeration is kept as is. Module matrices are cross-checked
/// against the evaluation route before anything is written.
ExportResult export_tables(const LevelContext& ctx, const std::filesystem::path& path);

/// <dir>/tables_N<n>_L<level>.json
std::filesystem::path cache_file(const std::filesystem::path& dir, const LevelContext& ctx);

void write_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace twistfuse::cli
