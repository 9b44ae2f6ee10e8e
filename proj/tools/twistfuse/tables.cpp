#include <fstream>
#include <sstream>

#include <unistd.h>

#include "twistfuse/cli.hpp"
#include "twistfuse/json.hpp"

namespace twistfuse::cli {
namespace fs = std::filesystem;

fs::path cache_file(const fs::path& dir, const LevelContext& ctx) {
  return dir / ("tables_N" + std::to_string(ctx.n()) + "_L" + std::to_string(ctx.level()) +
                ".json");
}

void write_atomically(const fs::path& path, std::string_view contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    os.flush();
    if (!os) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
  }
}

namespace {

bool cached_document_valid(const fs::path& path, const LevelContext& ctx) {
  std::ifstream is(path);
  if (!is) return false;
  const auto doc = nlohmann::json::parse(is, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) return false;
  try {
    if (doc.at("format").get<int>() != kTablesFormat || doc.at("N").get<int>() != ctx.n() ||
        doc.at("level").get<int>() != ctx.level())
      return false;
    const auto stored = doc.at("basisChecksum").get<std::string>();
    const auto fresh =
        basis_checksum(enumerate_untwisted_basis(ctx), enumerate_twisted_basis(ctx));
    const auto listed =
        basis_checksum(doc.at("basisUntwisted").get<std::vector<GLSignature>>(),
                       doc.at("basisTwisted").get<std::vector<SpSignature>>());
    return stored == fresh && listed == fresh && doc.contains("fundamentalMatrices") &&
           doc.contains("moduleMatrices");
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

ExportResult export_tables(const LevelContext& ctx, const fs::path& path) {
  if (fs::exists(path) && cached_document_valid(path, ctx)) return {path, true};

  const FusionModel model(ctx);
  for (int k = 1; k < ctx.rank(); ++k) {
    if (model.module_route_a(k).entries != model.module_route_b(exterior_power(k, ctx)).entries)
      throw RouteFailure("route mismatch for Lambda^" + std::to_string(k) +
                         "; refusing to write " + path.string());
  }
  write_atomically(path, fusion_tables_document(model).dump(2) + "\n");
  return {path, false};
}

}  // namespace twistfuse::cli
