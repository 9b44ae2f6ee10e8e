#include "twistfuse/json.hpp"

#include <cstdint>
#include <cstdio>

namespace twistfuse {

void to_json(nlohmann::json& j, const HalfIntVector& g) {
  j = {{"doubled", std::vector<int>(g.doubled().begin(), g.doubled().end())},
       {"type", g.parity() == Parity::Integral ? "integral" : "half-integral"}};
}

void from_json(const nlohmann::json& j, HalfIntVector& g) {
  g = HalfIntVector(j.at("doubled").get<std::vector<int>>());
  const auto type = j.at("type").get<std::string>();
  const bool integral = g.parity() == Parity::Integral;
  if (type != (integral ? "integral" : "half-integral"))
    throw InvalidArgument("evaluation vector type flag '" + type +
                          "' disagrees with its doubled parts");
}

nlohmann::json matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

void to_json(nlohmann::json& j, const EvalPoint& pt) {
  auto angles = nlohmann::json::array();
  for (std::size_t i = 0; i < pt.size(); ++i) {
    const Rational x = pt.angle(i);
    angles.push_back(std::to_string(x.numerator()) + "/" + std::to_string(x.denominator()));
  }
  j = {{"g", pt.origin()}, {"label", pt.origin().str()}, {"angles", angles}};
}

void to_json(nlohmann::json& j, const CheckResult& c) {
  const char* comparison = c.comparison == Comparison::Below   ? "<"
                           : c.comparison == Comparison::Above ? ">"
                                                               : "==";
  j = {{"name", c.name},
       {"passed", c.passed},
       {"measured", c.measured},
       {"threshold", c.threshold},
       {"comparison", comparison},
       {"detail", c.detail}};
}

void to_json(nlohmann::json& j, const VerifyReport& r) {
  j = {{"N", r.n}, {"level", r.level}, {"passed", r.passed()}, {"checks", r.checks}};
}

void to_json(nlohmann::json& j, const ClosedFormReport& r) {
  auto pairs = nlohmann::json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"name", p.name},
                     {"direct", p.direct},
                     {"closedForm", p.closed_form},
                     {"absDiff", p.abs_diff()}});
  j = {{"N", r.n}, {"level", r.level}, {"pairs", pairs}};
}

void to_json(nlohmann::json& j, const K0Square& k0) {
  j = {{"result", k0.decomposition},
       {"consistency",
        {{"cSquared", k0.c_squared},
         {"pairedSum", k0.paired_sum},
         {"absDiff", k0.abs_diff()},
         {"tolerance", kRoundingTolerance},
         {"passed", k0.consistent()}}}};
}

nlohmann::json series_json(const TruncatedSeries& s) {
  auto out = nlohmann::json::array();
  for (const auto& c : s.coefficients()) out.push_back(c.str());
  return out;
}

std::string basis_checksum(const std::vector<GLSignature>& untwisted,
                           const std::vector<SpSignature>& twisted) {
  const std::string canonical =
      nlohmann::json{{"basisTwisted", twisted}, {"basisUntwisted", untwisted}}.dump();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

nlohmann::json fusion_tables_document(const FusionModel& model) {
  const LevelContext& ctx = model.context();
  nlohmann::json fundamentals = nlohmann::json::object();
  nlohmann::json modules = nlohmann::json::object();
  for (int k = 1; k < ctx.rank(); ++k) {
    fundamentals[std::to_string(k)] = matrix_json(model.fundamental_untwisted(k).entries);
    modules[std::to_string(k)] = matrix_json(model.module_route_a(k).entries);
  }
  return {{"format", kTablesFormat},
          {"N", ctx.n()},
          {"level", ctx.level()},
          {"basisUntwisted", model.untwisted_basis()},
          {"basisTwisted", model.twisted_basis()},
          {"basisChecksum", basis_checksum(model.untwisted_basis(), model.twisted_basis())},
          {"fundamentalMatrices", fundamentals},
          {"moduleMatrices", modules}};
}

}  // namespace twistfuse
