#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistfuse/characters.hpp"
#include "twistfuse/formal_combination.hpp"
#include "twistfuse/fusion.hpp"
#include "twistfuse/qseries.hpp"
#include "twistfuse/signature.hpp"
#include "twistfuse/verify.hpp"

// JSON forms. Signatures are integer arrays; evaluation vectors are doubled
// integers plus a type flag; formal combinations are objects keyed by the
// "a,b,c" signature string.

namespace twistfuse {

template <class Tag>
void to_json(nlohmann::json& j, const Signature<Tag>& s) {
  j = std::vector<int>(s.parts().begin(), s.parts().end());
}

template <class Tag>
void from_json(const nlohmann::json& j, Signature<Tag>& s) {
  s = Signature<Tag>(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const HalfIntVector& g);
void from_json(const nlohmann::json& j, HalfIntVector& g);

template <class Label>
void to_json(nlohmann::json& j, const FormalCombination<Label>& combo) {
  j = nlohmann::json::object();
  for (const auto& [label, mult] : combo) j[label.str()] = mult;
}

nlohmann::json matrix_json(const IntMatrix& m);
void to_json(nlohmann::json& j, const EvalPoint& pt);
void to_json(nlohmann::json& j, const CheckResult& c);
void to_json(nlohmann::json& j, const VerifyReport& r);
void to_json(nlohmann::json& j, const ClosedFormReport& r);
void to_json(nlohmann::json& j, const K0Square& k0);

/// Decimal strings, exact at any size.
nlohmann::json series_json(const TruncatedSeries& s);

/// FNV-1a 64 of the canonical JSON dump of both basis lists, as 16 hex digits.
std::string basis_checksum(const std::vector<GLSignature>& untwisted,
                           const std::vector<SpSignature>& twisted);

inline constexpr int kTablesFormat = 1;

/// Versioned fusion-table document:
///   {"format":1, "N", "level", "basisUntwisted", "basisTwisted",
///    "basisChecksum", "fundamentalMatrices":{k: rows}, "moduleMatrices":{k: rows}}
/// with k running over 1..2N-1. Module matrices are the combinatorial ones;
/// callers verify them against the evaluation route before publishing.
nlohmann::json fusion_tables_document(const FusionModel& model);

}  // namespace twistfuse
