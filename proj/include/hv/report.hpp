#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hv/algebra.hpp"
#include "hv/derivation.hpp"
#include "hv/two_local.hpp"

namespace hv {

using Json = nlohmann::json;

inline constexpr const char* kEngineVersion = "0.1.0";

/// Machine-readable report envelope. Keys serialize sorted.
Json make_report(const std::string& command, std::optional<CocycleSign> sign, const std::string& status, Json payload);

/// Human-readable rendering of a report envelope.
std::string render_text(const Json& report);

Json to_json(const DerivationParams& p);
Json to_json(const LeibnizViolation& v);
Json to_json(const LeibnizReport& r);
Json to_json(const JacobiReport& r);
Json to_json(const AuditReport& r);
Json to_json(const DecomposeResult& r);
Json to_json(const WitnessCertificate& w);
Json to_json(const ReductionCertificate& c);
Json to_json(const LemmaKernelReport& r);
Json to_json(const HomogeneityReport& r);

/// Table file: {"window": N, "sign": ..., "images": [{"basis": "L[2]", "image": <expr>}, ...]}.
/// Every window symbol must appear exactly once.
struct LoadedTable {
  DerivationTable table;
  std::optional<CocycleSign> sign;
};
LoadedTable table_from_json(const Json& j);
Json table_to_json(const DerivationTable& t, CocycleSign sign);

/// Assignment file: {"sign": ..., "entries": [{"in": <expr>, "out": <expr>}, ...]}.
struct LoadedAssignment {
  TwoLocalAssignment assignment;
  std::optional<CocycleSign> sign;
};
LoadedAssignment assignment_from_json(const Json& j);
Json assignment_to_json(const TwoLocalAssignment& a, CocycleSign sign);

/// Samples file: a JSON array of element expressions, or {"samples": [...]}.
std::vector<Element> samples_from_json(const Json& j);
Json samples_to_json(std::span<const Element> samples);

/// Throws InputError on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);

}  // namespace hv
