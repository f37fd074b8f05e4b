#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "specroots/atype.hpp"
#include "specroots/root_system.hpp"
#include "specroots/special.hpp"
#include "specroots/vectors.hpp"

namespace specroots {

/// Version stamp carried by every serialized payload and cache file.
inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Text, Csv, Json };

/// Accepts "text", "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view s);

// Renderers. All outputs are deterministic byte-for-byte: fixed field order,
// no timestamps, no locale dependence. JSON envelopes look like
//   {"kind": ..., "lie_type": ..., "rows": [...], "schema_version": 1}
// with root vectors as "coeffs" (simple-root basis) and weights as "labels"
// (Dynkin labels); see docs/output-schema.json.
std::string render_roots(const RootSystem& rs, OutputFormat f);
std::string render_orbit(const LieType& t, int weight_index,
                         const std::vector<WeightVector>& orb, OutputFormat f);
std::string render_gamma(const LieType& t, const GammaSet& gs, OutputFormat f);
std::string render_table(const SpecialRootTable& table, OutputFormat f);
std::string render_verify(const Conjecture1Report* c1, const Conjecture2Report* c2,
                          OutputFormat f);
std::string render_atable(const ATableReport& report, OutputFormat f);

/// Envelope fields common to all JSON payloads.
struct ParsedEnvelope {
  int schema_version = 0;
  std::string lie_type;
  std::string kind;
};

// Parsers for the JSON listings (lossless inverses of the JSON renderers).
// Throw std::invalid_argument on malformed input.
std::vector<RootVector> parse_roots_json(const std::string& text, ParsedEnvelope* env = nullptr);
std::vector<WeightVector> parse_orbit_json(const std::string& text, ParsedEnvelope* env = nullptr);
GammaSet parse_gamma_json(const std::string& text, ParsedEnvelope* env = nullptr);
SpecialRootTable parse_table_json(const std::string& text, ParsedEnvelope* env = nullptr);

}  // namespace specroots
