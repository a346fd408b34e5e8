#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "actwb/injectivity.hpp"
#include "actwb/io.hpp"

namespace actwb {

inline constexpr const char* kToolVersion = "actwb 0.1.0";

uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

/// Classification report for one monoid file: ideal inventory, generation
/// degree, reversibility, commutativity. Byte-deterministic given the file.
nlohmann::json monoid_report(const LoadedMonoid& lm, uint64_t seed);

nlohmann::json act_subject(const LoadedAct& la);

nlohmann::json verdict_json(const InjectivityVerdict& v);

/// Wraps an injectivity verdict on an act file into a full report.
nlohmann::json act_check_report(const LoadedAct& la, const InjectivityVerdict& v, uint64_t seed);

/// Miniature JSON-Schema checker supporting the subset the shipped schema
/// uses: type, properties, required, items, enum, additionalProperties.
/// Returns an error description or nullopt when the document validates.
std::optional<std::string> schema_validate(const nlohmann::json& schema,
                                           const nlohmann::json& doc);

std::string report_schema_text();

}  // namespace actwb
