#include "actwb/report.hpp"

#include <sstream>

namespace actwb {

using nlohmann::json;

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::ostringstream ss;
  ss << std::hex << fnv1a64(bytes);
  return ss.str();
}

static json subject_json(const std::string& id, const std::string& path, const std::string& kind) {
  return json{{"id", id}, {"path", path}, {"kind", kind}, {"hash", fnv1a64_hex(read_file(path))}};
}

json monoid_report(const LoadedMonoid& lm, uint64_t seed) {
  const Monoid& m = *lm.monoid;
  json ideals = json::array();
  int degree = 0;
  for (const LeftIdeal& ideal : all_left_ideals(m)) {
    ideals.push_back(json{{"elements", ideal.elements}, {"minGenerators", ideal.min_generators}});
    degree = std::max(degree, static_cast<int>(ideal.min_generators.size()));
  }
  json results{{"size", m.size()},
               {"commutative", m.commutative()},
               {"generationDegree", degree},
               {"rightReversible", right_reversible(m)},
               {"idealCount", ideals.size()},
               {"ideals", ideals}};
  return json{{"subject", subject_json(lm.id, lm.path, "monoid")},
              {"toolVersion", kToolVersion},
              {"seed", seed},
              {"results", results}};
}

json act_subject(const LoadedAct& la) {
  json s = subject_json(la.id, la.path, "act");
  s["emptyAct"] = la.act.size == 0;
  return s;
}

static const char* level_name(InjLevel level) {
  switch (level) {
    case InjLevel::n_injective: return "n-injective";
    case InjLevel::weakly_injective: return "weakly-injective";
    case InjLevel::injective: return "injective";
    case InjLevel::absolutely_pure: return "absolutely-pure";
  }
  return "?";
}

json verdict_json(const InjectivityVerdict& v) {
  json out{{"check", level_name(v.level)}, {"verdict", v.verdict}};
  if (v.level == InjLevel::n_injective) out["n"] = v.param;
  if (v.level == InjLevel::absolutely_pure) out["bound"] = v.param;
  if (v.counterexample) {
    const ExtensionFailure& ce = *v.counterexample;
    json rows = json::array();
    for (int s = 0; s < ce.big.msize(); ++s) {
      json row = json::array();
      for (int x = 0; x < ce.big.size; ++x) row.push_back(ce.big.act(s, x));
      rows.push_back(row);
    }
    out["counterexample"] = json{{"bigAct", json{{"size", ce.big.size}, {"action", rows}}},
                                 {"subactElements", ce.small_elements},
                                 {"hom", ce.hom}};
  }
  return out;
}

json act_check_report(const LoadedAct& la, const InjectivityVerdict& v, uint64_t seed) {
  return json{{"subject", act_subject(la)},
              {"toolVersion", kToolVersion},
              {"seed", seed},
              {"results", verdict_json(v)}};
}

std::optional<std::string> schema_validate(const json& schema, const json& doc) {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
              (t == "string" && doc.is_string()) || (t == "boolean" && doc.is_boolean()) ||
              (t == "integer" && doc.is_number_integer()) || (t == "number" && doc.is_number());
    if (!ok) return "expected type " + t + ", got " + std::string(doc.type_name());
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& v : schema["enum"]) hit = hit || v == doc;
    if (!hit) return "value not in enum";
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          return "missing required key " + key.get<std::string>();
    if (schema.contains("properties")) {
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
        if (!doc.contains(it.key())) continue;
        if (auto err = schema_validate(it.value(), doc[it.key()]))
          return it.key() + ": " + *err;
      }
      if (schema.contains("additionalProperties") &&
          schema["additionalProperties"].is_boolean() &&
          !schema["additionalProperties"].get<bool>()) {
        for (auto it = doc.begin(); it != doc.end(); ++it)
          if (!schema["properties"].contains(it.key())) return "unexpected key " + it.key();
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (size_t i = 0; i < doc.size(); ++i)
      if (auto err = schema_validate(schema["items"], doc[i]))
        return "[" + std::to_string(i) + "]: " + *err;
  }
  return std::nullopt;
}

std::string report_schema_text() {
  return R"({
  "type": "object",
  "required": ["subject", "toolVersion", "seed", "results"],
  "properties": {
    "subject": {
      "type": "object",
      "required": ["id", "path", "kind", "hash"],
      "properties": {
        "id": {"type": "string"},
        "path": {"type": "string"},
        "kind": {"type": "string", "enum": ["monoid", "act"]},
        "hash": {"type": "string"},
        "emptyAct": {"type": "boolean"}
      }
    },
    "toolVersion": {"type": "string"},
    "seed": {"type": "integer"},
    "results": {
      "type": "object",
      "properties": {
        "size": {"type": "integer"},
        "commutative": {"type": "boolean"},
        "generationDegree": {"type": "integer"},
        "rightReversible": {"type": "boolean"},
        "idealCount": {"type": "integer"},
        "ideals": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["elements", "minGenerators"],
            "properties": {
              "elements": {"type": "array", "items": {"type": "integer"}},
              "minGenerators": {"type": "array", "items": {"type": "integer"}}
            }
          }
        },
        "check": {"type": "string"},
        "verdict": {"type": "boolean"},
        "n": {"type": "integer"},
        "bound": {"type": "integer"},
        "counterexample": {
          "type": "object",
          "required": ["bigAct", "subactElements", "hom"],
          "properties": {
            "bigAct": {
              "type": "object",
              "required": ["size", "action"],
              "properties": {
                "size": {"type": "integer"},
                "action": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
              }
            },
            "subactElements": {"type": "array", "items": {"type": "integer"}},
            "hom": {"type": "array", "items": {"type": "integer"}}
          }
        }
      }
    }
  }
})";
}

}  // namespace actwb
