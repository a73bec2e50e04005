#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperjulia/map_spec.hpp"
#include "hyperjulia/report.hpp"

namespace hyperjulia {

inline constexpr const char* kToolName = "hyperjulia";
inline constexpr const char* kToolVersion = "0.1.0";

/// Finite doubles as numbers; infinities and NaN as strings so the document stays valid JSON.
inline json number_to_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

inline json input_to_json(const InputValue& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) return number_to_json(x);
        else if constexpr (std::is_same_v<T, cplx>) return complex_to_json(x);
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else return complex_list_to_json(x);
      },
      v);
}

inline json report_to_json(const VerificationReport& r) {
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = input_to_json(v);
  json j{{"name", r.name},
         {"lhs", number_to_json(r.lhs)},
         {"rhs", number_to_json(r.rhs)},
         {"gap", number_to_json(r.gap)},
         {"holds", r.holds},
         {"equality", r.equality},
         {"equality_expected", r.equality_expected ? json(*r.equality_expected) : json(nullptr)},
         {"consistent", r.consistent()},
         {"inputs", inputs},
         {"tolerances", {{"check", r.tolerances.check}, {"eq", r.tolerances.eq}, {"slack", number_to_json(r.slack)}}}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

/// Report document with the reproducibility header.
inline json report_document(const std::vector<VerificationReport>& reports, std::uint64_t seed, const Tolerances& tol,
                            const json& extra = json::object()) {
  json arr = json::array();
  std::size_t consistent = 0, near_equal = 0;
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    consistent += r.consistent();
    near_equal += r.unexpected_equality();
  }
  json doc{{"tool", kToolName},
           {"version", kToolVersion},
           {"seed", seed},
           {"tolerances", {{"check", tol.check}, {"eq", tol.eq}}},
           {"summary", {{"reports", reports.size()}, {"consistent", consistent}, {"unexpected_equality", near_equal}}},
           {"reports", arr}};
  for (const auto& [k, v] : extra.items()) doc[k] = v;
  return doc;
}

}  // namespace hyperjulia
