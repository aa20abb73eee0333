#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gj2d/delta_complex.hpp"
#include "gj2d/extremality.hpp"
#include "gj2d/minimality.hpp"
#include "gj2d/pwl_function.hpp"

namespace gj2d::io {

inline constexpr int kSchema = 1;

/// Malformed input: bad JSON, wrong schema, missing or mistyped fields.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict reader for {"schema": 1, "q": int, "f": [fx, fy], "values": q×q}.
/// f entries are numerators over q (integers or "n/d" strings); values are
/// rationals given as strings or integers, with values[a][b] = π(a/q, b/q).
PwlFunction function_from_json(const nlohmann::json& j);
PwlFunction load_function(const std::filesystem::path& path);

nlohmann::json function_to_json(const PwlFunction& pi);
void save_json(const nlohmann::json& j, const std::filesystem::path& path);
/// Two-space indented JSON followed by a newline.
std::string dump(const nlohmann::json& j);

nlohmann::json face_to_json(const FaceId& face);
nlohmann::json delta_face_to_json(const DeltaFace& face);
nlohmann::json minimality_to_json(const MinimalityReport& report);
nlohmann::json cover_to_json(const CoverReport& cover);
nlohmann::json perturbation_to_json(const Perturbation& p, const Frac& epsilon);
nlohmann::json verdict_to_json(const ExtremalityVerdict& v);

}  // namespace gj2d::io
