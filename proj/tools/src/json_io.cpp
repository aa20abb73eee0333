#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "gj2d/error.hpp"

namespace gj2d::io {

using nlohmann::json;

namespace {

Frac rational_field(const json& v, const std::string& what) {
  try {
    if (v.is_number_integer()) return Frac(v.get<long>());
    if (v.is_string()) return Frac::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(what + ": " + e.what());
  }
  throw ParseError(what + ": expected an integer or a \"n/d\" string");
}

std::string text(const Frac& x) { return x.to_string(); }

}  // namespace

PwlFunction function_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("function file must be a JSON object");
  if (!j.contains("schema") || j["schema"] != kSchema) throw ParseError("expected \"schema\": 1");
  if (!j.contains("q") || !j["q"].is_number_integer() || j["q"].get<long>() < 1)
    throw ParseError("\"q\" must be a positive integer");
  const int q = j["q"].get<int>();
  if (!j.contains("f") || !j["f"].is_array() || j["f"].size() != 2) throw ParseError("\"f\" must be a pair");
  const QPoint f{rational_field(j["f"][0], "f[0]") / Frac(q), rational_field(j["f"][1], "f[1]") / Frac(q)};
  if (!j.contains("values") || !j["values"].is_array() || j["values"].size() != static_cast<std::size_t>(q))
    throw ParseError("\"values\" must have q rows");
  std::vector<Frac> values;
  values.reserve(static_cast<std::size_t>(q) * q);
  for (std::size_t a = 0; a < static_cast<std::size_t>(q); ++a) {
    const json& row = j["values"][a];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(q))
      throw ParseError("\"values\" row " + std::to_string(a) + " must have q entries");
    for (std::size_t b = 0; b < row.size(); ++b)
      values.push_back(rational_field(row[b], "values[" + std::to_string(a) + "][" + std::to_string(b) + "]"));
  }
  for (const auto& key : j.items())
    if (key.key() != "schema" && key.key() != "q" && key.key() != "f" && key.key() != "values")
      throw ParseError("unexpected field \"" + key.key() + "\"");
  return PwlFunction(q, f, std::move(values));
}

PwlFunction load_function(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return function_from_json(j);
}

json function_to_json(const PwlFunction& pi) {
  const Frac q(pi.q());
  auto coord = [&](const Frac& x) -> json {
    const Frac s = x * q;
    if (s.is_integer()) return s.numerator().get_si();
    return text(s);
  };
  json values = json::array();
  for (long a = 0; a < pi.q(); ++a) {
    json row = json::array();
    for (long b = 0; b < pi.q(); ++b) row.push_back(text(pi.at(a, b)));
    values.push_back(std::move(row));
  }
  return {{"schema", kSchema}, {"q", pi.q()}, {"f", {coord(pi.f().x), coord(pi.f().y)}}, {"values", values}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void save_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << dump(j);
  if (!out) throw ParseError("failed writing " + path.string());
}

json face_to_json(const FaceId& face) {
  return {{"kind", std::string(to_string(face.kind))}, {"anchor", {face.anchor.x, face.anchor.y}}};
}

json delta_face_to_json(const DeltaFace& face) {
  std::string type;
  try {
    type = std::string(to_string(face_type(face)));
  } catch (const Error&) {
    type = "not_diagonally_constrained";
  }
  return {{"type", type},
          {"p1", face_to_json(face.i)},
          {"p2", face_to_json(face.j)},
          {"p3", face_to_json(face.k)}};
}

json minimality_to_json(const MinimalityReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json item = {{"kind", std::string(to_string(v.kind))}, {"x", {v.x.x, v.x.y}}, {"value", text(v.value)}};
    if (v.y) item["y"] = {v.y->x, v.y->y};
    violations.push_back(std::move(item));
  }
  return {{"schema", kSchema}, {"minimal", report.minimal}, {"n", report.n}, {"violations", violations}};
}

json cover_to_json(const CoverReport& cover) {
  auto faces = [&](const std::vector<std::size_t>& ids) {
    json out = json::array();
    for (auto i : ids) out.push_back(face_to_json(tri_from_index(i, cover.q())));
    return out;
  };
  return {{"seeds2", faces(cover.graph.seeds2)}, {"seeds1", faces(cover.graph.seeds1)},
          {"S2", faces(cover.s2)},                {"S1", faces(cover.s1)},
          {"barS2", faces(cover.bar_s2)},         {"barS1", faces(cover.bar_s1)},
          {"fully_covered", cover.fully_covered}};
}

json perturbation_to_json(const Perturbation& p, const Frac& epsilon) {
  json region = json::array();
  const int q = p.base.q() / p.m;
  for (auto i : p.region) region.push_back(face_to_json(tri_from_index(i, q)));
  return {{"flavor", std::string(to_string(p.flavor))},
          {"m", p.m},
          {"epsilon", text(epsilon)},
          {"region", region},
          {"perturbation", function_to_json(p.base)}};
}

json verdict_to_json(const ExtremalityVerdict& v) {
  json out = {{"schema", kSchema},
              {"verdict", v.extreme ? "extreme" : "not_extreme"},
              {"m", v.m},
              {"kernel_dim", v.kernel_dim},
              {"fully_covered", v.fully_covered},
              {"genuinely_2d", v.genuinely_2d.genuinely_2d},
              {"certificate", nullptr}};
  if (v.genuinely_2d.witness) out["genuinely_2d_witness"] = {v.genuinely_2d.witness->x, v.genuinely_2d.witness->y};
  if (v.certificate && v.epsilon && v.splits) {
    json cert = perturbation_to_json(*v.certificate, *v.epsilon);
    cert["pi1"] = function_to_json(v.splits->first);
    cert["pi2"] = function_to_json(v.splits->second);
    out["certificate"] = std::move(cert);
  }
  return out;
}

}  // namespace gj2d::io
