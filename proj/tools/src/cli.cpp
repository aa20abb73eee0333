#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "gj2d/covering_graph.hpp"
#include "gj2d/delta_complex.hpp"
#include "gj2d/extremality.hpp"
#include "gj2d/minimality.hpp"
#include "gj2d/perturbation.hpp"
#include "json_io.hpp"
#include "svg.hpp"

namespace gj2d::cli {

using nlohmann::json;

std::optional<Command> command_from_string(std::string_view name) {
  if (name == "check-minimal") return Command::CheckMinimal;
  if (name == "check-diag") return Command::CheckDiag;
  if (name == "emax") return Command::Emax;
  if (name == "decide") return Command::Decide;
  if (name == "perturb") return Command::Perturb;
  if (name == "plot") return Command::Plot;
  if (name == "system-dump") return Command::SystemDump;
  return std::nullopt;
}

std::optional<Format> format_from_string(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "svg") return Format::Svg;
  if (name == "dot") return Format::Dot;
  return std::nullopt;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FNotVertex:
    case ErrorKind::NotSubadditive:
    case ErrorKind::NotDiagonallyConstrainedFace:
    case ErrorKind::NotMinimal:
    case ErrorKind::NotDiagonallyConstrained:
    case ErrorKind::NotGenuinely2D:
    case ErrorKind::MTooSmall: return exit_code::kPrecondition;
    case ErrorKind::Covered: return exit_code::kNegative;
    case ErrorKind::InvalidArgument:
    case ErrorKind::DivisionByZero: return exit_code::kIo;
    case ErrorKind::DegeneratePerturbation:
    case ErrorKind::SplitNotMinimal:
    case ErrorKind::Internal: return exit_code::kInternal;
  }
  return exit_code::kInternal;
}

namespace {

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  void text(const std::string& body) const {
    if (!config_.output) {
      out_ << body;
      return;
    }
    std::ofstream file(*config_.output);
    if (!file) throw io::ParseError("cannot write " + config_.output->string());
    file << body;
  }
  void json_doc(const json& j) const { text(io::dump(j)); }

  /// Companion file next to the main output, e.g. verdict.pi1.json.
  void companion(const std::string& suffix, const json& j) const {
    if (!config_.output) return;
    auto path = *config_.output;
    path.replace_extension();
    path += "." + suffix + ".json";
    io::save_json(j, path);
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
};

void require_format(const RunConfig& c, std::initializer_list<Format> allowed) {
  if (std::find(allowed.begin(), allowed.end(), c.format) == allowed.end())
    throw Error(ErrorKind::InvalidArgument, "output format not supported by this command");
}

void require_minimal(const PwlFunction& pi) {
  if (!check_minimal(pi, 1).minimal) throw Error(ErrorKind::NotMinimal, "π fails the minimality test");
}

int check_minimal_cmd(const RunConfig& c, const PwlFunction& pi, const Emitter& emit) {
  require_format(c, {Format::Json});
  const auto report = c.n ? check_minimal_at(pi, *c.n, c.max_violations) : check_minimal(pi, c.max_violations);
  emit.json_doc(io::minimality_to_json(report));
  return report.minimal ? exit_code::kOk : exit_code::kNegative;
}

int check_diag_cmd(const RunConfig& c, const PwlFunction& pi, const Emitter& emit) {
  require_format(c, {Format::Json, Format::Dot});
  require_f_vertex(pi);
  require_minimal(pi);
  const auto additive = additive_faces(pi);
  const auto report = is_diagonally_constrained(maximal_faces(additive));
  if (c.format == Format::Dot) {
    if (!report.diagonally_constrained)
      throw Error(ErrorKind::NotDiagonallyConstrained, "maximal additive face " + to_string(*report.witness));
    emit.text(to_dot(covered_sets(additive, pi.q())));
  } else {
    json j = {{"schema", io::kSchema}, {"diagonally_constrained", report.diagonally_constrained}, {"witness", nullptr}};
    if (report.witness) j["witness"] = io::delta_face_to_json(*report.witness);
    emit.json_doc(j);
  }
  return report.diagonally_constrained ? exit_code::kOk : exit_code::kNegative;
}

int emax_cmd(const RunConfig& c, const PwlFunction& pi, const Emitter& emit) {
  require_format(c, {Format::Json, Format::Svg});
  const GridPoint f = pi.f_grid();
  std::vector<std::pair<std::string, DeltaFace>> listed;
  for (const auto& face : maximal_additive_faces(pi)) {
    if (!c.include_symmetry_faces && is_symmetry_face(face, f)) continue;
    listed.emplace_back(io::delta_face_to_json(face)["type"].get<std::string>(), face);
  }
  std::stable_sort(listed.begin(), listed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (c.format == Format::Svg) {
    std::vector<DeltaFace> faces;
    for (auto& [type, face] : listed) faces.push_back(face);
    emit.text(svg::plot_faces(faces, pi.q()));
    return exit_code::kOk;
  }
  json counts = json::object();
  json faces = json::array();
  for (auto& [type, face] : listed) {
    counts[type] = counts.value(type, 0) + 1;
    faces.push_back(io::delta_face_to_json(face));
  }
  emit.json_doc({{"schema", io::kSchema},
                 {"include_symmetry_faces", c.include_symmetry_faces},
                 {"total", faces.size()},
                 {"counts", counts},
                 {"faces", faces}});
  return exit_code::kOk;
}

int decide_cmd(const RunConfig& c, const PwlFunction& pi, const Emitter& emit, std::ostream& err) {
  require_format(c, {Format::Json});
  ExtremalityVerdict verdict;
  try {
    verdict = decide_extreme(pi, c.m);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDiagonallyConstrained) throw;
    // kernel_dim ≥ 1 still proves non-extremality; report it for information.
    const std::size_t dim = kernel_dimension(pi, c.m);
    err << e.what() << '\n';
    emit.json_doc({{"schema", io::kSchema},
                   {"verdict", nullptr},
                   {"error", std::string(to_string(e.kind()))},
                   {"m", c.m},
                   {"kernel_dim", dim},
                   {"certificate", nullptr}});
    return exit_code::kPrecondition;
  }
  const json j = io::verdict_to_json(verdict);
  emit.json_doc(j);
  if (verdict.splits) {
    emit.companion("pi1", io::function_to_json(verdict.splits->first));
    emit.companion("pi2", io::function_to_json(verdict.splits->second));
  }
  return verdict.extreme ? exit_code::kOk : exit_code::kNegative;
}

int perturb_cmd(const RunConfig& c, const PwlFunction& pi, const Emitter& emit) {
  require_format(c, {Format::Json, Format::Dot});
  require_f_vertex(pi);
  require_minimal(pi);
  const auto additive = additive_faces(pi);
  const auto diag = is_diagonally_constrained(maximal_faces(additive));
  if (!diag.diagonally_constrained)
    throw Error(ErrorKind::NotDiagonallyConstrained, "maximal additive face " + to_string(*diag.witness));
  const CoverReport cover = covered_sets(additive, pi.q());
  if (c.format == Format::Dot) {
    emit.text(to_dot(cover));
    return cover.fully_covered ? exit_code::kNegative : exit_code::kOk;
  }
  json j = {{"schema", io::kSchema}, {"cover", io::cover_to_json(cover)}, {"certificate", nullptr}};
  int code = exit_code::kOk;
  try {
    const Perturbation p = build_perturbation(pi, cover, c.m);
    const Frac eps = epsilon_for(pi, p);
    const auto [pi1, pi2] = split(pi, p, eps);
    json cert = io::perturbation_to_json(p, eps);
    cert["pi1"] = io::function_to_json(pi1);
    cert["pi2"] = io::function_to_json(pi2);
    j["certificate"] = cert;
    emit.companion("pi1", cert["pi1"]);
    emit.companion("pi2", cert["pi2"]);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Covered) throw;
    code = exit_code::kNegative;
  }
  emit.json_doc(j);
  return code;
}

int plot_cmd(const RunConfig& c, const PwlFunction& pi, const Emitter& emit) {
  if (c.format != Format::Svg && c.format != Format::Json)
    throw Error(ErrorKind::InvalidArgument, "plot writes SVG");
  emit.text(svg::plot_function(pi));
  return exit_code::kOk;
}

int system_dump_cmd(const RunConfig& c, const PwlFunction& pi, const Emitter& emit) {
  require_format(c, {Format::Json});
  const int n = c.n.value_or(c.m * pi.q());
  const AdditivitySystem sys = assemble_system(pi, n);
  json rows = json::array();
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    json terms = json::array();
    for (const auto& t : sys.rows[r]) terms.push_back({t.var, t.coef});
    rows.push_back({{"terms", terms}, {"rhs", sys.rhs(r).to_string()}});
  }
  emit.json_doc({{"schema", io::kSchema},
                 {"n", n},
                 {"variables", sys.variables()},
                 {"kernel_dim", solution_space_dim(sys)},
                 {"rows", rows}});
  return exit_code::kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const PwlFunction pi = io::load_function(config.input);
    const Emitter emit(config, out);
    switch (config.command) {
      case Command::CheckMinimal: return check_minimal_cmd(config, pi, emit);
      case Command::CheckDiag: return check_diag_cmd(config, pi, emit);
      case Command::Emax: return emax_cmd(config, pi, emit);
      case Command::Decide: return decide_cmd(config, pi, emit, err);
      case Command::Perturb: return perturb_cmd(config, pi, emit);
      case Command::Plot: return plot_cmd(config, pi, emit);
      case Command::SystemDump: return system_dump_cmd(config, pi, emit);
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInternal;
  }
  return exit_code::kInternal;
}

}  // namespace gj2d::cli
