#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace gj2d::cli;
  CLI::App app{"Minimality, diagonal constraint and extremality of piecewise linear functions over P_q"};
  app.set_version_flag("--version", "gj2d 0.1.0");

  std::string command;
  std::string format = "json";
  std::optional<int> n;
  std::optional<std::string> output;
  bool no_symmetry = false;
  RunConfig config;

  app.add_option("command", command, "check-minimal | check-diag | emax | decide | perturb | plot | system-dump")
      ->required()
      ->check(CLI::IsMember({"check-minimal", "check-diag", "emax", "decide", "perturb", "plot", "system-dump"}));
  app.add_option("input", config.input, "Function file (JSON, schema 1)")->required();
  app.add_option("-m", config.m, "Refinement factor for decide, perturb and system-dump")
      ->default_val(3)
      ->check(CLI::Range(1, 1000));
  app.add_option("-n,--grid", n, "Grid resolution for check-minimal and system-dump");
  app.add_flag("--no-symmetry", no_symmetry, "Hide symmetry-condition faces in emax");
  app.add_option("--max-violations", config.max_violations, "Violations reported by check-minimal")
      ->default_val(10);
  app.add_option("-o,--output", output, "Write the result here instead of stdout");
  app.add_option("--format", format, "json | svg | dot")->check(CLI::IsMember({"json", "svg", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::kIo;
  }

  config.command = *command_from_string(command);
  config.format = *format_from_string(format);
  if (config.command == Command::Plot && format == "json") config.format = Format::Svg;
  config.n = n;
  config.include_symmetry_faces = !no_symmetry;
  if (output) config.output = *output;
  if ((config.command == Command::Decide || config.command == Command::Perturb) && config.m < 3) {
    std::cerr << "error: MTooSmall: m must be at least 3\n";
    return exit_code::kPrecondition;
  }
  return run(config, std::cout, std::cerr);
}
