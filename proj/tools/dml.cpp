#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dml/error.hpp"
#include "dml/experiment.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw dml::Error("cannot write " + out_path);
  out << text;
  if (!out) throw dml::Error("I/O error writing " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Return sets of polynomial dynamical systems"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  std::string format = "json";
  std::size_t a = 0;
  std::size_t b = 0;

  auto* run = app.add_subcommand("run", "Full pipeline: return set, density, progressions, certificates");
  run->add_option("file", file, "Experiment file (JSON)")->required();
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  auto* density = app.add_subcommand("density", "Return set and density profile only");
  density->add_option("file", file, "Experiment file (JSON)")->required();
  density->add_option("--out", out_path, "Write the report here instead of stdout");
  density->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  auto* certify = app.add_subcommand("certify", "Invariance certificate for one progression a*N + b");
  certify->add_option("file", file, "Experiment file (JSON)")->required();
  certify->add_option("--a", a, "Modulus")->required()->check(CLI::PositiveNumber);
  certify->add_option("--b", b, "Offset")->required();
  certify->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const dml::ExperimentSpec spec = dml::load_experiment(file);
    if (*run) {
      const auto report = dml::run_experiment(spec);
      emit(format == "csv" ? dml::to_csv(report) : dml::to_json(report), out_path);
    } else if (*density) {
      const auto report = dml::run_density(spec);
      emit(format == "csv" ? dml::to_csv(report) : dml::to_json(report), out_path);
    } else {
      emit(dml::to_json(dml::run_certify(spec, a, b)), out_path);
    }
  } catch (const dml::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const dml::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
