#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "picard/runner.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cocycle, presentation and multiplier checks for the Eisenstein-Picard lattice"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", picard::version());

  picard::RunConfig config;
  std::string command;
  std::string ideal, tau, orientation = "swapped", normalization = "minimal-norm";

  app.add_option("command", command, "Subcommand")->required()->check(CLI::IsMember(picard::commands()));
  app.add_option("--seed", config.seed, "RNG seed");
  app.add_option("--samples", config.samples, "Samples per check");
  app.add_option("--max-len", config.max_word_len, "Maximum sampled word length");
  app.add_option("--ideal", ideal, "Ideal generator \"a,b\" for a + b zeta");
  app.add_option("--tau", tau, "Point of H as \"re,im;re,im\"");
  app.add_option("--tol-sigma", config.tol.sigma_round, "Integer rounding gate for sigma");
  app.add_option("--tol-matrix", config.tol.matrix, "Matrix and torus tolerance");
  app.add_option("--tol-functional", config.tol.functional, "Multiplier tolerance");
  app.add_option("--out", config.output_path, "Write the JSON report here as well");
  app.add_option("--g", config.g, "First element (word, t:zeta or t:re,im)");
  app.add_option("--h", config.h, "Second element");
  app.add_option("--k", config.k, "Third element");
  app.add_option("--word", config.word, "Word for kappa and multiplier");
  app.add_option("--orientation", orientation, "Comparison cocycle: swapped or printed")
      ->check(CLI::IsMember({"swapped", "printed"}));
  app.add_option("--x-log-cut", config.x_log_cut, "Branch cut angle for log X(g)");
  app.add_option("--normalization", normalization, "minimal-norm or upper-triangular-zero")
      ->check(CLI::IsMember({"minimal-norm", "upper-triangular-zero"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    config.orientation = picard::parse_orientation(orientation);
    config.normalization = picard::parse_normalization(normalization);
    if (!ideal.empty()) config.ideal = picard::parse_ideal(ideal);
    if (!tau.empty()) config.tau = picard::parse_ball_point(tau);

    const picard::Report report = picard::run(command, config);
    const std::string text = report.to_json(config).dump(2);
    std::cout << text << '\n';
    if (!config.output_path.empty()) {
      std::ofstream out(config.output_path);
      if (!out) throw picard::UsageError("cannot write " + config.output_path);
      out << text << '\n';
    }
    return report.pass() ? kExitPass : kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "picard: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "picard: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "picard: " << e.what() << '\n';
    return kExitFail;
  }
}
