#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

struct Common {
  std::string file;
  minktrig::cli::Options opt;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--file", c.file, "Read JSON input from this file instead of stdin");
  cmd->add_option("--tolerance", c.opt.tolerance, "Residual bound for verification")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--strict", c.opt.strict,
                "Reject unknown input fields; exit 4 on verification failures");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = minktrig::cli;
  CLI::App app{"Trigonometry on the de Sitter surface and the hyperbolic plane"};
  app.require_subcommand(1);

  Common common;
  auto* classify = app.add_subcommand("classify", "Classify a triangle");
  auto* polar = app.add_subcommand("polar", "Compute the polar triangle");
  auto* verify = app.add_subcommand("verify", "Evaluate the trigonometric laws");
  auto* exportg = app.add_subcommand("export-geodesic", "Sample a geodesic segment as CSV");
  auto* sample = app.add_subcommand("sample", "Draw random triangles of a family");
  for (auto* cmd : {classify, polar, verify, exportg, sample}) add_common(cmd, common);

  std::vector<std::string> sample_args;
  std::uint64_t seed = 0;
  verify->add_option("--sample", sample_args, "FAMILY N: verify N sampled triangles")
      ->expected(2);
  verify->add_option("--seed", seed, "Random seed for --sample");

  int samples = 100;
  exportg->add_option("--samples", samples, "Number of polyline rows (>= 2)");

  cli::VerifySampling sampling;
  sample->add_option("--family", sampling.family, "Target family")->required();
  sample->add_option("--count", sampling.count, "Number of triangles")->required();
  sample->add_option("--seed", sampling.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kInputError;
  }

  std::ifstream file;
  std::istream* in = &std::cin;
  if (!common.file.empty()) {
    file.open(common.file);
    if (!file) {
      std::cerr << cli::dump({{"error", "InvalidInput"}, {"message", "cannot open " + common.file}})
                << "\n";
      return cli::kInputError;
    }
    in = &file;
  }

  if (*classify) return cli::cmd_classify(*in, std::cout, std::cerr, common.opt);
  if (*polar) return cli::cmd_polar(*in, std::cout, std::cerr, common.opt);
  if (*exportg) return cli::cmd_export_geodesic(*in, std::cout, std::cerr, common.opt, samples);
  if (*sample) return cli::cmd_sample(std::cout, std::cerr, common.opt, sampling);

  std::optional<cli::VerifySampling> verify_sampling;
  if (!sample_args.empty()) {
    cli::VerifySampling s;
    s.family = sample_args[0];
    try {
      s.count = std::stoi(sample_args[1]);
    } catch (const std::exception&) {
      std::cerr << cli::dump({{"error", "InvalidInput"}, {"message", "--sample N must be an integer"}})
                << "\n";
      return cli::kInputError;
    }
    s.seed = seed;
    verify_sampling = s;
  }
  return cli::cmd_verify(*in, std::cout, std::cerr, common.opt, verify_sampling);
}
