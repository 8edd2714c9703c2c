#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace minktrig::cli {

inline constexpr const char* kSchema = "minktrig/1";

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kDomainError = 3,
  kVerificationFailure = 4,
};

struct Options {
  double tolerance = 1e-9;
  bool strict = false;
};

struct VerifySampling {
  std::string family;
  int count = 0;
  std::uint64_t seed = 0;
};

// Each command reads its JSON input from `in` (unused when sampling), writes
// the result to `out` and diagnostics to `err`, and returns the exit code.
int cmd_classify(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt);
int cmd_polar(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt);
int cmd_verify(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt,
               const std::optional<VerifySampling>& sampling);
int cmd_export_geodesic(std::istream& in, std::ostream& out, std::ostream& err,
                        const Options& opt, int samples);
int cmd_sample(std::ostream& out, std::ostream& err, const Options& opt,
               const VerifySampling& sampling);

/// JSON text with every floating-point number printed with 17 significant
/// digits (nlohmann prints the shortest round-trip form instead).
std::string dump(const nlohmann::json& j);

}  // namespace minktrig::cli
