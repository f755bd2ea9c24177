#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ucover::cli {

enum class Command { Check, Realize, Neighborhoods, Verify, Selftest };
enum class Format { Text, Dot, Json };

struct Config {
  Command command = Command::Check;
  std::string input;
  std::string second_input;  // trees file for `verify`
  std::string output;        // empty: stdout
  std::optional<int> depth_override;
  Format format = Format::Text;
  bool explain = false;
  bool verify = false;

  std::size_t max_n = 5;
  std::size_t mutants_per_case = 3;
  std::uint64_t seed = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotGraphical = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// Parses and runs one invocation. JSON and data go to `out`, diagnostics to
/// `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int execute(const Config& config, std::ostream& out, std::ostream& err);

}  // namespace ucover::cli
