#pragma once

// The affgrass command-line front end as a library, so that tests can drive
// it without spawning processes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace affgrass::cli {

enum class Command { Retract, CheckPoint, EnumerateFiber, VerifyTheorem, Sl2Golden };
enum class Format { Json, Csv };

struct RunConfig {
  Command command = Command::CheckPoint;
  std::string config_path; // empty: command defaults (sl2-golden only)
  std::optional<std::uint64_t> seed;
  Format format = Format::Json;
  std::string out_path; // empty: the given output stream
  int parallel = 1;
  bool timing = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInvariant = 2;

// Runs one command. Records go to out (or out_path), diagnostics to err.
// Returns 0 on success, 1 on input errors and 2 on invariant violations.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and calls run.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace affgrass::cli
