#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace chipfire::cli {

enum class Format { Json, Dot };

struct CommandRequest {
  std::string command;  // winnable reduce burn equiv jacobian quotient words maxunwin laplacian
  std::string graph;
  std::optional<std::string> divisor;
  std::optional<std::string> d1;
  std::optional<std::string> d2;
  std::optional<std::string> q;
  std::optional<std::string> action;
  Format format = Format::Json;
};

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kValidation = 2,
  kComputation = 3,
  kPrecondition = 4,
};

/// Executes one request, writing the report to `out` and a one-line
/// diagnostic to `err` on failure.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

}  // namespace chipfire::cli
