#pragma once

#include <ostream>

#include "cli/config.hpp"
#include "cli/writer.hpp"

namespace casimir::cli {

struct CommandResult {
  Output output;
  int status = 0;  // 0 ok, 1 numeric failure (verify or verdict failed)
};

CommandResult cmd_density(const RunConfig& c);
CommandResult cmd_total(const RunConfig& c);
CommandResult cmd_verify(const RunConfig& c, double tolerance_scale);
CommandResult cmd_commute(const RunConfig& c);
CommandResult cmd_scan(const RunConfig& c);

/// Whole program: parse, run, write. Data goes to `out` (or --out), messages
/// to `err`. Returns 0 success, 1 numeric failure, 2 usage or config error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
