#ifndef OZTHERMO_TOOLS_RUN_HPP
#define OZTHERMO_TOOLS_RUN_HPP

#include "config.hpp"

#include <ostream>

namespace oz::cli {

// Process exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_validation = 3;
inline constexpr int exit_solver = 4;

// Executes one configured command and writes its CSV table to out. Throws
// ConfigParseError, oz::Error or oz::ConvergenceError.
void run(const RunConfig &cfg, std::ostream &out);

// Full command-line entry point: parses argv, runs, maps failures to exit
// statuses and prints a single diagnostic line to err. CSV goes to --out or,
// when absent, to out.
int main_entry(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace oz::cli

#endif
