#ifndef OZTHERMO_TOOLS_CONFIG_HPP
#define OZTHERMO_TOOLS_CONFIG_HPP

#include "ozthermo/mixture.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oz::cli {

enum class Command { Eos, Mix, Msa, OzSolve, Sweep };

// Malformed input, unknown keys, missing required values. Exit status 2.
class ConfigParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Command parse_command(const std::string &name);
std::string command_name(Command c);

struct SweepSpec {
  Command command = Command::Eos;
  std::string variable = "eta"; // eta | alpha_sq
  std::optional<double> start;
  std::optional<double> stop;
  std::optional<std::size_t> steps;
};

struct GridSpec {
  std::size_t n = 4096;
  std::optional<double> dr; // defaults to diameter / 100
  std::optional<double> tol;
};

struct RunConfig {
  Command command = Command::Eos;
  std::string label;
  double alpha_sq = 0.0;
  std::optional<double> eta;
  double diameter = 1.0;
  std::vector<oz::Species> species;
  std::optional<SweepSpec> sweep;
  std::string output_path;
  std::string table_path; // oz-solve r,c,h,g dump
  GridSpec grid;
  bool allow_neutral = false;
  unsigned threads = 0; // 0: hardware concurrency
};

// Line-oriented key = value format. Top-level keys: label, alpha_sq, eta,
// diameter, table. Sections: [species] (sigma, rho, z; one block per species),
// [sweep] (command, variable, start, stop, steps), [grid] (n, dr, tol).
// '#' and ';' start comments.
void parse_ini(std::istream &in, RunConfig &cfg);

// JSON mirror of the same schema, with "species" as an array of objects and
// "sweep" / "grid" as nested objects.
void parse_json(std::istream &in, RunConfig &cfg);

// Reads OZ_THERMO_THREADS; returns 0 when unset.
unsigned threads_from_environment();

} // namespace oz::cli

#endif
