#ifndef OZTHERMO_ERROR_HPP
#define OZTHERMO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oz {

enum class Errc {
  // input validation
  EmptyMixture,
  NonPositiveDiameter,
  NegativeDensity,
  ChargeImbalance,
  NegativeCoupling,
  PackingOverflow,
  EtaOutOfRange,
  NonPositiveRadius,
  IndexOutOfRange,
  NotCharged,
  NegativeX,
  LengthMismatch,
  InvalidGrid,
  // solver failures
  NoConvergence,
  ZeroGamma,
  QuadTooCoarse,
  PoleEncountered,
  NotConverged,
};

std::string_view to_string(Errc code) noexcept;

// True for errors caused by an invalid system definition rather than by a
// numerical procedure failing on a valid one.
bool is_validation_error(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what);

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Raised when an iterative solve exhausts its budget.
class ConvergenceError : public Error {
public:
  ConvergenceError(std::size_t iterations, double last_residual, const std::string &what);

  std::size_t iterations() const noexcept { return iterations_; }
  double last_residual() const noexcept { return last_residual_; }

private:
  std::size_t iterations_;
  double last_residual_;
};

} // namespace oz

#endif
