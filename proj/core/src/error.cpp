#include "ozthermo/error.hpp"

namespace oz {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
  case Errc::EmptyMixture: return "EmptyMixture";
  case Errc::NonPositiveDiameter: return "NonPositiveDiameter";
  case Errc::NegativeDensity: return "NegativeDensity";
  case Errc::ChargeImbalance: return "ChargeImbalance";
  case Errc::NegativeCoupling: return "NegativeCoupling";
  case Errc::PackingOverflow: return "PackingOverflow";
  case Errc::EtaOutOfRange: return "EtaOutOfRange";
  case Errc::NonPositiveRadius: return "NonPositiveRadius";
  case Errc::IndexOutOfRange: return "IndexOutOfRange";
  case Errc::NotCharged: return "NotCharged";
  case Errc::NegativeX: return "NegativeX";
  case Errc::LengthMismatch: return "LengthMismatch";
  case Errc::InvalidGrid: return "InvalidGrid";
  case Errc::NoConvergence: return "NoConvergence";
  case Errc::ZeroGamma: return "ZeroGamma";
  case Errc::QuadTooCoarse: return "QuadTooCoarse";
  case Errc::PoleEncountered: return "PoleEncountered";
  case Errc::NotConverged: return "NotConverged";
  }
  return "Unknown";
}

bool is_validation_error(Errc code) noexcept {
  switch (code) {
  case Errc::NoConvergence:
  case Errc::ZeroGamma:
  case Errc::QuadTooCoarse:
  case Errc::PoleEncountered:
  case Errc::NotConverged:
    return false;
  default:
    return true;
  }
}

Error::Error(Errc code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ConvergenceError::ConvergenceError(std::size_t iterations, double last_residual,
                                   const std::string &what)
    : Error(Errc::NoConvergence, what), iterations_(iterations),
      last_residual_(last_residual) {}

} // namespace oz
