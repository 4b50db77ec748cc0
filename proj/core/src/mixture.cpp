#include "ozthermo/mixture.hpp"

#include "ozthermo/error.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace oz {

Mixture::Mixture(std::vector<Species> species, double alpha_sq, std::string label)
    : species_(std::move(species)), alpha_sq_(alpha_sq), label_(std::move(label)) {}

bool Mixture::has_charges() const noexcept {
  for (const auto &s : species_)
    if (s.valence != 0) return true;
  return false;
}

double Mixture::total_density() const noexcept {
  double sum = 0.0;
  for (const auto &s : species_) sum += s.density;
  return sum;
}

double Mixture::ionic_strength_sum() const noexcept {
  double sum = 0.0;
  for (const auto &s : species_) sum += s.density * s.valence * s.valence;
  return sum;
}

double Mixture::contact_distance(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size())
    throw Error(Errc::IndexOutOfRange, "species index out of range");
  return 0.5 * (species_[i].diameter + species_[j].diameter);
}

double Mixture::core_offset(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size())
    throw Error(Errc::IndexOutOfRange, "species index out of range");
  return 0.5 * std::abs(species_[i].diameter - species_[j].diameter);
}

Mixture make_mixture(std::vector<Species> species, double alpha_sq, std::string label) {
  if (species.empty()) throw Error(Errc::EmptyMixture, "mixture needs at least one species");

  double charge = 0.0;
  bool charged = false;
  for (std::size_t i = 0; i < species.size(); ++i) {
    const auto &s = species[i];
    if (!(s.diameter > 0.0) || !std::isfinite(s.diameter)) {
      std::ostringstream msg;
      msg << "species " << i + 1 << " has diameter " << s.diameter;
      throw Error(Errc::NonPositiveDiameter, msg.str());
    }
    if (!(s.density >= 0.0) || !std::isfinite(s.density)) {
      std::ostringstream msg;
      msg << "species " << i + 1 << " has density " << s.density;
      throw Error(Errc::NegativeDensity, msg.str());
    }
    charge += s.density * s.valence;
    charged = charged || s.valence != 0;
  }
  if (!(alpha_sq >= 0.0) || !std::isfinite(alpha_sq)) {
    std::ostringstream msg;
    msg << "alpha_sq = " << alpha_sq;
    throw Error(Errc::NegativeCoupling, msg.str());
  }
  if (charged && std::abs(charge) > electroneutrality_tolerance) {
    std::ostringstream msg;
    msg << "sum rho_i z_i = " << charge << " violates electroneutrality";
    throw Error(Errc::ChargeImbalance, msg.str());
  }
  return Mixture(std::move(species), alpha_sq, std::move(label));
}

Mixture with_coupling(const Mixture &m, double alpha_sq) {
  return make_mixture({m.species().begin(), m.species().end()}, alpha_sq, m.label());
}

Mixture with_packing_fraction(const Mixture &m, double eta) {
  if (!(eta >= 0.0 && eta < 1.0)) {
    std::ostringstream msg;
    msg << "eta = " << eta;
    throw Error(Errc::EtaOutOfRange, msg.str());
  }
  // Raw packing fraction; the input itself may be overfull.
  double current = 0.0;
  for (const auto &s : m.species()) current += pi / 6.0 * s.density * s.diameter * s.diameter * s.diameter;
  if (current <= 0.0)
    throw Error(Errc::EtaOutOfRange, "cannot rescale a mixture with zero packing fraction");
  const double scale = eta / current;
  std::vector<Species> species(m.species().begin(), m.species().end());
  for (auto &s : species) s.density *= scale;
  return make_mixture(std::move(species), m.alpha_sq(), m.label());
}

Moments moments(const Mixture &m) {
  Moments mo;
  for (const auto &s : m.species()) {
    const double d = s.diameter;
    mo.xi0 += s.density;
    mo.xi1 += s.density * d;
    mo.xi2 += s.density * d * d;
    mo.xi3 += s.density * d * d * d;
  }
  const double f = pi / 6.0;
  mo.xi0 *= f;
  mo.xi1 *= f;
  mo.xi2 *= f;
  mo.xi3 *= f;
  if (!(mo.xi3 < 1.0)) {
    std::ostringstream msg;
    msg << "packing fraction " << mo.xi3 << " >= 1";
    throw Error(Errc::PackingOverflow, msg.str());
  }
  mo.delta = 1.0 - mo.xi3;
  mo.eta = mo.xi3;
  return mo;
}

double density_for_packing(double eta, double diameter) {
  return 6.0 * eta / (pi * diameter * diameter * diameter);
}

} // namespace oz
