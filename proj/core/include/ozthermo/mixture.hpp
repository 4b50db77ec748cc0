#ifndef OZTHERMO_MIXTURE_HPP
#define OZTHERMO_MIXTURE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace oz {

// All quantities are in reduced units: lengths in units of a reference
// diameter, energies in k_BT. The Coulomb coupling alpha^2 = 4*pi*beta*e^2/eps0
// therefore carries the dimension of a length.

inline constexpr double pi = 3.14159265358979323846;

// Absolute tolerance on sum_i rho_i z_i for a charged system.
inline constexpr double electroneutrality_tolerance = 1e-12;

struct Species {
  double diameter = 1.0; // sigma_i
  double density = 0.0;  // number density rho_i
  int valence = 0;       // z_i, may be zero

  bool operator==(const Species &) const = default;
};

// Validated, immutable system definition. Species order is preserved; every
// per-species output of the solvers is aligned to it.
class Mixture {
public:
  std::span<const Species> species() const noexcept { return species_; }
  const Species &operator[](std::size_t i) const { return species_[i]; }
  std::size_t size() const noexcept { return species_.size(); }

  double alpha_sq() const noexcept { return alpha_sq_; }
  const std::string &label() const noexcept { return label_; }

  // True when at least one species carries a charge.
  bool has_charges() const noexcept;
  // True when electrostatics are active: charges present and alpha^2 > 0.
  bool is_charged() const noexcept { return has_charges() && alpha_sq_ > 0.0; }

  double total_density() const noexcept;
  // sum_i rho_i z_i^2
  double ionic_strength_sum() const noexcept;

  // Hard-core contact distance R_ij = (sigma_i + sigma_j)/2.
  double contact_distance(std::size_t i, std::size_t j) const;
  // Lower edge of the Baxter support, S_ij = |sigma_i - sigma_j|/2.
  double core_offset(std::size_t i, std::size_t j) const;

  bool operator==(const Mixture &) const = default;

private:
  friend Mixture make_mixture(std::vector<Species>, double, std::string);
  Mixture(std::vector<Species> species, double alpha_sq, std::string label);

  std::vector<Species> species_;
  double alpha_sq_ = 0.0;
  std::string label_;
};

// Validates and builds a Mixture.
// Throws oz::Error with EmptyMixture, NonPositiveDiameter, NegativeDensity,
// NegativeCoupling or ChargeImbalance.
Mixture make_mixture(std::vector<Species> species, double alpha_sq = 0.0,
                     std::string label = {});

// Same species and label with a different coupling constant.
Mixture with_coupling(const Mixture &m, double alpha_sq);

// Same composition rescaled so that the total packing fraction equals eta.
Mixture with_packing_fraction(const Mixture &m, double eta);

// Geometric size moments xi_n = (pi/6) sum_k rho_k sigma_k^n.
struct Moments {
  double xi0 = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
  double delta = 1.0; // void fraction 1 - xi3
  double eta = 0.0;   // total packing fraction, equal to xi3
};

// Throws PackingOverflow if xi3 >= 1.
Moments moments(const Mixture &m);

// rho such that a one-component fluid of the given diameter has packing eta.
double density_for_packing(double eta, double diameter);

} // namespace oz

#endif
