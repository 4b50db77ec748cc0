#ifndef OZTHERMO_PY_MIXTURE_HPP
#define OZTHERMO_PY_MIXTURE_HPP

#include "ozthermo/mixture.hpp"

#include <cstddef>
#include <vector>

namespace oz {

// Hard-sphere mixture thermodynamics on the Boublik-Mansoori-Carnahan-
// Starling-Leland equation of state. Valences are ignored throughout.

// Dimensionless BMCSL composites. For a single species y1 = y2 = 0, y3 = 1.
struct BmcslComposites {
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;
};

struct MixtureThermo {
  double z_bmcsl = 1.0;           // P / (k_B T sum rho)
  double a_ex_per_particle = 0.0; // A_ex / (N k_B T)
  std::vector<double> ln_gamma_hs;
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;
};

BmcslComposites bmcsl_composites(const Mixture &m);

// Z = [1 + xi + xi^2 - 3 xi (y1 + xi y2) - xi^3 y3] / (1 - xi)^3
double bmcsl_z(const Mixture &m);

// Isochoric integral of (Z - 1) d(xi)/xi from the ideal gas, in closed form:
//   A_ex/(N kT) = [(xi2^3/xi3^2 - xi0) ln(1 - xi3) + 3 xi1 xi2/(1 - xi3)
//                  + xi2^3 / (xi3 (1 - xi3)^2)] / xi0
double excess_helmholtz(const Mixture &m);

// beta A_ex / V; the function ln_gamma_hs differentiates.
double excess_helmholtz_density(const Mixture &m);

// beta mu_i^ex = d(beta A_ex/V)/d rho_i. Throws IndexOutOfRange.
double ln_gamma_hs(const Mixture &m, std::size_t i);
std::vector<double> ln_gamma_hs(const Mixture &m);

MixtureThermo mixture_thermo(const Mixture &m);

} // namespace oz

#endif
