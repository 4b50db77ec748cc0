#ifndef OZTHERMO_TESTS_ORACLES_HPP
#define OZTHERMO_TESTS_ORACLES_HPP

// Independent reference computations for the test suites. Nothing here calls
// into the code path it is used to check.

#include "ozthermo/mixture.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oz::oracle {

// Adaptive Gauss-Kronrod quadrature.
inline double integrate(const std::function<double(double)> &f, double lo, double hi,
                        double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 15, tol);
}

inline double central_difference(const std::function<double(double)> &f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Wertheim-Thiele closed form of the Percus-Yevick direct correlation inside
// the core, written as a cubic in r/R.
inline double wertheim_direct_correlation(double r, double eta, double R) {
  if (r >= R) return 0.0;
  const double om4 = std::pow(1.0 - eta, 4);
  const double l1 = (1.0 + 2.0 * eta) * (1.0 + 2.0 * eta) / om4;
  const double l2 = -(1.0 + 0.5 * eta) * (1.0 + 0.5 * eta) / om4;
  const double x = r / R;
  return -l1 - 6.0 * eta * l2 * x - 0.5 * eta * l1 * x * x * x;
}

// Fourier transform of -1 inside a sphere of diameter R.
inline double unit_core_transform(double k, double R) {
  const double kr = k * R;
  return -4.0 * oz::pi * (std::sin(kr) - kr * std::cos(kr)) / (k * k * k);
}

// Direct O(n^2) evaluation of the radial sine transform pair.
inline std::vector<double> brute_force_sine_transform(const std::vector<double> &f, double dr) {
  const std::size_t n = f.size();
  const double dk = oz::pi / (static_cast<double>(n + 1) * dr);
  std::vector<double> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double k = static_cast<double>(m + 1) * dk;
    long double s = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const double r = static_cast<double>(j + 1) * dr;
      s += r * f[j] * std::sin(oz::pi * static_cast<double>((j + 1) * (m + 1)) / static_cast<double>(n + 1));
    }
    out[m] = 4.0 * oz::pi * dr * static_cast<double>(s) / k;
  }
  return out;
}

// Standard BMCSL pressure in moment form,
//   beta P = (6/pi) [xi0/D + 3 xi1 xi2/D^2 + (3 - xi3) xi2^3 / D^3].
inline double bmcsl_z_moment_form(const oz::Mixture &m) {
  double x[4] = {0, 0, 0, 0};
  for (const auto &s : m.species())
    for (int n = 0; n < 4; ++n) x[n] += oz::pi / 6.0 * s.density * std::pow(s.diameter, n);
  if (x[0] == 0.0) return 1.0;
  const double d = 1.0 - x[3];
  return (x[0] / d + 3.0 * x[1] * x[2] / (d * d) + (3.0 - x[3]) * x[2] * x[2] * x[2] / (d * d * d)) / x[0];
}

// Scalar MSA screening residual written out from the definitions, for use by
// the bisection oracle.
inline double msa_residual_reference(const oz::Mixture &m, double gamma) {
  double xi3 = 0.0;
  for (const auto &s : m.species()) xi3 += oz::pi / 6.0 * s.density * std::pow(s.diameter, 3);
  const double c = oz::pi / (2.0 * (1.0 - xi3));
  double om = 1.0, pn = 0.0;
  for (const auto &s : m.species()) {
    om += c * s.density * std::pow(s.diameter, 3) / (1.0 + gamma * s.diameter);
    pn += s.density * s.diameter * s.valence / (1.0 + gamma * s.diameter);
  }
  pn /= om;
  double da = 0.0;
  for (const auto &s : m.species()) {
    const double v = (s.valence - c * s.diameter * s.diameter * pn) / (1.0 + gamma * s.diameter);
    da += s.density * v * v;
  }
  return 2.0 * gamma - std::sqrt(m.alpha_sq() * da);
}

inline double bisect_gamma(const oz::Mixture &m, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (msa_residual_reference(m, mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Random hard-sphere mixture with 1..max_species components at packing eta.
inline oz::Mixture random_hard_sphere_mixture(std::mt19937_64 &rng, std::size_t max_species,
                                              double eta) {
  std::uniform_int_distribution<std::size_t> count(1, max_species);
  std::uniform_real_distribution<double> sigma(0.5, 2.5), rho(0.05, 1.0);
  std::vector<oz::Species> species(count(rng));
  for (auto &s : species) s = {sigma(rng), rho(rng), 0};
  return oz::with_packing_fraction(oz::make_mixture(species), eta);
}

// Random electroneutral primitive-model electrolyte.
inline oz::Mixture random_electrolyte(std::mt19937_64 &rng, std::size_t n_species, double eta,
                                      double alpha_sq, bool equal_sigma = false) {
  std::uniform_int_distribution<int> mag(1, 3);
  std::uniform_real_distribution<double> sigma(0.5, 2.0), rho(0.1, 1.0);
  std::bernoulli_distribution sign(0.5);
  const double common_sigma = sigma(rng);
  std::vector<oz::Species> species(n_species);
  for (std::size_t i = 0; i < n_species; ++i) {
    int z = mag(rng);
    if (i == 1 || (i > 1 && sign(rng))) z = -z;
    species[i] = {equal_sigma ? common_sigma : sigma(rng), rho(rng), z};
  }
  double q = 0.0;
  for (const auto &s : species) q += s.density * s.valence;
  // Cancel the net charge on the first species of the opposite sign.
  for (auto &s : species) {
    if ((q > 0.0 && s.valence < 0) || (q < 0.0 && s.valence > 0)) {
      s.density += std::abs(q / s.valence);
      break;
    }
  }
  q = 0.0;
  for (const auto &s : species) q += s.density * s.valence;
  // Remove the remaining rounding residue exactly on species 0.
  species[0].density -= q / species[0].valence;
  auto m = oz::make_mixture(species, alpha_sq);
  return oz::with_packing_fraction(m, eta);
}

} // namespace oz::oracle

#endif
