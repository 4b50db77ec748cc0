#include "ozthermo/py_single.hpp"

#include "ozthermo/error.hpp"
#include "ozthermo/mixture.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace oz {

namespace {

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta < 1.0)) {
    std::ostringstream msg;
    msg << "eta = " << eta << " outside [0, 1)";
    throw Error(Errc::EtaOutOfRange, msg.str());
  }
}

// 3-point Gauss-Legendre on [-1, 1]; exact for polynomials up to degree 5.
constexpr std::array<double, 3> gl3_nodes{-0.77459666924148337704, 0.0, 0.77459666924148337704};
constexpr std::array<double, 3> gl3_weights{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

} // namespace

PySingleSolution solve_py_single(double eta, double diameter) {
  check_eta(eta);
  if (!(diameter > 0.0)) throw Error(Errc::NonPositiveDiameter, "diameter must be positive");
  const double om = 1.0 - eta;
  PySingleSolution s;
  s.eta = eta;
  s.diameter = diameter;
  s.a = (1.0 + 2.0 * eta) / (om * om);
  s.b = -3.0 * diameter * eta / (2.0 * om * om);
  s.q_hat_zero = (1.0 + 2.0 * eta) / (om * om);
  return s;
}

double q_hat_zero_from_coefficients(const PySingleSolution &s) {
  return 1.0 + 4.0 * s.eta * s.a + 6.0 * s.eta * s.b / s.diameter;
}

double baxter_q(double r, const PySingleSolution &s) {
  const double R = s.diameter;
  if (r < 0.0 || r > R) return 0.0;
  return 0.5 * s.a * (r * r - R * R) + s.b * (r - R);
}

double baxter_q_derivative(double r, const PySingleSolution &s) {
  if (r < 0.0 || r > s.diameter) return 0.0;
  return s.a * r + s.b;
}

double contact_value(double eta) {
  check_eta(eta);
  const double om = 1.0 - eta;
  return (1.0 + 0.5 * eta) / (om * om);
}

double z_compressibility(double eta) {
  check_eta(eta);
  const double om = 1.0 - eta;
  return (1.0 + eta + eta * eta) / (om * om * om);
}

double z_virial(double eta) {
  check_eta(eta);
  const double om = 1.0 - eta;
  return (1.0 + 2.0 * eta + 3.0 * eta * eta) / (om * om);
}

double z_carnahan_starling(double eta) {
  check_eta(eta);
  const double om = 1.0 - eta;
  return (1.0 + eta + eta * eta - eta * eta * eta) / (om * om * om);
}

double direct_correlation(double r, const PySingleSolution &s) {
  if (!(r > 0.0)) throw Error(Errc::NonPositiveRadius, "direct_correlation needs r > 0");
  const double R = s.diameter;
  if (r >= R) return 0.0;

  const double rho = density_for_packing(s.eta, R);
  // Convolution of a quadratic with a linear function: cubic integrand.
  const double upper = R - r;
  const double half = 0.5 * upper;
  double conv = 0.0;
  for (std::size_t i = 0; i < gl3_nodes.size(); ++i) {
    const double t = half + half * gl3_nodes[i];
    conv += gl3_weights[i] * baxter_q(t, s) * baxter_q_derivative(t + r, s);
  }
  conv *= half;

  return (-baxter_q_derivative(r, s) + 2.0 * pi * rho * conv) / r;
}

double excess_mu_single(double eta) {
  check_eta(eta);
  const double om = 1.0 - eta;
  return -std::log1p(-eta) + eta * (3.0 - eta) / (om * om) +
         eta * eta * (3.0 - 2.0 * eta) / (2.0 * om * om * om);
}

} // namespace oz
