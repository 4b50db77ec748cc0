#ifndef OZTHERMO_PY_SINGLE_HPP
#define OZTHERMO_PY_SINGLE_HPP

namespace oz {

/**
 Closed-form Percus-Yevick solution for a one-component hard-sphere fluid.

 The Baxter factor function is quadratic on its support [0, R]

 \f[
     Q(r) = \tfrac12 a (r^2 - R^2) + b (r - R), \qquad
     a = \frac{1+2\eta}{(1-\eta)^2}, \quad b = -\frac{3R\eta}{2(1-\eta)^2}
 \f]

 and vanishes outside it. Everything else (equations of state, contact value,
 direct correlation function) follows from a, b and eta.
 */
struct PySingleSolution {
  double eta = 0.0;      // packing fraction
  double diameter = 1.0; // R
  double a = 1.0;        // quadratic Baxter coefficient
  double b = 0.0;        // linear Baxter coefficient (length)
  double q_hat_zero = 1.0;
};

// Throws EtaOutOfRange unless 0 <= eta < 1, NonPositiveDiameter unless R > 0.
PySingleSolution solve_py_single(double eta, double diameter = 1.0);

// Q_hat(0) from the Baxter coefficients, 1 + 4 eta a + 6 eta b / R.
double q_hat_zero_from_coefficients(const PySingleSolution &s);

// Q(r); zero for r < 0 and r > R.
double baxter_q(double r, const PySingleSolution &s);
// dQ/dr inside the support, zero outside.
double baxter_q_derivative(double r, const PySingleSolution &s);

// g(R+) = (1 + eta/2) / (1 - eta)^2
double contact_value(double eta);

// P / (rho k_B T) along the three routes.
double z_compressibility(double eta);   // (1 + eta + eta^2) / (1 - eta)^3
double z_virial(double eta);            // (1 + 2 eta + 3 eta^2) / (1 - eta)^2
double z_carnahan_starling(double eta); // (1 + eta + eta^2 - eta^3) / (1 - eta)^3

// Direct correlation function. Inside the core
//   r c(r) = -Q'(r) + 2 pi rho \int_0^{R-r} Q(t) Q'(t + r) dt,
// and c(r) = 0 for r >= R. Throws NonPositiveRadius for r <= 0.
double direct_correlation(double r, const PySingleSolution &s);

// Single-component excess chemical potential in the closed form
//   -ln(1-eta) + eta(3-eta)/(1-eta)^2 + eta^2(3-2eta)/(2(1-eta)^3).
// Note this is not the density derivative of the Carnahan-Starling free
// energy; oz::ln_gamma_hs gives that for any mixture.
double excess_mu_single(double eta);

} // namespace oz

#endif
