#ifndef OZTHERMO_MSA_HPP
#define OZTHERMO_MSA_HPP

#include "ozthermo/mixture.hpp"

#include <cstddef>
#include <vector>

namespace oz {

/**
 Mean Spherical Approximation for the unrestricted primitive model.

 Everything is driven by the screening parameter Gamma, the root of

 \f[
   2\Gamma = \alpha \Big\{ \sum_i \rho_i \Big[ \frac{z_i - \frac{\pi}{2\Delta}\sigma_i^2 P_n}
             {1 + \Gamma\sigma_i} \Big]^2 \Big\}^{1/2},
 \f]

 with P_n = (1/Omega) sum_k rho_k sigma_k z_k / (1 + Gamma sigma_k) and
 Omega = 1 + (pi/2Delta) sum_k rho_k sigma_k^3 / (1 + Gamma sigma_k).
 P_n and Omega are closed-form functions of Gamma, so the root search is
 one-dimensional.
 */

struct MsaOptions {
  double tol = 1e-12;         // relative residual |2G - alpha sqrt(D_a)| / 2G
  std::size_t max_iter = 500; // fixed-point budget; bisection gets the same
  double damping = 0.5;       // weight of the new iterate
  bool allow_neutral = true;  // false: uncharged input throws NotCharged
};

// Screening-dependent auxiliaries at a trial Gamma.
struct MsaAuxiliaries {
  double omega = 1.0;
  double p_n = 0.0;
  double d_a = 0.0; // sum_k rho_k (z_k + sigma_k N_k)^2
};

struct MsaSolution {
  double alpha_sq = 0.0;
  double delta = 1.0; // 1 - xi3
  double gamma = 0.0; // Gamma
  double p_n = 0.0;
  double omega = 1.0;
  double m0 = 0.0;
  std::vector<double> n_coeff; // N_i
  std::vector<double> a_coeff; // a_i
  std::vector<double> q_prime;  // Q'_ij, row-major
  std::vector<double> q_dprime; // Q''_ij, row-major
  std::size_t iterations = 0;
  double residual = 0.0;
  bool used_bisection = false;

  std::size_t size() const noexcept { return n_coeff.size(); }
};

MsaAuxiliaries msa_auxiliaries(const Mixture &m, double gamma);

// f(Gamma) = 2 Gamma - alpha sqrt(D_a(Gamma)); increasing, negative at 0.
double screening_residual(const Mixture &m, double gamma);

// Debye wavenumber kappa_D = alpha sqrt(sum rho z^2).
double debye_kappa(const Mixture &m);

// Solves for Gamma and populates every coefficient. Uncharged input (no
// valences or alpha^2 = 0) yields Gamma = 0 and all-zero coefficients unless
// options.allow_neutral is false.
// Throws NotCharged, PackingOverflow, or ConvergenceError.
MsaSolution solve_gamma(const Mixture &m, const MsaOptions &options = {});

// N_i = -[Gamma z_i + (pi/2Delta) sigma_i P_n] / (1 + Gamma sigma_i)
double n_coefficient(const MsaSolution &sol, std::size_t i);

// a_j = alpha^2 / (2 Gamma (1 + Gamma sigma_j)) (z_j - (pi/2Delta) sigma_j^2 P_n).
// Throws ZeroGamma when Gamma = 0.
double a_coefficient(const MsaSolution &sol, std::size_t j);

struct QCoefficients {
  double q_prime = 0.0;  // dimensionless
  double q_dprime = 0.0; // 1/length
};

QCoefficients q_coefficients(const MsaSolution &sol, std::size_t i, std::size_t j);

// Excess internal energy per volume in k_BT, (alpha^2/4pi) sum_j rho_j z_j N_j.
double internal_energy(const MsaSolution &sol, const Mixture &m);
// Same quantity from the screening form
//   -(alpha^2/4pi) [Gamma sum rho z^2/(1 + Gamma sigma) + (pi/2Delta) P_n^2 Omega].
double internal_energy_screening(const MsaSolution &sol, const Mixture &m);

// Excess Helmholtz energy per volume by Kirkwood charging: charges scaled by
// lambda in [0, 1] (alpha^2 -> lambda^2 alpha^2),
//   Delta A = \int_0^1 2 Delta E(lambda) / lambda d lambda,
// on quad_points Gauss-Legendre nodes. Throws QuadTooCoarse when doubling the
// node count moves the result by more than 1e-8 relative.
double helmholtz_charging(const Mixture &m, std::size_t quad_points = 32,
                          const MsaOptions &options = {});

// Electrostatic activity coefficient
//   (alpha^2/4pi) z_i (N_i - M_0) - (P_n sigma_i / 4Delta)(Gamma a_i + (pi/12Delta) alpha^2 P_n sigma_i^2),
// with the species-independent constant set to zero.
double ln_gamma_elec(const MsaSolution &sol, const Mixture &m, std::size_t i);
std::vector<double> ln_gamma_elec(const MsaSolution &sol, const Mixture &m);

// Density-weighted mean over charged species; free of any additive z_i*C.
double mean_ionic(const Mixture &m, const std::vector<double> &ln_gamma);

struct WaismanLebowitz {
  double gamma_sigma = 0.0; // Gamma sigma
  double b = 0.0;           // B = -Gamma sigma / (1 + Gamma sigma)
};

// Equal-diameter closed form, Gamma sigma = (-1 + sqrt(1 + 2x)) / 2 with
// x = alpha sigma sqrt(sum rho z^2). Throws NegativeX.
WaismanLebowitz waisman_lebowitz_gamma(double x);

} // namespace oz

#endif
