#include "ozthermo/msa.hpp"

#include "ozthermo/error.hpp"
#include "ozthermo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace oz {

namespace {

void check_index(const MsaSolution &sol, std::size_t i) {
  if (i >= sol.size()) throw Error(Errc::IndexOutOfRange, "species index out of range");
}

// Relative self-consistency residual at gamma.
double relative_residual(double gamma, double target) {
  return std::abs(gamma - target) / gamma;
}

void populate(MsaSolution &sol, const Mixture &m);

// Gamma = 0: the Q coefficients keep their hard-sphere part, everything
// electrostatic is zero.
MsaSolution uncharged_solution(const Mixture &m, const Moments &mo) {
  MsaSolution sol;
  sol.alpha_sq = m.alpha_sq();
  sol.delta = mo.delta;
  populate(sol, m);
  sol.m0 = 0.0;
  return sol;
}

void populate(MsaSolution &sol, const Mixture &m) {
  const std::size_t n = m.size();
  const double g = sol.gamma;
  const double d = sol.delta;
  const double c = pi / (2.0 * d);

  sol.n_coeff.assign(n, 0.0);
  sol.a_coeff.assign(n, 0.0);
  if (g > 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      const double s = m[i].diameter;
      const double z = m[i].valence;
      sol.n_coeff[i] = -(g * z + c * s * sol.p_n) / (1.0 + g * s);
      sol.a_coeff[i] = sol.alpha_sq / (2.0 * g * (1.0 + g * s)) * (z - c * s * s * sol.p_n);
    }
  }

  // zeta2 is the raw second moment sum rho sigma^2; with it the uncharged
  // limit reproduces the one-component Percus-Yevick Baxter coefficients.
  double zeta2 = 0.0;
  for (const auto &sp : m.species()) zeta2 += sp.density * sp.diameter * sp.diameter;

  const double ratio = sol.alpha_sq > 0.0 ? 2.0 * g * g / sol.alpha_sq : 0.0;
  sol.q_prime.assign(n * n, 0.0);
  sol.q_dprime.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double si = m[i].diameter;
    for (std::size_t j = 0; j < n; ++j) {
      const double sj = m[j].diameter;
      const double rij = 0.5 * (si + sj);
      sol.q_prime[i * n + j] =
          2.0 * pi / d * (rij + pi / (4.0 * d) * si * sj * zeta2) - ratio * sol.a_coeff[i] * sol.a_coeff[j];
      sol.q_dprime[i * n + j] =
          2.0 * pi / d * (1.0 + c * sj * zeta2) + pi / d * sol.a_coeff[j] * sol.p_n;
    }
  }

  double m0 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = m[i].diameter;
    const double scaled_a = sol.alpha_sq > 0.0 ? 2.0 * g * sol.a_coeff[i] / sol.alpha_sq : 0.0;
    m0 += m[i].density * s * s * (scaled_a + 0.5 * m[i].valence);
  }
  sol.m0 = pi / 6.0 * m0;
}

} // namespace

MsaAuxiliaries msa_auxiliaries(const Mixture &m, double gamma) {
  const double d = moments(m).delta;
  const double c = pi / (2.0 * d);
  double omega_sum = 0.0, pn_sum = 0.0;
  for (const auto &sp : m.species()) {
    const double s = sp.diameter;
    const double den = 1.0 + gamma * s;
    omega_sum += sp.density * s * s * s / den;
    pn_sum += sp.density * s * sp.valence / den;
  }
  MsaAuxiliaries aux;
  aux.omega = 1.0 + c * omega_sum;
  aux.p_n = pn_sum / aux.omega;
  for (const auto &sp : m.species()) {
    const double s = sp.diameter;
    const double v = (sp.valence - c * s * s * aux.p_n) / (1.0 + gamma * s);
    aux.d_a += sp.density * v * v;
  }
  return aux;
}

double screening_residual(const Mixture &m, double gamma) {
  return 2.0 * gamma - std::sqrt(m.alpha_sq() * msa_auxiliaries(m, gamma).d_a);
}

double debye_kappa(const Mixture &m) {
  return std::sqrt(m.alpha_sq() * m.ionic_strength_sum());
}

MsaSolution solve_gamma(const Mixture &m, const MsaOptions &options) {
  const Moments mo = moments(m);
  if (!m.is_charged()) {
    if (!options.allow_neutral)
      throw Error(Errc::NotCharged, "MSA needs charged species and alpha_sq > 0");
    return uncharged_solution(m, mo);
  }

  const double alpha = std::sqrt(m.alpha_sq());
  const double kappa = debye_kappa(m);
  auto target_of = [&](double g) { return 0.5 * alpha * std::sqrt(msa_auxiliaries(m, g).d_a); };

  MsaSolution sol;
  sol.alpha_sq = m.alpha_sq();
  sol.delta = mo.delta;

  // Damped fixed point.
  double g = 0.5 * kappa;
  double best = std::numeric_limits<double>::infinity();
  std::size_t stalled = 0;
  bool converged = false;
  double res = std::numeric_limits<double>::infinity();
  std::size_t it = 0;
  for (; it < options.max_iter; ++it) {
    const double target = target_of(g);
    res = relative_residual(g, target);
    if (res <= options.tol) {
      converged = true;
      break;
    }
    if (res < best) {
      best = res;
      stalled = 0;
    } else if (++stalled >= 20) {
      break; // oscillating or stuck at round-off
    }
    g = (1.0 - options.damping) * g + options.damping * target;
  }
  sol.iterations = it;

  // Bisection on f(G) = 2G - alpha sqrt(D_a(G)), bracketed on [0, 10 kappa].
  if (!converged) {
    sol.used_bisection = true;
    double lo = 0.0;
    double hi = 10.0 * kappa;
    while (screening_residual(m, hi) <= 0.0) hi *= 2.0;
    for (std::size_t k = 0; k < options.max_iter; ++k, ++sol.iterations) {
      g = 0.5 * (lo + hi);
      res = relative_residual(g, target_of(g));
      if (res <= options.tol) {
        converged = true;
        break;
      }
      if (screening_residual(m, g) > 0.0)
        hi = g;
      else
        lo = g;
      if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "Gamma did not converge after " << sol.iterations << " iterations (residual " << res << ")";
      throw ConvergenceError(sol.iterations, res, msg.str());
    }
  }

  const MsaAuxiliaries aux = msa_auxiliaries(m, g);
  sol.gamma = g;
  sol.p_n = aux.p_n;
  sol.omega = aux.omega;
  sol.residual = res;
  populate(sol, m);
  return sol;
}

double n_coefficient(const MsaSolution &sol, std::size_t i) {
  check_index(sol, i);
  return sol.n_coeff[i];
}

double a_coefficient(const MsaSolution &sol, std::size_t j) {
  check_index(sol, j);
  if (!(sol.gamma > 0.0)) throw Error(Errc::ZeroGamma, "a_j is undefined for Gamma = 0");
  return sol.a_coeff[j];
}

QCoefficients q_coefficients(const MsaSolution &sol, std::size_t i, std::size_t j) {
  check_index(sol, i);
  check_index(sol, j);
  const std::size_t n = sol.size();
  return {sol.q_prime[i * n + j], sol.q_dprime[i * n + j]};
}

double internal_energy(const MsaSolution &sol, const Mixture &m) {
  double sum = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) sum += m[j].density * m[j].valence * sol.n_coeff[j];
  return sol.alpha_sq / (4.0 * pi) * sum;
}

double internal_energy_screening(const MsaSolution &sol, const Mixture &m) {
  if (!(sol.gamma > 0.0)) return 0.0;
  double sum = 0.0;
  for (const auto &sp : m.species())
    sum += sp.density * sp.valence * sp.valence / (1.0 + sol.gamma * sp.diameter);
  return -sol.alpha_sq / (4.0 * pi) *
         (sol.gamma * sum + pi / (2.0 * sol.delta) * sol.p_n * sol.p_n * sol.omega);
}

double helmholtz_charging(const Mixture &m, std::size_t quad_points, const MsaOptions &options) {
  if (!m.is_charged()) return 0.0;
  auto integrate = [&](std::size_t points) {
    const GaussLegendre rule = gauss_legendre(points);
    return rule.integrate(
        [&](double lambda) {
          const Mixture scaled = with_coupling(m, lambda * lambda * m.alpha_sq());
          const MsaSolution sol = solve_gamma(scaled, options);
          return 2.0 * internal_energy(sol, scaled) / lambda;
        },
        0.0, 1.0);
  };
  const double coarse = integrate(quad_points);
  const double fine = integrate(2 * quad_points);
  if (std::abs(fine - coarse) > 1e-8 * std::abs(fine)) {
    std::ostringstream msg;
    msg << quad_points << "-node charging integral " << coarse << " differs from "
        << 2 * quad_points << "-node value " << fine;
    throw Error(Errc::QuadTooCoarse, msg.str());
  }
  return coarse;
}

double ln_gamma_elec(const MsaSolution &sol, const Mixture &m, std::size_t i) {
  check_index(sol, i);
  if (!(sol.gamma > 0.0)) return 0.0;
  const double s = m[i].diameter;
  const double z = m[i].valence;
  const double d = sol.delta;
  return sol.alpha_sq / (4.0 * pi) * z * (sol.n_coeff[i] - sol.m0) -
         sol.p_n * s / (4.0 * d) *
             (sol.gamma * sol.a_coeff[i] + pi / (12.0 * d) * sol.alpha_sq * sol.p_n * s * s);
}

std::vector<double> ln_gamma_elec(const MsaSolution &sol, const Mixture &m) {
  std::vector<double> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = ln_gamma_elec(sol, m, i);
  return out;
}

double mean_ionic(const Mixture &m, const std::vector<double> &ln_gamma) {
  if (ln_gamma.size() != m.size()) throw Error(Errc::LengthMismatch, "one value per species expected");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].valence == 0) continue;
    num += m[i].density * ln_gamma[i];
    den += m[i].density;
  }
  return den > 0.0 ? num / den : 0.0;
}

WaismanLebowitz waisman_lebowitz_gamma(double x) {
  if (!(x >= 0.0)) throw Error(Errc::NegativeX, "x must be non-negative");
  WaismanLebowitz wl;
  wl.gamma_sigma = 0.5 * (std::sqrt(1.0 + 2.0 * x) - 1.0);
  wl.b = -wl.gamma_sigma / (1.0 + wl.gamma_sigma);
  return wl;
}

} // namespace oz
