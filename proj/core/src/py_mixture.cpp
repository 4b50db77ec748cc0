#include "ozthermo/py_mixture.hpp"

#include "ozthermo/error.hpp"

#include <array>
#include <cmath>

namespace oz {

namespace {

// Reduced free energy Phi(xi0..xi3) with beta A_ex / V = (6/pi) Phi, and its
// partial derivatives with respect to each moment.
struct FreeEnergyTerms {
  double phi = 0.0;
  std::array<double, 4> dphi{};
};

FreeEnergyTerms free_energy_terms(const Moments &mo) {
  FreeEnergyTerms t;
  if (mo.xi3 <= 0.0) return t;

  const double x0 = mo.xi0, x1 = mo.xi1, x2 = mo.xi2, x3 = mo.xi3;
  const double d = mo.delta;
  const double lg = std::log1p(-x3);
  const double r23 = x2 * x2 * x2 / (x3 * x3); // xi2^3 / xi3^2

  t.phi = (r23 - x0) * lg + 3.0 * x1 * x2 / d + x2 * x2 * x2 / (x3 * d * d);

  t.dphi[0] = -lg;
  t.dphi[1] = 3.0 * x2 / d;
  t.dphi[2] = 3.0 * x2 * x2 / (x3 * x3) * lg + 3.0 * x1 / d + 3.0 * x2 * x2 / (x3 * d * d);
  t.dphi[3] = -2.0 * r23 / x3 * lg - (r23 - x0) / d + 3.0 * x1 * x2 / (d * d) +
              x2 * x2 * x2 * (-1.0 / (x3 * x3 * d * d) + 2.0 / (x3 * d * d * d));
  return t;
}

} // namespace

BmcslComposites bmcsl_composites(const Mixture &m) {
  BmcslComposites y;
  const Moments mo = moments(m);
  const double total = m.total_density();
  if (mo.xi3 <= 0.0 || total <= 0.0) return y;

  const std::size_t n = m.size();
  std::vector<double> phi(n), x(n), sig(n);
  for (std::size_t i = 0; i < n; ++i) {
    sig[i] = m[i].diameter;
    phi[i] = pi / 6.0 * m[i].density * sig[i] * sig[i] * sig[i] / mo.xi3;
    x[i] = m[i].density / total;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double ds = sig[i] - sig[j];
      const double gm = std::sqrt(sig[i] * sig[j]);
      const double dij = std::sqrt(phi[i] * phi[j]) * ds * ds / (sig[i] * sig[j]) * std::sqrt(x[i] * x[j]);
      if (dij == 0.0) continue;
      y.y1 += dij * (sig[i] + sig[j]) / gm;
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += phi[k] * gm / sig[k];
      y.y2 += dij * s;
    }
  }

  double s3 = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] > 0.0) s3 += std::cbrt(phi[i] * phi[i] * x[i]);
  y.y3 = s3 * s3 * s3;
  return y;
}

double bmcsl_z(const Mixture &m) {
  const Moments mo = moments(m);
  if (mo.xi3 <= 0.0) return 1.0;
  const BmcslComposites y = bmcsl_composites(m);
  const double xi = mo.xi3;
  const double d = mo.delta;
  return (1.0 + xi + xi * xi - 3.0 * xi * (y.y1 + xi * y.y2) - xi * xi * xi * y.y3) / (d * d * d);
}

double excess_helmholtz_density(const Mixture &m) {
  return 6.0 / pi * free_energy_terms(moments(m)).phi;
}

double excess_helmholtz(const Mixture &m) {
  const Moments mo = moments(m);
  if (mo.xi0 <= 0.0) return 0.0;
  return free_energy_terms(mo).phi / mo.xi0;
}

double ln_gamma_hs(const Mixture &m, std::size_t i) {
  if (i >= m.size()) throw Error(Errc::IndexOutOfRange, "species index out of range");
  const FreeEnergyTerms t = free_energy_terms(moments(m));
  const double s = m[i].diameter;
  return t.dphi[0] + s * (t.dphi[1] + s * (t.dphi[2] + s * t.dphi[3]));
}

std::vector<double> ln_gamma_hs(const Mixture &m) {
  const FreeEnergyTerms t = free_energy_terms(moments(m));
  std::vector<double> out;
  out.reserve(m.size());
  for (const auto &sp : m.species()) {
    const double s = sp.diameter;
    out.push_back(t.dphi[0] + s * (t.dphi[1] + s * (t.dphi[2] + s * t.dphi[3])));
  }
  return out;
}

MixtureThermo mixture_thermo(const Mixture &m) {
  MixtureThermo th;
  const BmcslComposites y = bmcsl_composites(m);
  th.y1 = y.y1;
  th.y2 = y.y2;
  th.y3 = y.y3;
  th.z_bmcsl = bmcsl_z(m);
  th.a_ex_per_particle = excess_helmholtz(m);
  th.ln_gamma_hs = ln_gamma_hs(m);
  return th;
}

} // namespace oz
