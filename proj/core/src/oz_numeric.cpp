#include "ozthermo/oz_numeric.hpp"

#include "ozthermo/error.hpp"
#include "ozthermo/mixture.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>

namespace oz {

namespace {

// FFTW's planner is not re-entrant.
std::mutex &planner_mutex() {
  static std::mutex m;
  return m;
}

void check_length(std::size_t got, std::size_t want) {
  if (got != want) {
    std::ostringstream msg;
    msg << "expected " << want << " values, got " << got;
    throw Error(Errc::LengthMismatch, msg.str());
  }
}

} // namespace

RadialGrid::RadialGrid(std::size_t n, double dr) : n_(n), dr_(dr) {
  if (n < 256 || (n & (n - 1)) != 0) {
    std::ostringstream msg;
    msg << "grid size " << n << " must be a power of two >= 256";
    throw Error(Errc::InvalidGrid, msg.str());
  }
  if (!(dr > 0.0) || !std::isfinite(dr)) throw Error(Errc::InvalidGrid, "grid spacing must be positive");
}

double RadialGrid::dk() const noexcept {
  return pi / (static_cast<double>(n_ + 1) * dr_);
}

struct SineTransform::Plan {
  explicit Plan(std::size_t n) : size(n) {
    in = fftw_alloc_real(n);
    out = fftw_alloc_real(n);
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_r2r_1d(static_cast<int>(n), in, out, FFTW_RODFT00, FFTW_ESTIMATE);
  }
  ~Plan() {
    {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);
  }

  // out_m = sum_j in_j sin(pi (j+1)(m+1) / (n+1)); FFTW's RODFT00 carries a factor 2.
  void run(std::span<const double> src, std::span<double> dst) const {
    std::lock_guard lock(exec_mutex);
    std::copy(src.begin(), src.end(), in);
    fftw_execute(plan);
    for (std::size_t m = 0; m < size; ++m) dst[m] = 0.5 * out[m];
  }

  std::size_t size;
  double *in = nullptr;
  double *out = nullptr;
  fftw_plan plan = nullptr;
  mutable std::mutex exec_mutex;
};

SineTransform::SineTransform(const RadialGrid &grid)
    : grid_(grid), plan_(std::make_unique<Plan>(grid.size())) {}
SineTransform::~SineTransform() = default;
SineTransform::SineTransform(SineTransform &&) noexcept = default;
SineTransform &SineTransform::operator=(SineTransform &&) noexcept = default;

void SineTransform::forward(std::span<const double> f, std::span<double> out) const {
  const std::size_t n = grid_.size();
  check_length(f.size(), n);
  check_length(out.size(), n);
  std::vector<double> rf(n);
  for (std::size_t j = 0; j < n; ++j) rf[j] = grid_.r(j) * f[j];
  plan_->run(rf, out);
  const double pre = 4.0 * pi * grid_.dr();
  for (std::size_t m = 0; m < n; ++m) out[m] *= pre / grid_.k(m);
}

void SineTransform::inverse(std::span<const double> F, std::span<double> out) const {
  const std::size_t n = grid_.size();
  check_length(F.size(), n);
  check_length(out.size(), n);
  std::vector<double> kF(n);
  for (std::size_t m = 0; m < n; ++m) kF[m] = grid_.k(m) * F[m];
  plan_->run(kF, out);
  const double pre = grid_.dk() / (2.0 * pi * pi);
  for (std::size_t j = 0; j < n; ++j) out[j] *= pre / grid_.r(j);
}

std::vector<double> SineTransform::forward(std::span<const double> f) const {
  std::vector<double> out(grid_.size());
  forward(f, out);
  return out;
}

std::vector<double> SineTransform::inverse(std::span<const double> F) const {
  std::vector<double> out(grid_.size());
  inverse(F, out);
  return out;
}

std::vector<double> sine_transform(std::span<const double> f, const RadialGrid &grid) {
  return SineTransform(grid).forward(f);
}

std::vector<double> inverse_sine_transform(std::span<const double> F, const RadialGrid &grid) {
  return SineTransform(grid).inverse(F);
}

RadialGrid default_grid(double diameter) {
  return RadialGrid(4096, diameter / 100.0);
}

CorrelationTable solve_py_numeric(double eta, double diameter, const RadialGrid &grid,
                                  const PyNumericOptions &options) {
  if (!(eta > 0.0 && eta <= 0.5)) {
    std::ostringstream msg;
    msg << "eta = " << eta << " outside (0, 0.5]";
    throw Error(Errc::EtaOutOfRange, msg.str());
  }
  if (!(diameter > 0.0)) throw Error(Errc::NonPositiveDiameter, "diameter must be positive");
  if (grid.extent() < 20.0 * diameter) {
    std::ostringstream msg;
    msg << "grid extent " << grid.extent() << " is shorter than 20 diameters";
    throw Error(Errc::InvalidGrid, msg.str());
  }
  if (!(options.mix > 0.0 && options.mix <= 1.0))
    throw Error(Errc::InvalidGrid, "damping must lie in (0, 1]");

  const std::size_t n = grid.size();
  const double rho = density_for_packing(eta, diameter);
  const double dr = grid.dr();

  // Fraction of each node's cell [r - dr/2, r + dr/2] lying inside the core.
  std::vector<double> core(n);
  for (std::size_t j = 0; j < n; ++j)
    core[j] = std::clamp((diameter - (grid.r(j) - 0.5 * dr)) / dr, 0.0, 1.0);

  const SineTransform dst(grid);
  std::vector<double> c(n), c_hat(n), gamma_hat(n), gamma(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = -core[j];

  auto indirect_from = [&](const std::vector<double> &cc) {
    dst.forward(cc, c_hat);
    for (std::size_t m = 0; m < n; ++m) {
      const double denom = 1.0 - rho * c_hat[m];
      if (!(denom > 0.0)) {
        std::ostringstream msg;
        msg << "1 - rho c_hat(k) = " << denom << " at k = " << grid.k(m);
        throw Error(Errc::PoleEncountered, msg.str());
      }
      gamma_hat[m] = rho * c_hat[m] * c_hat[m] / denom;
    }
    dst.inverse(gamma_hat, gamma);
  };

  CorrelationTable t;
  t.grid = grid;
  t.eta = eta;
  t.diameter = diameter;
  t.density = rho;

  double change = 0.0;
  std::size_t it = 0;
  for (; it < options.max_iter; ++it) {
    indirect_from(c);
    change = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double c_new = core[j] * (-1.0 - gamma[j]);
      change = std::max(change, std::abs(c_new - c[j]));
      c[j] = (1.0 - options.mix) * c[j] + options.mix * c_new;
    }
    if (change <= options.tol) {
      t.converged = true;
      break;
    }
  }
  t.iterations = t.converged ? it + 1 : it;
  t.final_change = change;
  if (!t.converged && options.throw_on_failure) {
    std::ostringstream msg;
    msg << "Picard iteration did not converge in " << it << " steps (change " << change << ")";
    throw ConvergenceError(it, change, msg.str());
  }

  // Close exactly on the last indirect correlation.
  indirect_from(c);
  t.gamma_ind = gamma;
  t.c.resize(n);
  t.h.resize(n);
  t.g.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    t.c[j] = core[j] * (-1.0 - gamma[j]);
    if (core[j] >= 1.0) {
      t.h[j] = -1.0;
    } else {
      t.h[j] = t.c[j] + gamma[j];
    }
    t.g[j] = 1.0 + t.h[j];
  }
  t.c_hat = dst.forward(t.c);

  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) sum += grid.r(j) * grid.r(j) * t.c[j];
  t.c_hat_zero = 4.0 * pi * dr * sum;
  return t;
}

double contact_extrapolate(const CorrelationTable &table, double diameter) {
  if (!table.converged) throw Error(Errc::NotConverged, "correlation table is not converged");
  const RadialGrid &grid = table.grid;
  const double dr = grid.dr();
  // First node whose cell lies entirely outside the core.
  std::size_t j = 0;
  while (j < grid.size() && grid.r(j) - 0.5 * dr < diameter) ++j;
  if (j + 1 >= grid.size()) throw Error(Errc::InvalidGrid, "no grid nodes outside the core");
  const double r1 = grid.r(j), r2 = grid.r(j + 1);
  const double g1 = table.gamma_ind[j], g2 = table.gamma_ind[j + 1];
  return 1.0 + g1 + (g1 - g2) * (r1 - diameter) / (r2 - r1);
}

double inverse_compressibility(const CorrelationTable &table) {
  return 1.0 - table.density * table.c_hat_zero;
}

void write_csv(std::ostream &os, const CorrelationTable &table) {
  std::ostringstream buf;
  buf << std::setprecision(12);
  buf << "r,c,h,g\n";
  for (std::size_t j = 0; j < table.grid.size(); ++j)
    buf << table.grid.r(j) << ',' << table.c[j] << ',' << table.h[j] << ',' << table.g[j] << '\n';
  os << buf.str();
}

} // namespace oz
