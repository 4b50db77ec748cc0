#ifndef OZTHERMO_OZ_NUMERIC_HPP
#define OZTHERMO_OZ_NUMERIC_HPP

#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

namespace oz {

// Uniform radial grid r_j = j dr (j = 1..n) and its sine-transform partner
// k_m = m pi / ((n + 1) dr) (m = 1..n). Indices below are zero-based.
class RadialGrid {
public:
  // Throws InvalidGrid unless n >= 256 is a power of two and dr > 0.
  RadialGrid(std::size_t n, double dr);

  std::size_t size() const noexcept { return n_; }
  double dr() const noexcept { return dr_; }
  double dk() const noexcept;
  double r(std::size_t j) const noexcept { return static_cast<double>(j + 1) * dr_; }
  double k(std::size_t m) const noexcept { return static_cast<double>(m + 1) * dk(); }
  double extent() const noexcept { return static_cast<double>(n_) * dr_; }

private:
  std::size_t n_;
  double dr_;
};

// Three-dimensional Fourier transform of a radial function through a type-I
// discrete sine transform:
//   F(k_m) = (4 pi dr / k_m) sum_j r_j f(r_j) sin(k_m r_j)
//   f(r_j) = (dk / (2 pi^2 r_j)) sum_m k_m F(k_m) sin(k_m r_j)
// The pair is exactly inverse on the grid. A plan is reusable and may be
// shared between threads for execution; planning itself is serialized.
class SineTransform {
public:
  explicit SineTransform(const RadialGrid &grid);
  ~SineTransform();
  SineTransform(SineTransform &&) noexcept;
  SineTransform &operator=(SineTransform &&) noexcept;
  SineTransform(const SineTransform &) = delete;
  SineTransform &operator=(const SineTransform &) = delete;

  const RadialGrid &grid() const noexcept { return grid_; }

  // Throw LengthMismatch when sizes differ from the grid.
  void forward(std::span<const double> f, std::span<double> out) const;
  void inverse(std::span<const double> F, std::span<double> out) const;
  std::vector<double> forward(std::span<const double> f) const;
  std::vector<double> inverse(std::span<const double> F) const;

private:
  struct Plan;
  RadialGrid grid_;
  std::unique_ptr<Plan> plan_;
};

std::vector<double> sine_transform(std::span<const double> f, const RadialGrid &grid);
std::vector<double> inverse_sine_transform(std::span<const double> F, const RadialGrid &grid);

struct PyNumericOptions {
  double mix = 0.5;                   // Picard damping in (0, 1]
  double tol = 1e-8;                  // max_j |c_new - c_old|
  std::size_t max_iter = 100000;
  bool throw_on_failure = true;       // false: return an unconverged table
};

// Converged Percus-Yevick hard-sphere correlation functions on a grid.
struct CorrelationTable {
  RadialGrid grid{256, 1.0};
  double eta = 0.0;
  double diameter = 1.0;
  double density = 0.0;
  std::vector<double> c;         // direct correlation on the r grid
  std::vector<double> gamma_ind; // indirect correlation h - c
  std::vector<double> h;
  std::vector<double> g;
  std::vector<double> c_hat;     // on the k grid
  double c_hat_zero = 0.0;       // 4 pi \int r^2 c(r) dr
  bool converged = false;
  std::size_t iterations = 0;
  double final_change = 0.0;
};

// Default discretization: 4096 points at dr = R/100.
RadialGrid default_grid(double diameter = 1.0);

// Picard iteration of the Ornstein-Zernike relation in the indirect
// correlation form, gamma_hat = rho c_hat^2 / (1 - rho c_hat), closed by
// c = -1 - gamma inside the core and c = 0 outside. The node straddling the
// core boundary carries the core fraction of its cell, so the jump of c at R
// is integrated to second order.
// Throws EtaOutOfRange (needs 0 < eta <= 0.5), InvalidGrid (grid shorter than
// 20 R), PoleEncountered, or ConvergenceError.
CorrelationTable solve_py_numeric(double eta, double diameter, const RadialGrid &grid,
                                  const PyNumericOptions &options = {});

// g(R+) = 1 + gamma(R), linearly extrapolated from the first two nodes
// outside the core. Throws NotConverged on an unconverged table.
double contact_extrapolate(const CorrelationTable &table, double diameter);

// 1 - rho c_hat(0), the inverse reduced compressibility.
double inverse_compressibility(const CorrelationTable &table);

// CSV with header "r,c,h,g", one row per node, 12 significant digits.
void write_csv(std::ostream &os, const CorrelationTable &table);

} // namespace oz

#endif
