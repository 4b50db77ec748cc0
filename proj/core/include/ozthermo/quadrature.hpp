#ifndef OZTHERMO_QUADRATURE_HPP
#define OZTHERMO_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace oz {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  // Integrates f over [lo, hi].
  template <class F> double integrate(F &&f, double lo, double hi) const {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return half * sum;
  }
};

// Nodes and weights by Newton iteration on the Legendre recurrence.
GaussLegendre gauss_legendre(std::size_t points);

} // namespace oz

#endif
