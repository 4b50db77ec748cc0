#include "ozthermo/error.hpp"
#include "ozthermo/oz_numeric.hpp"
#include "ozthermo/py_single.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <thread>

using namespace oz;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Solves are shared between tests; each takes a fraction of a second.
const CorrelationTable &solved(double eta) {
  static std::map<double, CorrelationTable> cache;
  auto it = cache.find(eta);
  if (it == cache.end()) it = cache.emplace(eta, solve_py_numeric(eta, 1.0, default_grid(1.0))).first;
  return it->second;
}

} // namespace

TEST(RadialGrid, Validation) {
  EXPECT_THROW(RadialGrid(128, 0.01), Error);
  EXPECT_THROW(RadialGrid(1000, 0.01), Error);
  EXPECT_THROW(RadialGrid(1024, 0.0), Error);
  EXPECT_THROW(RadialGrid(1024, -1.0), Error);
  const RadialGrid g(1024, 0.02);
  EXPECT_DOUBLE_EQ(g.r(0), 0.02);
  EXPECT_DOUBLE_EQ(g.r(1023), 1024 * 0.02);
  EXPECT_DOUBLE_EQ(g.k(0), pi / (1025 * 0.02));
  EXPECT_DOUBLE_EQ(g.extent(), 1024 * 0.02);
}

TEST(SineTransform, ZeroInput) {
  const RadialGrid g(256, 0.1);
  const std::vector<double> zero(256, 0.0);
  for (double v : sine_transform(zero, g)) EXPECT_EQ(v, 0.0);
}

TEST(SineTransform, MatchesBruteForce) {
  const RadialGrid g(512, 0.05);
  std::mt19937_64 rng(61);
  std::normal_distribution<double> noise;
  std::vector<double> f(g.size());
  for (auto &v : f) v = noise(rng);
  const auto fast = sine_transform(f, g);
  const auto slow = oracle::brute_force_sine_transform(f, g.dr());
  double scale = 0.0;
  for (double v : slow) scale = std::max(scale, std::abs(v));
  for (std::size_t m = 0; m < g.size(); ++m) EXPECT_NEAR(fast[m], slow[m], 1e-11 * scale);
}

TEST(SineTransform, RoundTrip) {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {256u, 1024u, 4096u}) {
    const RadialGrid g(n, 0.03);
    std::vector<double> f(n);
    const double a = u(rng), b = u(rng);
    for (std::size_t j = 0; j < n; ++j) {
      const double r = g.r(j);
      f[j] = a * std::exp(-r * r) + b * std::sin(3.0 * r) / (1.0 + r * r);
    }
    const auto back = inverse_sine_transform(sine_transform(f, g), g);
    for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(back[j], f[j], 1e-10);
  }
}

TEST(SineTransform, UnitCoreClosedForm) {
  // Core edge halfway between nodes so the node sum is a midpoint rule.
  const double R = 1.0;
  const RadialGrid g(4096, R / 100.5);
  std::vector<double> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = g.r(j) < R ? -1.0 : 0.0;
  const auto F = sine_transform(f, g);
  for (std::size_t m = 0; g.k(m) * R < 2.0; ++m)
    EXPECT_LE(rel(F[m], oracle::unit_core_transform(g.k(m), R)), 1e-4) << "k=" << g.k(m);
}

TEST(SineTransform, LengthMismatch) {
  const RadialGrid g(256, 0.1);
  const std::vector<double> wrong(100, 1.0);
  try {
    sine_transform(wrong, g);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::LengthMismatch);
  }
  const SineTransform t(g);
  std::vector<double> out(255);
  EXPECT_THROW(t.inverse(std::vector<double>(256, 0.0), out), Error);
}

TEST(SineTransform, ConcurrentUseIsDeterministic) {
  const RadialGrid g(4096, 0.01);
  const SineTransform t(g);
  std::vector<double> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = std::exp(-g.r(j));
  const auto ref = t.forward(f);
  std::vector<std::vector<double>> results(8);
  std::vector<std::thread> pool;
  for (auto &r : results) pool.emplace_back([&] { r = t.forward(f); });
  for (auto &th : pool) th.join();
  for (const auto &r : results) EXPECT_EQ(r, ref);
}

TEST(PyNumeric, Validation) {
  const auto g = default_grid(1.0);
  auto code = [&](auto &&fn) {
    try {
      fn();
    } catch (const Error &e) {
      return e.code();
    }
    return Errc::NotConverged;
  };
  EXPECT_EQ(code([&] { solve_py_numeric(0.0, 1.0, g); }), Errc::EtaOutOfRange);
  EXPECT_EQ(code([&] { solve_py_numeric(0.55, 1.0, g); }), Errc::EtaOutOfRange);
  EXPECT_EQ(code([&] { solve_py_numeric(0.3, 1.0, RadialGrid(256, 0.01)); }), Errc::InvalidGrid);
  PyNumericOptions bad;
  bad.mix = 0.0;
  EXPECT_EQ(code([&] { solve_py_numeric(0.3, 1.0, g, bad); }), Errc::InvalidGrid);
}

TEST(PyNumeric, IdealGasLimit) {
  const auto t = solve_py_numeric(1e-6, 1.0, default_grid(1.0));
  ASSERT_TRUE(t.converged);
  for (std::size_t j = 0; j < t.grid.size(); ++j) {
    const double r = t.grid.r(j);
    if (r < 1.0) {
      EXPECT_EQ(t.g[j], 0.0);
    }
    if (r > 1.0) {
      EXPECT_NEAR(t.g[j], 1.0, 1e-4);
    }
  }
  EXPECT_NEAR(contact_extrapolate(t, 1.0), 1.0, 1e-4);
}

TEST(PyNumeric, ClosureHoldsExactly) {
  for (double eta : {0.1, 0.3}) {
    const auto &t = solved(eta);
    for (std::size_t j = 0; j < t.grid.size(); ++j) {
      if (t.grid.r(j) > 1.0) {
        EXPECT_EQ(t.c[j], 0.0);
      }
      if (t.grid.r(j) < 1.0) {
        EXPECT_EQ(t.g[j], 0.0);
      }
    }
  }
}

TEST(PyNumeric, TableInvariants) {
  for (double eta : {0.1, 0.2, 0.3, 0.4}) {
    const auto &t = solved(eta);
    ASSERT_TRUE(t.converged);
    EXPECT_LE(t.final_change, 1e-8);
    const std::size_t n = t.grid.size();
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_GE(t.g[j], -1e-8);
      EXPECT_NEAR(t.h[j], t.g[j] - 1.0, 1e-15);
      if (j >= n - n / 10) {
        EXPECT_LE(std::abs(t.g[j] - 1.0), 1e-3);
      }
    }
  }
}

TEST(PyNumeric, ContactValues) {
  EXPECT_LE(rel(contact_extrapolate(solved(0.2), 1.0), 1.71875), 0.01);
  EXPECT_LE(rel(contact_extrapolate(solved(0.3), 1.0), contact_value(0.3)), 0.01);
  EXPECT_LE(rel(contact_extrapolate(solved(0.4), 1.0), 1.2 / 0.36), 0.015);
}

TEST(PyNumeric, Compressibility) {
  for (double eta : {0.1, 0.2, 0.3, 0.4}) {
    const double q = solve_py_single(eta).q_hat_zero;
    EXPECT_LE(rel(inverse_compressibility(solved(eta)), q * q), 0.01) << eta;
  }
  EXPECT_NEAR(std::pow(solve_py_single(0.3).q_hat_zero, 2), 10.66222, 1e-5);
}

TEST(PyNumeric, InteriorDirectCorrelation) {
  for (double eta : {0.1, 0.2, 0.3, 0.4}) {
    const auto &t = solved(eta);
    const auto s = solve_py_single(eta);
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < t.grid.size(); ++j) {
      const double r = t.grid.r(j);
      if (r <= 0.05 || r >= 0.95) continue;
      sum += std::pow(t.c[j] - direct_correlation(r, s), 2);
      ++count;
    }
    EXPECT_LE(std::sqrt(sum / count), 2e-2) << eta;
  }
}

TEST(PyNumeric, AnalyticDirectCorrelationSpotChecks) {
  const auto &t = solved(0.3);
  const std::size_t mid = 49; // r = 0.5
  ASSERT_DOUBLE_EQ(t.grid.r(mid), 0.5);
  EXPECT_NEAR(direct_correlation(0.5, solve_py_single(0.3)), t.c[mid], 1e-2);

  const auto dilute = solve_py_numeric(1e-3, 1.0, default_grid(1.0));
  EXPECT_NEAR(dilute.c[mid], -1.0, 1e-2);
  EXPECT_NEAR(direct_correlation(0.5, solve_py_single(1e-3)), dilute.c[mid], 1e-4);
}

TEST(PyNumeric, GridRefinement) {
  const double coarse = contact_extrapolate(solved(0.3), 1.0);
  const auto fine = solve_py_numeric(0.3, 1.0, RadialGrid(8192, 0.005));
  EXPECT_LE(rel(contact_extrapolate(fine, 1.0), coarse), 0.005);
}

TEST(PyNumeric, DampingIndependence) {
  PyNumericOptions opts;
  opts.tol = 1e-12;
  std::vector<CorrelationTable> tables;
  for (double mix : {0.2, 0.5, 0.8}) {
    opts.mix = mix;
    tables.push_back(solve_py_numeric(0.3, 1.0, default_grid(1.0), opts));
  }
  for (std::size_t k = 1; k < tables.size(); ++k)
    for (std::size_t j = 0; j < tables[0].c.size(); ++j)
      EXPECT_NEAR(tables[k].c[j], tables[0].c[j], 1e-8);
}

TEST(PyNumeric, NonConvergence) {
  PyNumericOptions opts;
  opts.max_iter = 3;
  try {
    solve_py_numeric(0.3, 1.0, default_grid(1.0), opts);
    FAIL();
  } catch (const ConvergenceError &e) {
    EXPECT_EQ(e.iterations(), 3u);
  }
  opts.throw_on_failure = false;
  const auto t = solve_py_numeric(0.3, 1.0, default_grid(1.0), opts);
  EXPECT_FALSE(t.converged);
  try {
    contact_extrapolate(t, 1.0);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::NotConverged);
  }
}

TEST(PyNumeric, CsvDump) {
  const auto &t = solved(0.1);
  std::ostringstream os;
  write_csv(os, t);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "r,c,h,g");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, t.grid.size());
  EXPECT_EQ(os.str().find('\r'), std::string::npos);
}
