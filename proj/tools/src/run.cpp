#include "run.hpp"

#include "ozthermo/error.hpp"
#include "ozthermo/msa.hpp"
#include "ozthermo/oz_numeric.hpp"
#include "ozthermo/py_mixture.hpp"
#include "ozthermo/py_single.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

namespace oz::cli {

namespace {

using Rows = std::vector<std::string>;

// One CSV line, numbers at 12 significant digits.
class Line {
public:
  Line() { os_.precision(12); }
  Line &operator<<(double v) { return field(v); }
  Line &operator<<(std::size_t v) { return field(v); }
  Line &operator<<(const std::string &v) { return field(v); }
  std::string str() const { return os_.str() + '\n'; }

private:
  template <class T> Line &field(const T &v) {
    if (!first_) os_ << ',';
    first_ = false;
    os_ << v;
    return *this;
  }
  std::ostringstream os_;
  bool first_ = true;
};

const char *header_for(Command c) {
  switch (c) {
  case Command::Eos: return "eta,z_compressibility,z_virial,z_carnahan_starling,contact_value\n";
  case Command::Mix: return "eta,species,z_bmcsl,a_ex,ln_gamma_hs\n";
  case Command::Msa:
    return "alpha_sq,eta,species,gamma,p_n,omega,n_i,a_i,delta_e,delta_a,ln_gamma_elec,ln_gamma_hs,"
           "ln_gamma_total,ln_gamma_mean_ionic\n";
  case Command::OzSolve:
    return "eta,iterations,contact_numeric,contact_analytic,contact_rel_error,inv_compress_numeric,"
           "inv_compress_analytic,inv_compress_rel_error,c_interior_rms\n";
  case Command::Sweep: break;
  }
  return "";
}

double required_eta(const RunConfig &cfg) {
  if (!cfg.eta) throw ConfigParseError(command_name(cfg.command) + " needs eta (--eta or config key eta)");
  return *cfg.eta;
}

Mixture build_mixture(const RunConfig &cfg, bool keep_charges) {
  std::vector<Species> species = cfg.species;
  if (!keep_charges)
    for (auto &s : species) s.valence = 0;
  Mixture m = make_mixture(std::move(species), keep_charges ? cfg.alpha_sq : 0.0, cfg.label);
  if (cfg.eta) m = with_packing_fraction(m, *cfg.eta);
  return m;
}

Rows eos_rows(const RunConfig &cfg) {
  const double eta = required_eta(cfg);
  Line l;
  l << eta << z_compressibility(eta) << z_virial(eta) << z_carnahan_starling(eta) << contact_value(eta);
  return {l.str()};
}

Rows mix_rows(const RunConfig &cfg) {
  const Mixture m = build_mixture(cfg, false);
  const MixtureThermo th = mixture_thermo(m);
  const double eta = moments(m).eta;
  Rows rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Line l;
    l << eta << i + 1 << th.z_bmcsl << th.a_ex_per_particle << th.ln_gamma_hs[i];
    rows.push_back(l.str());
  }
  return rows;
}

Rows msa_rows(const RunConfig &cfg) {
  const Mixture m = build_mixture(cfg, true);
  MsaOptions opts;
  opts.allow_neutral = cfg.allow_neutral;
  const MsaSolution sol = solve_gamma(m, opts);
  const double de = internal_energy(sol, m);
  const double da = helmholtz_charging(m, 32, opts);
  const std::vector<double> elec = ln_gamma_elec(sol, m);
  const std::vector<double> hs = ln_gamma_hs(m);
  std::vector<double> total(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) total[i] = elec[i] + hs[i];
  const double mean = mean_ionic(m, total);
  const double eta = moments(m).eta;

  Rows rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Line l;
    l << m.alpha_sq() << eta << i + 1 << sol.gamma << sol.p_n << sol.omega << sol.n_coeff[i] << sol.a_coeff[i]
      << de << da << elec[i] << hs[i] << total[i] << mean;
    rows.push_back(l.str());
  }
  return rows;
}

Rows oz_rows(const RunConfig &cfg, bool dump_table) {
  const double eta = required_eta(cfg);
  const double R = cfg.diameter;
  if (!(R > 0.0)) throw Error(Errc::NonPositiveDiameter, "diameter must be positive");
  const RadialGrid grid(cfg.grid.n, cfg.grid.dr.value_or(R / 100.0));
  PyNumericOptions opts;
  if (cfg.grid.tol) opts.tol = *cfg.grid.tol;
  const CorrelationTable t = solve_py_numeric(eta, R, grid, opts);

  if (dump_table && !cfg.table_path.empty()) {
    std::ofstream f(cfg.table_path, std::ios::binary);
    if (!f) throw ConfigParseError("cannot write table to '" + cfg.table_path + "'");
    write_csv(f, t);
  }

  const PySingleSolution s = solve_py_single(eta, R);
  const double g_num = contact_extrapolate(t, R);
  const double g_ana = contact_value(eta);
  const double k_num = inverse_compressibility(t);
  const double k_ana = s.q_hat_zero * s.q_hat_zero;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double r = grid.r(j);
    if (r <= 0.05 * R || r >= 0.95 * R) continue;
    sum += std::pow(t.c[j] - direct_correlation(r, s), 2);
    ++count;
  }
  const double rms = count > 0 ? std::sqrt(sum / static_cast<double>(count)) : 0.0;

  Line l;
  l << eta << t.iterations << g_num << g_ana << std::abs(g_num - g_ana) / g_ana << k_num << k_ana
    << std::abs(k_num - k_ana) / k_ana << rms;
  return {l.str()};
}

Rows rows_for(const RunConfig &cfg, bool in_sweep) {
  switch (cfg.command) {
  case Command::Eos: return eos_rows(cfg);
  case Command::Mix: return mix_rows(cfg);
  case Command::Msa: return msa_rows(cfg);
  case Command::OzSolve: return oz_rows(cfg, !in_sweep);
  case Command::Sweep: break;
  }
  throw ConfigParseError("sweep cannot be nested");
}

std::vector<RunConfig> sweep_points(const RunConfig &cfg) {
  if (!cfg.sweep) throw ConfigParseError("sweep needs a [sweep] section");
  const SweepSpec &sw = *cfg.sweep;
  if (sw.command == Command::Sweep) throw ConfigParseError("sweep command must be eos, mix, msa or oz-solve");
  const bool over_eta = sw.variable == "eta";
  if (!over_eta && sw.variable != "alpha_sq")
    throw ConfigParseError("sweep variable must be eta or alpha_sq, got '" + sw.variable + "'");
  if (!over_eta && sw.command != Command::Msa) throw ConfigParseError("alpha_sq sweeps apply to msa only");

  double start = 0.0, stop = 0.55;
  if (!over_eta && (!sw.start || !sw.stop)) throw ConfigParseError("alpha_sq sweep needs start and stop");
  if (sw.start) start = *sw.start;
  if (sw.stop) stop = *sw.stop;
  const std::size_t steps = sw.steps.value_or(0);
  if (steps < 2) throw ConfigParseError("sweep needs steps >= 2");
  if (!(start < stop)) throw ConfigParseError("sweep needs start < stop");

  std::vector<RunConfig> points;
  for (std::size_t k = 0; k < steps; ++k) {
    const double v = k + 1 == steps ? stop : start + (stop - start) * static_cast<double>(k) / (steps - 1);
    RunConfig p = cfg;
    p.command = sw.command;
    p.sweep.reset();
    if (over_eta)
      p.eta = v;
    else
      p.alpha_sq = v;
    points.push_back(std::move(p));
  }
  return points;
}

// Evaluates points concurrently; output order and the reported error follow
// point order regardless of scheduling.
Rows run_sweep(const RunConfig &cfg) {
  const std::vector<RunConfig> points = sweep_points(cfg);
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, points.size()));

  std::vector<Rows> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < points.size(); k = next++) {
      try {
        results[k] = rows_for(points[k], true);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto &e : errors)
    if (e) std::rethrow_exception(e);

  Rows rows;
  for (auto &r : results) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

} // namespace

void run(const RunConfig &cfg, std::ostream &out) {
  const bool sweep = cfg.command == Command::Sweep;
  const Rows rows = sweep ? run_sweep(cfg) : rows_for(cfg, false);
  std::string text = header_for(sweep ? cfg.sweep->command : cfg.command);
  for (const auto &r : rows) text += r;
  out << text;
}

int main_entry(int argc, char **argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Hard-sphere and primitive-model electrolyte thermodynamics", "oz-thermo"};
  std::string command, config_path, out_path;
  std::optional<double> eta, grid_dr, tol;
  std::optional<std::size_t> steps, grid_n;
  bool allow_neutral = false, json = false;
  app.add_option("command", command, "eos | mix | msa | oz-solve | sweep")->required();
  app.add_option("--config", config_path, "system definition (key = value sections, or JSON with --json)");
  app.add_option("--out", out_path, "CSV output file (default: standard output)");
  app.add_option("--eta", eta, "packing fraction");
  app.add_option("--steps", steps, "number of sweep points");
  app.add_option("--grid-n", grid_n, "oz-solve grid points (power of two)");
  app.add_option("--grid-dr", grid_dr, "oz-solve grid spacing");
  app.add_option("--tol", tol, "oz-solve convergence tolerance");
  app.add_flag("--allow-neutral", allow_neutral, "let msa accept uncharged systems (Gamma = 0)");
  app.add_flag("--json", json, "read --config as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "oz-thermo: ConfigParseError: " << one_line(e.what()) << '\n';
    return exit_config;
  }

  try {
    RunConfig cfg;
    cfg.command = parse_command(command);
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigParseError("cannot open config '" + config_path + "'");
      if (json)
        parse_json(in, cfg);
      else
        parse_ini(in, cfg);
    } else if (json) {
      throw ConfigParseError("--json needs --config");
    }
    if (eta) cfg.eta = *eta;
    if (steps) {
      if (!cfg.sweep) cfg.sweep.emplace();
      cfg.sweep->steps = *steps;
    }
    if (grid_n) cfg.grid.n = *grid_n;
    if (grid_dr) cfg.grid.dr = *grid_dr;
    if (tol) cfg.grid.tol = *tol;
    cfg.allow_neutral = allow_neutral;
    cfg.output_path = out_path;
    cfg.threads = threads_from_environment();

    if (cfg.output_path.empty()) {
      run(cfg, out);
    } else {
      std::ostringstream buf;
      run(cfg, buf);
      std::ofstream f(cfg.output_path, std::ios::binary);
      if (!f) throw ConfigParseError("cannot write '" + cfg.output_path + "'");
      f << buf.str();
    }
    out.flush();
    return exit_ok;
  } catch (const ConfigParseError &e) {
    err << "oz-thermo: ConfigParseError: " << one_line(e.what()) << '\n';
    return exit_config;
  } catch (const Error &e) {
    err << "oz-thermo: " << one_line(e.what()) << '\n';
    return is_validation_error(e.code()) ? exit_validation : exit_solver;
  } catch (const std::exception &e) {
    err << "oz-thermo: " << one_line(e.what()) << '\n';
    return exit_solver;
  }
}

} // namespace oz::cli
