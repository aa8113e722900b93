#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrinv/app/verify.hpp"
#include "lrinv/config.hpp"
#include "lrinv/io/csv.hpp"
#include "lrinv/observables/current.hpp"
#include "lrinv/propagator/propagator.hpp"
#include "lrinv/solutions/ladder.hpp"
#include "lrinv/solutions/oscillator.hpp"
#include "lrinv/symmetry/quantization.hpp"

namespace lrinv::app {

/// Bad flags or flag combinations; reported with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

struct GlobalOptions {
  std::optional<std::string> config;
  std::string out_dir = ".";
  std::optional<std::string> units;
  bool json = false;
};

/// The configuration file, or the natural-units default for `geometry`,
/// with `--units` applied before symbolic constants are resolved. Operator
/// overrides are parsed here so that bad text is a configuration error.
inline SystemConfig load_run_config(const GlobalOptions& g, Geometry geometry = Geometry::electric_1d) {
  nlohmann::json doc;
  if (g.config) {
    std::ifstream in(*g.config);
    if (!in) throw ConfigError("", "cannot open config file '" + *g.config + "'");
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
  } else {
    doc = to_json(natural_config(geometry, geometry == Geometry::parallel_eb ? 1.0 : 0.0));
  }
  if (g.units) {
    if (!doc.is_object()) throw ConfigError("", "configuration must be a JSON object");
    doc["units"] = *g.units;
  }
  SystemConfig cfg;
  try {
    cfg = build_config(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("", std::string("wrong value type: ") + e.what());
  }
  try {
    if (cfg.hamiltonian_1d_override) algebra::parse_operator(*cfg.hamiltonian_1d_override);
    if (cfg.hamiltonian_parallel_override) algebra::parse_operator(*cfg.hamiltonian_parallel_override);
  } catch (const ParseError& e) {
    throw ConfigError("hamiltonian", std::string("cannot parse Hamiltonian override: ") + e.what());
  }
  return cfg;
}

namespace detail {

inline std::filesystem::path output_path(const GlobalOptions& g, const std::string& name) {
  std::filesystem::create_directories(g.out_dir);
  return std::filesystem::path(g.out_dir) / name;
}

inline void save_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

inline void config_metadata(io::CsvTable& t, const SystemConfig& cfg) {
  t.meta("units", to_string(cfg.units.kind));
  t.meta("geometry", to_string(cfg.fields.geometry));
  t.meta("hbar", cfg.hbar());
  t.meta("m", cfg.mass());
  t.meta("q", cfg.charge());
  t.meta("E", cfg.electric());
  t.meta("B", cfg.fields.magnetic);
  t.meta("L", cfg.box_length);
}

inline std::string grid_text(const Grid1D& g) {
  return io::format_double(g.length) + "/" + std::to_string(g.points) + "/" +
         (g.boundary == Boundary::periodic ? "periodic" : "dirichlet");
}

inline nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); }

}  // namespace detail

// ---------------------------------------------------------------- verify

inline nlohmann::json to_json(const VerifyReport& r, const SystemConfig& cfg) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j;
    j["criterion"] = c.criterion;
    j["group"] = c.group;
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["relation"] = to_string(c.relation);
    j["tolerance"] = c.tolerance;
    j["measured"] = detail::number_or_null(c.measured);
    j["status"] = c.pass ? "pass" : "fail";
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  nlohmann::json doc;
  doc["checks"] = std::move(checks);
  doc["passed"] = r.checks.size() - r.failures();
  doc["failed"] = r.failures();
  doc["config"] = lrinv::to_json(cfg);
  return doc;
}

inline void print_table(std::ostream& out, const VerifyReport& r) {
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.criterion << "] " << std::left << std::setw(13)
        << c.group << std::setw(52) << c.name << std::right << ' ' << io::format_double(c.measured) << ' '
        << to_string(c.relation) << ' ' << io::format_double(c.tolerance) << "  | " << c.anchor;
    if (!c.note.empty()) out << "  (" << c.note << ')';
    out << '\n';
  }
  out << r.checks.size() - r.failures() << " passed, " << r.failures() << " failed\n";
}

inline int cmd_verify(const GlobalOptions& g, const std::vector<std::string>& filters, std::ostream& out) {
  const auto cfg = load_run_config(g);
  std::set<std::string> wanted;
  for (const auto& f : filters) {
    if (!known_filter(f)) throw UsageError("unknown filter '" + f + "'");
    wanted.insert(f);
  }
  const auto report = run_verify(cfg, wanted);
  const auto doc = to_json(report, cfg);
  detail::save_json(detail::output_path(g, "verify.json"), doc);
  if (g.json) out << doc.dump(2) << '\n';
  else print_table(out, report);
  return report.all_pass() ? exit_ok : exit_check_failed;
}

// ---------------------------------------------------------------- evolve1d

struct Evolve1DOptions {
  double dt = 0.0;  // 0: 1e-3 of the natural time
  std::size_t steps = 1000;
  std::size_t cadence = 100;
  std::size_t points = 2048;
  double length = 0.0;  // 0: 30 natural lengths
  double width = 0.0;   // 0: one natural length
  double center = 0.0;
  double k0 = 0.0;
  bool richardson = false;
  bool profile = false;
};

inline io::CsvTable profile_table(const Field1D& f, const SystemConfig& cfg) {
  io::CsvTable t;
  t.columns = {"x", "t", "re", "im", "abs2", "J", "rho", "v"};
  const auto j = probability_current_1d(f, cfg);
  for (std::size_t i = 0; i < f.size(); ++i)
    t.add_row({io::format_double(j.x[i]), io::format_double(f.time), io::format_double(f[i].real()),
               io::format_double(f[i].imag()), io::format_double(std::norm(f[i])), io::format_double(j.current[i]),
               io::format_double(j.density[i]), io::format_cell(j.velocity[i])});
  return t;
}

inline int cmd_evolve1d(const GlobalOptions& g, const Evolve1DOptions& o, std::ostream& out) {
  const auto cfg = load_run_config(g);
  if (cfg.fields.geometry != Geometry::electric_1d) throw UsageError("evolve1d needs an electric_1d configuration");
  const Scales sc = scales_of(cfg);
  const double width = o.width > 0 ? o.width : sc.length;
  const Grid1D grid(o.length > 0 ? o.length : 30 * sc.length, o.points, Boundary::dirichlet);
  const EvolutionSpec spec{o.dt > 0 ? o.dt : 1e-3 * sc.time, o.steps, o.cadence, Method::cn_1d};
  spec.validate();
  const auto f0 = sample(detail::gaussian_packet(width, o.center, o.k0), grid, 0.0);
  const auto ev = evolve(f0, spec, cfg);

  io::CsvTable t;
  t.meta("command", "evolve1d");
  t.meta("method", to_string(spec.method));
  t.meta("dt", spec.dt);
  t.meta("steps", std::to_string(spec.steps));
  t.meta("cadence", std::to_string(spec.cadence));
  t.meta("grid", detail::grid_text(grid));
  t.meta("initial", "gaussian width=" + io::format_double(width) + " center=" + io::format_double(o.center) +
                        " k0=" + io::format_double(o.k0));
  detail::config_metadata(t, cfg);
  t.columns = ev.record.columns;
  // a zero-step run has no evolution to report
  if (spec.steps > 0)
    for (const auto& row : ev.record.rows) t.add_row(row);
  t.save(detail::output_path(g, "evolve1d.csv").string());

  nlohmann::json summary;
  summary["steps"] = spec.steps;
  summary["dt"] = spec.dt;
  summary["final_time"] = ev.final.time;
  const auto norms = ev.record.series("norm");
  double drift = 0.0;
  for (double v : norms) drift = std::max(drift, std::abs(v - norms.front()));
  summary["final_norm"] = norms.back();
  summary["max_norm_drift"] = drift;
  if (ev.record.rows.size() >= 3) summary["newton_max_residual"] = newton_check(ev.record, cfg).max_residual;
  if (o.richardson) {
    try {
      const double horizon = spec.steps > 0 ? spec.dt * static_cast<double>(spec.steps) : sc.time;
      summary["order"] = estimate_order(f0, horizon, cfg);
    } catch (const AlreadyConverged& e) {
      summary["order"] = nullptr;
      summary["order_note"] = e.what();
    }
  }
  if (o.profile) profile_table(ev.final, cfg).save(detail::output_path(g, "evolve1d_profile.csv").string());
  detail::save_json(detail::output_path(g, "evolve1d.json"), summary);
  if (g.json) out << summary.dump(2) << '\n';
  else out << "evolve1d: " << spec.steps << " steps, final norm " << io::format_double(norms.back()) << '\n';
  return exit_ok;
}

// ---------------------------------------------------------------- evolve-landau

struct EvolveLandauOptions {
  int level = 0;
  int wavenumber = 1;  // z mode index fixing δy on the periodic grid
  double periods = 10.0;
  std::size_t steps_per_period = 512;
  std::size_t cadence = 0;  // 0: once per period
  std::size_t ny = 256;
  std::size_t nz = 32;
  double ly = 0.0;  // 0: 24 magnetic lengths
  double lz = 0.0;  // 0: 8 magnetic lengths
  bool richardson = false;
};

inline int cmd_evolve_landau(const GlobalOptions& g, const EvolveLandauOptions& o, std::ostream& out) {
  const auto cfg = load_run_config(g, Geometry::parallel_eb);
  if (cfg.fields.geometry != Geometry::parallel_eb) throw UsageError("evolve-landau needs a parallel_eb configuration");
  const double wc = checked_cyclotron_frequency(cfg);
  const double ell = std::sqrt(cfg.hbar() / (cfg.mass() * std::abs(wc)));
  const double period = 2 * std::numbers::pi / std::abs(wc);
  const Grid2D grid{Grid1D(o.ly > 0 ? o.ly : 24 * ell, o.ny), Grid1D(o.lz > 0 ? o.lz : 8 * ell, o.nz)};
  const double dy = 2 * std::numbers::pi * cfg.hbar() * o.wavenumber / (cfg.mass() * wc * grid.z.length);
  if (!(o.periods >= 0) || o.steps_per_period == 0) throw UsageError("periods and steps per period must be positive");
  const std::size_t steps = static_cast<std::size_t>(std::llround(o.periods * static_cast<double>(o.steps_per_period)));
  const EvolutionSpec spec{period / static_cast<double>(o.steps_per_period), steps,
                           o.cadence ? o.cadence : o.steps_per_period, Method::split_yz};
  spec.validate();
  const auto sol = make_oscillator_family(Family::parallel_family_y, o.level, dy, cfg);
  const auto f0 = sample(sol, grid, 0.0);
  const auto ev = evolve(f0, spec, cfg, &sol);

  io::CsvTable t;
  t.meta("command", "evolve-landau");
  t.meta("method", to_string(spec.method));
  t.meta("dt", spec.dt);
  t.meta("steps", std::to_string(spec.steps));
  t.meta("cadence", std::to_string(spec.cadence));
  t.meta("grid_y", detail::grid_text(grid.y));
  t.meta("grid_z", detail::grid_text(grid.z));
  t.meta("initial", std::string(to_string(Family::parallel_family_y)) + " n=" + std::to_string(o.level) +
                        " dy=" + io::format_double(dy));
  detail::config_metadata(t, cfg);
  t.columns = ev.record.columns;
  if (spec.steps > 0)
    for (const auto& row : ev.record.rows) t.add_row(row);
  t.save(detail::output_path(g, "evolve_landau.csv").string());

  nlohmann::json summary;
  summary["steps"] = spec.steps;
  summary["dt"] = spec.dt;
  summary["cyclotron_period"] = period;
  summary["landau_level"] = landau_level(o.level, cfg);
  const auto fid = ev.record.series("fidelity");
  summary["min_fidelity"] = *std::min_element(fid.begin(), fid.end());
  summary["final_energy"] = ev.record.rows.back()[ev.record.column_index("energy")];
  if (o.richardson) {
    try {
      const double horizon = spec.steps > 0 ? spec.dt * static_cast<double>(spec.steps) : period;
      summary["order"] = estimate_order(f0, horizon, cfg);
    } catch (const AlreadyConverged& e) {
      summary["order"] = nullptr;
      summary["order_note"] = e.what();
    }
  }
  detail::save_json(detail::output_path(g, "evolve_landau.json"), summary);
  if (g.json) out << summary.dump(2) << '\n';
  else out << "evolve-landau: " << spec.steps << " steps, min fidelity " << io::format_double(fid.empty() ? 1.0 : summary["min_fidelity"].get<double>()) << '\n';
  return exit_ok;
}

// ---------------------------------------------------------------- quantize

/// Unset values default to δx = h/(qEτ), so that n_real = δt/τ with τ the
/// electric time, and a scan of δt from τ/100 to 10τ.
struct QuantizeOptions {
  std::optional<double> dx;
  std::optional<double> dt_min;
  std::optional<double> dt_max;
  std::size_t dt_steps = 1000;
  double tol = 1e-8;
};

inline int cmd_quantize(const GlobalOptions& g, const QuantizeOptions& o, std::ostream& out) {
  const auto cfg = load_run_config(g);
  if (cfg.force() == 0.0) throw UsageError("quantize needs a nonzero electric force");
  const double tau = electric_time(cfg);
  const double dx = o.dx ? *o.dx : (cfg.displacements.dx != 0.0 ? cfg.displacements.dx : cfg.units.h() / (cfg.force() * tau));
  const double dt_min = o.dt_min.value_or(tau / 100), dt_max = o.dt_max.value_or(10 * tau);
  if (o.dt_steps == 0 || !(dt_max >= dt_min)) throw UsageError("empty scan range");
  if (!(o.tol > 0.0)) throw UsageError("tolerance must be positive");
  const auto rows = quantization_scan(dx, dt_min, dt_max, o.dt_steps, cfg, o.tol);
  const bool si = cfg.units.kind == UnitKind::si;

  io::CsvTable t;
  t.meta("command", "quantize");
  t.meta("dx", dx);
  t.meta("tol", o.tol);
  t.meta("resistance_quantum", resistance_quantum(cfg));
  detail::config_metadata(t, cfg);
  t.columns = {"dt", "n_real", "n", "is_quantized", "V", "I", "R", "R_over_RK", "phase_re", "phase_im", "error"};
  if (si) t.columns.insert(t.columns.begin() + 7, "R_ohm");
  nlohmann::json hits = nlohmann::json::array();
  std::size_t errors = 0, phase_errors = 0;
  for (const auto& r : rows) {
    std::vector<std::string> cells{io::format_double(r.dt)};
    if (r.report) {
      const auto& q = *r.report;
      cells.insert(cells.end(), {io::format_double(q.n_real), std::to_string(q.n), q.is_quantized ? "1" : "0",
                                 io::format_double(q.voltage), io::format_double(q.current),
                                 io::format_double(q.resistance)});
      if (si) cells.push_back(io::format_double(q.resistance));
      // the phase can fail on its own when the sampled phases exceed double precision
      cells.insert(cells.end(), {io::format_double(q.resistance_in_klitzing),
                                 r.phase ? io::format_double(r.phase->real()) : "",
                                 r.phase ? io::format_double(r.phase->imag()) : "", r.error});
      if (!r.phase) ++phase_errors;
      if (q.is_quantized) hits.push_back({{"dt", r.dt}, {"n", q.n}, {"resistance", q.resistance}});
    } else {
      ++errors;
      cells.resize(t.columns.size() - 1);
      cells.push_back(r.error);
    }
    t.add_row(std::move(cells));
  }
  t.save(detail::output_path(g, "quantize.csv").string());

  nlohmann::json summary;
  summary["dx"] = dx;
  summary["rows"] = rows.size();
  summary["error_rows"] = errors;
  summary["phase_error_rows"] = phase_errors;
  summary["hit_count"] = hits.size();
  summary["hits"] = std::move(hits);
  summary["tol"] = o.tol;
  summary["resistance_quantum"] = resistance_quantum(cfg);
  detail::save_json(detail::output_path(g, "quantize.json"), summary);
  if (g.json) out << summary.dump(2) << '\n';
  else out << "quantize: " << rows.size() << " rows, " << summary["hit_count"].get<std::size_t>() << " integer hits\n";
  return exit_ok;
}

// ---------------------------------------------------------------- eval

struct EvalOptions {
  std::string solution = "phi";
  int n = 0;
  int order = 10;
  std::optional<double> shift;  // δt for psi/taylor, δy or δz for the families
  std::vector<double> times{0.0};
  std::size_t points = 256;
  double length = 0.0;  // 0: box length
  std::string boundary = "periodic";
  std::size_t nz = 32;
  double lz = 0.0;
  double x = 0.0;  // slice position of three-dimensional solutions
  std::vector<std::string> a;
  std::vector<std::string> abar;
  bool current = false;
};

inline const std::vector<std::string>& solution_names() {
  static const std::vector<std::string> names{"phi",      "psi",      "ladder", "taylor", "family-y",
                                              "family-z", "full-y",   "full-z", "superposition"};
  return names;
}

/// "re" or "re:im".
inline cplx parse_coefficient(const std::string& s) {
  const auto colon = s.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return re;
    }
    const std::string a = s.substr(0, colon), b = s.substr(colon + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::logic_error&) {
    throw UsageError("bad coefficient '" + s + "' (expected re or re:im)");
  }
}

inline int cmd_eval(const GlobalOptions& g, const EvalOptions& o, std::ostream& out) {
  const bool parallel = o.solution.rfind("family", 0) == 0 || o.solution.rfind("full", 0) == 0 || o.solution == "superposition";
  const auto cfg = load_run_config(g, parallel ? Geometry::parallel_eb : Geometry::electric_1d);
  if (o.boundary != "periodic" && o.boundary != "dirichlet") throw UsageError("boundary must be periodic or dirichlet");
  if (o.times.empty()) throw UsageError("no evaluation times given");
  const Boundary boundary = o.boundary == "periodic" ? Boundary::periodic : Boundary::dirichlet;
  const double length = o.length > 0 ? o.length : cfg.box_length;

  io::CsvTable t;
  t.meta("command", "eval");
  t.meta("solution", o.solution);
  detail::config_metadata(t, cfg);
  auto cell = [](double v) { return io::format_double(v); };

  if (!parallel) {
    if (cfg.fields.geometry != Geometry::electric_1d) throw UsageError(o.solution + " needs an electric_1d configuration");
    const double dt = o.shift ? *o.shift : cfg.displacements.dt;
    Solution1D s;
    if (o.solution == "phi") s = make_phi_electric(cfg);
    else if (o.solution == "psi") s = make_psi_electric_shifted(cfg, dt);
    else if (o.solution == "ladder") s = make_ladder_state(o.n, cfg);
    else if (o.solution == "taylor") {
      auto deep = cfg;
      deep.ladder_depth = std::max(cfg.ladder_depth, o.order);
      s = make_superposition_taylor(deep, dt, o.order);
    } else throw UsageError("unknown solution '" + o.solution + "'");
    const Grid1D grid(length, o.points, boundary);
    t.meta("family", to_string(s.family));
    t.meta("label", s.label);
    t.meta("grid", detail::grid_text(grid));
    t.meta("shift_dt", dt);
    if (o.solution == "ladder") t.meta("j", std::to_string(o.n));
    if (o.solution == "taylor") t.meta("order", std::to_string(o.order));
    t.columns = {"x", "t", "re", "im", "abs2"};
    if (o.current) t.columns.insert(t.columns.end(), {"J", "rho", "v"});
    for (double time : o.times) {
      const auto f = sample(s, grid, time);
      std::optional<CurrentProfile> j;
      if (o.current) j = s.gradient ? probability_current_1d(s, grid, time, cfg) : probability_current_1d(f, cfg);
      for (std::size_t i = 0; i < grid.points; ++i) {
        std::vector<std::string> row{cell(grid.coordinate(i)), cell(time), cell(f[i].real()), cell(f[i].imag()),
                                     cell(std::norm(f[i]))};
        if (j) row.insert(row.end(), {cell(j->current[i]), cell(j->density[i]), io::format_cell(j->velocity[i])});
        t.add_row(std::move(row));
      }
    }
  } else {
    if (o.current) throw UsageError("--current applies to one-dimensional solutions");
    if (cfg.fields.geometry != Geometry::parallel_eb) throw UsageError(o.solution + " needs a parallel_eb configuration");
    const double wc = checked_cyclotron_frequency(cfg);
    const double ell = std::sqrt(cfg.hbar() / (cfg.mass() * std::abs(wc)));
    const Grid2D grid{Grid1D(o.length > 0 ? o.length : 24 * ell, o.points, boundary),
                      Grid1D(o.lz > 0 ? o.lz : 8 * ell, o.nz)};
    t.meta("grid_y", detail::grid_text(grid.y));
    t.meta("grid_z", detail::grid_text(grid.z));
    if (o.solution == "family-y" || o.solution == "family-z") {
      const Family fam = o.solution == "family-y" ? Family::parallel_family_y : Family::parallel_family_z;
      const double shift = o.shift ? *o.shift : (fam == Family::parallel_family_y ? cfg.displacements.dy : cfg.displacements.dz);
      const auto s = make_oscillator_family(fam, o.n, shift, cfg);
      t.meta("family", to_string(fam));
      t.meta("n", std::to_string(o.n));
      t.meta("shift", shift);
      t.columns = {"y", "z", "t", "re", "im", "abs2"};
      for (double time : o.times) {
        const auto f = sample(s, grid, time);
        for (std::size_t iy = 0; iy < grid.y.points; ++iy)
          for (std::size_t iz = 0; iz < grid.z.points; ++iz) {
            const cplx v = f[grid.index(iy, iz)];
            t.add_row({cell(grid.y.coordinate(iy)), cell(grid.z.coordinate(iz)), cell(time), cell(v.real()),
                       cell(v.imag()), cell(std::norm(v))});
          }
      }
    } else {
      Solution3D s;
      if (o.solution == "full-y" || o.solution == "full-z") {
        s = make_full_parallel(o.solution == "full-y" ? Family::parallel_family_y : Family::parallel_family_z, o.n,
                               cfg.displacements, cfg);
      } else if (o.solution == "superposition") {
        std::vector<cplx> a, abar;
        for (const auto& c : o.a) a.push_back(parse_coefficient(c));
        for (const auto& c : o.abar) abar.push_back(parse_coefficient(c));
        const int n_max = static_cast<int>(std::max(a.size(), abar.size())) - 1;
        s = build_parallel_superposition(a, abar, cfg.displacements, std::max(n_max, 0), cfg, grid);
      } else {
        throw UsageError("unknown solution '" + o.solution + "'");
      }
      t.meta("family", to_string(s.family));
      t.meta("n", std::to_string(s.quantum_number));
      t.meta("dx", cfg.displacements.dx);
      t.meta("dy", cfg.displacements.dy);
      t.meta("dz", cfg.displacements.dz);
      t.meta("dt", cfg.displacements.dt);
      t.columns = {"x", "y", "z", "t", "re", "im", "abs2"};
      for (double time : o.times) {
        const auto f = sample_slice(s, grid, o.x, time);
        for (std::size_t iy = 0; iy < grid.y.points; ++iy)
          for (std::size_t iz = 0; iz < grid.z.points; ++iz) {
            const cplx v = f[grid.index(iy, iz)];
            t.add_row({cell(o.x), cell(grid.y.coordinate(iy)), cell(grid.z.coordinate(iz)), cell(time), cell(v.real()),
                       cell(v.imag()), cell(std::norm(v))});
          }
      }
    }
  }
  t.save(detail::output_path(g, "eval.csv").string());
  if (g.json) {
    nlohmann::json summary;
    summary["solution"] = o.solution;
    summary["rows"] = t.rows.size();
    summary["columns"] = t.columns;
    out << summary.dump(2) << '\n';
  } else {
    out << "eval: " << t.rows.size() << " samples of " << o.solution << '\n';
  }
  return exit_ok;
}

}  // namespace lrinv::app
