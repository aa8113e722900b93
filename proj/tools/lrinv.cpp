#include <iostream>

#include <CLI11.hpp>

#include "lrinv/app/commands.hpp"

int main(int argc, char** argv) {
  using namespace lrinv::app;

  CLI::App app{"Conserved-operator toolkit for a charge in uniform fields"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_option("--out-dir", g.out_dir, "directory for CSV and JSON outputs")->capture_default_str();
  app.add_option("--units", g.units, "unit system override")->check(CLI::IsMember({"natural", "cgs", "si"}));
  app.add_flag("--json", g.json, "print machine-readable output");

  std::vector<std::string> filters;
  auto* verify = app.add_subcommand("verify", "run the identity and numerical checks");
  verify->add_option("--filter", filters, "check group or criterion number (repeatable)");

  Evolve1DOptions e1;
  auto* evolve1d = app.add_subcommand("evolve1d", "Crank-Nicolson run of a packet in the electric field");
  evolve1d->add_option("--dt", e1.dt, "time step (default 1e-3 natural times)");
  evolve1d->add_option("--steps", e1.steps)->capture_default_str();
  evolve1d->add_option("--cadence", e1.cadence)->capture_default_str();
  evolve1d->add_option("--points", e1.points)->capture_default_str();
  evolve1d->add_option("--length", e1.length, "box length (default 30 natural lengths)");
  evolve1d->add_option("--width", e1.width, "packet width (default one natural length)");
  evolve1d->add_option("--center", e1.center)->capture_default_str();
  evolve1d->add_option("--k0", e1.k0, "mean wavenumber")->capture_default_str();
  evolve1d->add_flag("--richardson", e1.richardson, "estimate the temporal order");
  evolve1d->add_flag("--profile", e1.profile, "write the final density and current profile");

  EvolveLandauOptions el;
  auto* landau = app.add_subcommand("evolve-landau", "split-step run of a Landau level in the crossed plane");
  landau->add_option("--level", el.level)->capture_default_str()->check(CLI::NonNegativeNumber);
  landau->add_option("--wavenumber", el.wavenumber, "z mode index setting the guiding centre")->capture_default_str();
  landau->add_option("--periods", el.periods)->capture_default_str();
  landau->add_option("--steps-per-period", el.steps_per_period)->capture_default_str();
  landau->add_option("--cadence", el.cadence, "rows per record (default once per period)");
  landau->add_option("--ny", el.ny)->capture_default_str();
  landau->add_option("--nz", el.nz)->capture_default_str();
  landau->add_option("--ly", el.ly, "y extent (default 24 magnetic lengths)");
  landau->add_option("--lz", el.lz, "z extent (default 8 magnetic lengths)");
  landau->add_flag("--richardson", el.richardson, "estimate the temporal order");

  QuantizeOptions qo;
  auto* quantize = app.add_subcommand("quantize", "scan the time shift for integer windings");
  quantize->add_option("--dx", qo.dx, "spatial shift (default h/(qE tau), tau the electric time)");
  quantize->add_option("--dt-min", qo.dt_min, "first time shift (default tau/100)");
  quantize->add_option("--dt-max", qo.dt_max, "last time shift (default 10 tau)");
  quantize->add_option("--dt-steps", qo.dt_steps)->capture_default_str();
  quantize->add_option("--tol", qo.tol)->capture_default_str();

  EvalOptions eo;
  auto* eval = app.add_subcommand("eval", "sample a closed-form solution");
  eval->add_option("--solution", eo.solution)->capture_default_str()->check(CLI::IsMember(solution_names()));
  eval->add_option("--n", eo.n, "ladder index or oscillator level")->capture_default_str()->check(CLI::NonNegativeNumber);
  eval->add_option("--order", eo.order, "truncation order of the Taylor sum")->capture_default_str();
  eval->add_option("--shift", eo.shift, "time shift, or the family displacement");
  eval->add_option("--t", eo.times, "evaluation times")->delimiter(',');
  eval->add_option("--points", eo.points)->capture_default_str();
  eval->add_option("--length", eo.length, "grid length (default box length)");
  eval->add_option("--boundary", eo.boundary)->capture_default_str()->check(CLI::IsMember({"periodic", "dirichlet"}));
  eval->add_option("--nz", eo.nz)->capture_default_str();
  eval->add_option("--lz", eo.lz, "z extent (default 8 magnetic lengths)");
  eval->add_option("--x", eo.x, "x of the sampled slice")->capture_default_str();
  eval->add_option("--a", eo.a, "family-y coefficients, re or re:im")->delimiter(',');
  eval->add_option("--abar", eo.abar, "family-z coefficients, re or re:im")->delimiter(',');
  eval->add_flag("--current", eo.current, "add probability current columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*verify) return cmd_verify(g, filters, std::cout);
    if (*evolve1d) return cmd_evolve1d(g, e1, std::cout);
    if (*landau) return cmd_evolve_landau(g, el, std::cout);
    if (*quantize) return cmd_quantize(g, qo, std::cout);
    if (*eval) return cmd_eval(g, eo, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
