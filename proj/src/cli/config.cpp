#include "cli/config.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "CLI11.hpp"

namespace casimir::cli {

namespace {

void require_finite(const std::string& field, double v) {
  if (!std::isfinite(v)) throw ConfigError(field, "must be a finite number");
}

void require_positive(const std::string& field, double v) {
  require_finite(field, v);
  if (!(v > 0.0)) throw ConfigError(field, "must be positive");
}

void require_list(const std::string& field, const std::vector<double>& xs) {
  for (double x : xs) require_positive(field, x);
}

void validate(const Invocation& inv, bool epsilon_given) {
  const RunConfig& c = inv.config;
  require_positive("length", c.length);
  if (c.alpha) {
    require_finite("alpha", *c.alpha);
    if (*c.alpha < 0.0) throw ConfigError("alpha", "must be >= 0");
  }
  require_positive("mass", c.mass);
  if (!c.scheme.is_cutoff() && epsilon_given) throw ConfigError("epsilon", "only valid with scheme=cutoff");
  if (c.grid.count < 2) throw ConfigError("grid", "needs at least 2 points");
  if (c.model == Model::Em3D && c.scheme.is_cutoff()) {
    throw ConfigError("scheme", "the em3d model is only available in the zeta scheme");
  }

  if (!inv.command) return;
  const bool totals = *inv.command == Command::Total || (*inv.command == Command::Scan && c.sweep == Sweep::Length);
  if (totals && c.model == Model::Scalar1D && c.alpha && c.scheme.is_cutoff()) {
    throw ConfigError("scheme", "interacting totals are computed in the zeta scheme only");
  }
  switch (*inv.command) {
    case Command::Commute: {
      if (c.model != Model::Scalar1D) throw ConfigError("model", "commute needs the scalar1d model");
      require_list("deltas", c.deltas);
      require_list("epsilons", c.epsilons);
      if (c.deltas.size() < 3) throw ConfigError("deltas", "needs at least 3 values");
      if (c.epsilons.size() < 3) throw ConfigError("epsilons", "needs at least 3 values");
      for (double d : c.deltas) {
        if (!(d < 0.5 * c.length)) throw ConfigError("deltas", "every delta must be below length/2");
      }
      break;
    }
    case Command::Scan: {
      require_list("values", c.values);
      if (c.sweep != Sweep::Length && c.model != Model::Scalar1D) {
        throw ConfigError("sweep", "epsilon and delta sweeps need the scalar1d model");
      }
      if (c.sweep == Sweep::Epsilon) {
        require_finite("theta", c.theta);
        if (!(c.theta > 0.0 && c.theta < std::numbers::pi)) throw ConfigError("theta", "must lie in (0, pi)");
      }
      if (c.sweep == Sweep::Delta) {
        for (double d : c.values) {
          if (!(d < 0.5 * c.length)) throw ConfigError("values", "every delta must be below length/2");
        }
      }
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::optional<scalar1d::Couplings> RunConfig::scalar_couplings() const {
  if (!alpha) return std::nullopt;
  return scalar1d::Couplings(*alpha, mass);
}

em3d::EhCouplings RunConfig::em_couplings() const {
  return em3d::EhCouplings(alpha.value_or(em3d::EhCouplings::physical().alpha()), mass);
}

Invocation parse_invocation(int argc, const char* const* argv) {
  CLI::App app{"Casimir energies between Dirichlet boundaries and conducting plates", "casimir"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  Invocation inv;
  RunConfig& c = inv.config;

  const std::map<std::string, Model> models{
      {"scalar1d", Model::Scalar1D}, {"scalar", Model::Scalar1D}, {"em3d", Model::Em3D}, {"em", Model::Em3D}};
  const std::map<std::string, lab::Clustering> clusters{{"uniform", lab::Clustering::Uniform},
                                                        {"endpoints", lab::Clustering::Endpoints}};
  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};

  std::string scheme = "zeta";
  double epsilon = 0.0;
  double alpha = 0.0;
  Format format = Format::Csv;
  std::string out;

  app.add_option("--model", c.model, "scalar1d | em3d")->transform(CLI::CheckedTransformer(models));
  app.add_option("--length", c.length, "interval length or plate separation L");
  auto* alpha_opt = app.add_option("--alpha", alpha, "coupling; turns on the scalar interaction");
  app.add_option("--mass", c.mass, "heavy mass m");
  app.add_option("--scheme", scheme, "zeta | cutoff")->check(CLI::IsMember({"zeta", "cutoff"}));
  auto* eps_opt = app.add_option("--epsilon", epsilon, "exponential cutoff (scheme=cutoff)");
  app.add_option("--grid", c.grid.count, "number of interior grid points");
  app.add_option("--cluster", c.grid.clustering, "uniform | endpoints")
      ->transform(CLI::CheckedTransformer(clusters));
  auto* format_opt =
      app.add_option("--format", format, "csv | json")->transform(CLI::CheckedTransformer(formats));
  auto* out_opt = app.add_option("--out", out, "output file (default: standard output)");
  app.add_flag("--units-note", inv.units_note, "print the unit conventions");
  app.set_config("--config", "", "flat key=value file; command-line flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);

  auto* density = app.add_subcommand("density", "energy density profile on a grid");
  auto* total = app.add_subcommand("total", "total energy (and force per area for em3d)");
  auto* verify_cmd = app.add_subcommand("verify", "run the self-check suite");
  const std::map<std::string, verify::Suite> suites{{"quick", verify::Suite::Quick}, {"full", verify::Suite::Full}};
  verify_cmd->add_option("--suite", c.suite, "quick | full")->transform(CLI::CheckedTransformer(suites));
  auto* commute = app.add_subcommand("commute", "order-of-limits report");
  commute->add_option("--deltas", c.deltas, "decreasing geometric margins")->delimiter(',');
  commute->add_option("--epsilons", c.epsilons, "decreasing geometric cutoffs")->delimiter(',');
  auto* scan = app.add_subcommand("scan", "sweep epsilon, delta or length");
  const std::map<std::string, Sweep> sweeps{
      {"epsilon", Sweep::Epsilon}, {"delta", Sweep::Delta}, {"length", Sweep::Length}};
  scan->add_option("--sweep", c.sweep, "epsilon | delta | length")->transform(CLI::CheckedTransformer(sweeps));
  scan->add_option("--values", c.values, "comma-separated sweep values")->delimiter(',');
  scan->add_option("--theta", c.theta, "angle for the epsilon sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream o, err;
    app.exit(e, o, err);
    throw HelpRequest{o.str()};
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream o, err;
    app.exit(e, o, err);
    throw HelpRequest{o.str()};
  } catch (const CLI::ParseError& e) {
    throw ConfigError("arguments", e.what());
  }

  if (density->parsed()) inv.command = Command::Density;
  if (total->parsed()) inv.command = Command::Total;
  if (verify_cmd->parsed()) inv.command = Command::Verify;
  if (commute->parsed()) inv.command = Command::Commute;
  if (scan->parsed()) inv.command = Command::Scan;
  if (!inv.command && !inv.units_note) {
    throw ConfigError("command", "expected one of density, total, verify, commute, scan");
  }

  if (alpha_opt->count() > 0) c.alpha = alpha;
  if (format_opt->count() > 0) c.format = format;
  if (out_opt->count() > 0) {
    if (out.empty()) throw ConfigError("out", "empty path");
    c.out = out;
  }

  const bool epsilon_given = eps_opt->count() > 0;
  if (scheme == "cutoff" && epsilon_given) {
    require_positive("epsilon", epsilon);
    c.scheme = regsum::RegScheme::cutoff(epsilon);
  } else if (scheme == "cutoff") {
    throw ConfigError("epsilon", "required when scheme=cutoff");
  }

  if (c.values.empty()) {
    switch (c.sweep) {
      case Sweep::Epsilon: c.values = {0.04, 0.02, 0.01, 0.005}; break;
      case Sweep::Delta: c.values = {0.02, 0.01, 0.005, 0.0025}; break;
      case Sweep::Length: c.values = {0.5, 1.0, 2.0, 4.0}; break;
    }
  }

  validate(inv, epsilon_given);
  return inv;
}

std::string units_note() {
  return "Natural units: hbar = c = 1. Lengths (L, z, 1/m) share one unit; energies and\n"
         "masses are inverse lengths. Scalar totals are energies (1/length), scalar\n"
         "densities are 1/length^2. em3d totals are energies per unit plate area\n"
         "(1/length^3), densities and <E^2>, <B^2> are 1/length^4, forces per area are\n"
         "1/length^4. To convert, multiply an energy by hbar*c = 197.3269804 MeV fm\n"
         "divided by your length unit. alpha is dimensionless; m = 1 means lengths are\n"
         "measured in units of 1/m.\n";
}

std::string model_name(Model m) { return m == Model::Scalar1D ? "scalar1d" : "em3d"; }

std::string scheme_name(const regsum::RegScheme& s) { return s.is_cutoff() ? "cutoff" : "zeta"; }

std::string cluster_name(lab::Clustering c) { return c == lab::Clustering::Uniform ? "uniform" : "endpoints"; }

}  // namespace casimir::cli
