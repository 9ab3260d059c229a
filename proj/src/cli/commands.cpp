#include "cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir::cli {

namespace {

constexpr double kPi = std::numbers::pi;

Json header(const char* command, const RunConfig& c) {
  Json j;
  j["command"] = command;
  j["model"] = model_name(c.model);
  j["length"] = c.length;
  j["scheme"] = scheme_name(c.scheme);
  if (c.scheme.is_cutoff()) j["epsilon"] = *c.scheme.epsilon();
  if (c.has_couplings()) {
    if (c.model == Model::Em3D) {
      const em3d::EhCouplings eh = c.em_couplings();
      j["alpha"] = eh.alpha();
      j["mass"] = eh.mass();
    } else {
      j["alpha"] = *c.alpha;
      j["mass"] = c.mass;
    }
  }
  return j;
}

Json table_rows_as_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(Json(r));
  return rows;
}

struct Totals {
  double total;
  std::optional<double> free;
  std::optional<double> correction;
  std::optional<double> pole_term;
  std::optional<double> force;
  std::optional<double> force_numeric;
};

Totals totals_for(const RunConfig& c, const Geometry& g) {
  Totals t{};
  if (c.model == Model::Em3D) {
    const em3d::EhCouplings eh = c.em_couplings();
    t.free = em3d::free_energy_per_area(g);
    t.correction = em3d::eh_energy_correction(g, eh);
    t.total = em3d::corrected_total_energy(g, eh);
    t.force = em3d::casimir_force_per_area(g);
    t.force_numeric = em3d::force_per_area_numeric(g, eh);
    return t;
  }
  if (const auto couplings = c.scalar_couplings()) {
    t.free = scalar1d::free_total_energy(g);
    t.correction = scalar1d::interacting_correction_constant(g, *couplings);
    t.total = scalar1d::interacting_total_energy(g, *couplings);
    return t;
  }
  if (c.scheme.is_cutoff()) {
    const double eps = *c.scheme.epsilon();
    t.total = scalar1d::total_energy_by_route(g, scalar1d::SumThenRegularize{}, c.scheme).value;
    t.pole_term = kPi / (2.0 * g.length() * eps * eps);
    return t;
  }
  t.total = scalar1d::free_total_energy(g);
  return t;
}

void warn_validity(const RunConfig& c, double length, std::ostream& err) {
  const auto couplings = c.model == Model::Scalar1D ? c.scalar_couplings() : std::nullopt;
  if (!couplings || !couplings->outside_validity(Geometry(length))) return;
  const double mL = c.mass * length;
  err << "warning: alpha/(m L)^2 = " << format_number(*c.alpha / (mL * mL)) << " at L = " << format_number(length)
      << " exceeds 0.1; first-order perturbation theory is unreliable here\n";
}

double tolerance_scale_from_env() {
  const char* env = std::getenv("CASIMIR_VERIFY_TOL_SCALE");
  if (!env) return 1.0;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(v) || !(v > 0.0)) {
    throw ConfigError("CASIMIR_VERIFY_TOL_SCALE", "must be a positive number");
  }
  return v;
}

}  // namespace

CommandResult cmd_density(const RunConfig& c) {
  const Geometry g = c.geometry();
  lab::DensitySource source;
  if (c.model == Model::Em3D) {
    source = lab::EmSource{c.em_couplings()};
  } else {
    source = lab::ScalarSource{c.scalar_couplings()};
  }
  const lab::DensityProfile p = lab::sample_profile(source, g, c.scheme, c.grid);

  Table t;
  t.columns = {"theta", "z", "electric", "magnetic", "total"};
  const bool with_correction = !p.correction.empty();
  if (with_correction) t.columns.push_back("correction");
  for (std::size_t i = 0; i < p.grid.size(); ++i) {
    const auto& v = p.values[i];
    std::vector<Json> row{p.grid[i], p.grid[i] * c.length / kPi, v.electric, v.magnetic, v.total};
    if (with_correction) row.push_back(p.correction[i]);
    t.rows.push_back(std::move(row));
  }

  CommandResult r;
  Json& d = r.output.document;
  d = header("density", c);
  d["grid"] = c.grid.count;
  d["cluster"] = cluster_name(c.grid.clustering);
  d["units"] = c.model == Model::Em3D ? "energy density, 1/length^4" : "energy density, 1/length^2";
  d["columns"] = t.columns;
  d["rows"] = table_rows_as_json(t);
  r.output.tables.push_back(std::move(t));
  return r;
}

CommandResult cmd_total(const RunConfig& c) {
  const Geometry g = c.geometry();
  const Totals t = totals_for(c, g);

  CommandResult r;
  Json& d = r.output.document;
  d = header("total", c);
  d["units"] = c.model == Model::Em3D ? "energy per unit plate area, 1/length^3" : "energy, 1/length";
  Table table;
  table.columns = {"model", "length"};
  std::vector<Json> row{model_name(c.model), c.length};
  auto add = [&](const char* key, double v) {
    d[key] = v;
    table.columns.push_back(key);
    row.push_back(v);
  };
  if (d.contains("epsilon")) add("epsilon", *c.scheme.epsilon());
  if (d.contains("alpha")) {
    add("alpha", d["alpha"].get<double>());
    add("mass", d["mass"].get<double>());
  }
  if (t.free) add("free_energy", *t.free);
  if (t.correction) add("correction", *t.correction);
  if (t.pole_term) add("pole_term", *t.pole_term);
  add("total_energy", t.total);
  if (t.force) {
    d["force_units"] = "force per unit plate area, 1/length^4";
    add("force_per_area", *t.force);
    add("force_per_area_numeric", *t.force_numeric);
  }
  table.rows.push_back(std::move(row));
  r.output.tables.push_back(std::move(table));
  return r;
}

CommandResult cmd_verify(const RunConfig& c, double tolerance_scale) {
  const verify::Report report = verify::run(c.suite, tolerance_scale);
  CommandResult r;
  Json& d = r.output.document;
  d["command"] = "verify";
  d["suite"] = c.suite == verify::Suite::Quick ? "quick" : "full";
  d["tolerance_scale"] = tolerance_scale;
  d["passed"] = report.passed();
  Json checks = Json::array();
  Table t;
  t.columns = {"name", "measured", "tolerance", "passed"};
  for (const auto& check : report.checks) {
    Json j;
    j["name"] = check.name;
    j["measured"] = check.measured;
    j["tolerance"] = check.tolerance;
    j["passed"] = check.passed;
    checks.push_back(std::move(j));
    t.rows.push_back({check.name, check.measured, check.tolerance, check.passed});
  }
  d["checks"] = std::move(checks);
  r.output.tables.push_back(std::move(t));
  r.status = report.passed() ? 0 : 1;
  return r;
}

CommandResult cmd_commute(const RunConfig& c) {
  const Geometry g = c.geometry();
  lab::ScalarModel model = lab::FreeScalarModel{};
  if (const auto couplings = c.scalar_couplings()) model = lab::InteractingScalarModel{*couplings};
  const lab::CommutationReport rep = lab::commutation_report(g, model, c.deltas, c.epsilons);

  CommandResult r;
  Json& d = r.output.document;
  d["command"] = "commute";
  d["model"] = rep.model;
  d["length"] = rep.length;
  if (rep.alpha) d["alpha"] = *rep.alpha;
  if (rep.mass) d["mass"] = *rep.mass;
  d["sum_then_regularize"] = rep.sum_then_regularize;

  Table partial;
  partial.columns = {"delta", "partial_total", "analytic"};
  Json prow = Json::array();
  for (const auto& p : rep.partial_totals) {
    partial.rows.push_back({p.delta, p.value, p.analytic});
    prow.push_back(Json{{"delta", p.delta}, {"value", p.value}, {"analytic", p.analytic}});
  }
  Json& pt = d["partial_totals"];
  pt["expected_exponent"] = rep.expected_exponent;
  pt["fit"] = Json{{"exponent", rep.divergence_fit.exponent},
                   {"amplitude", rep.divergence_fit.amplitude},
                   {"r_squared", rep.divergence_fit.r_squared}};
  pt["monotone"] = rep.partial_totals_monotone;
  pt["rows"] = std::move(prow);

  Table cutoff;
  cutoff.columns = {"epsilon",           "raw_total",   "bulk_closed_form",
                    "position_integral", "electric_position_integral",
                    "total_after_bulk_subtraction", "finite_part"};
  Json crow = Json::array();
  for (const auto& row : rep.cutoff_rows) {
    cutoff.rows.push_back({row.eps, row.raw_total, row.bulk_closed_form, row.position_integral,
                           row.electric_position_integral, row.total_after_bulk_subtraction, row.finite_part});
    Json j;
    for (std::size_t i = 0; i < cutoff.columns.size(); ++i) j[cutoff.columns[i]] = cutoff.rows.back()[i];
    crow.push_back(std::move(j));
  }
  Json& ct = d["cutoff"];
  ct["spread_after_bulk_subtraction"] = rep.cutoff_spread;
  ct["extrapolated_finite_part"] = Json{{"value", rep.extrapolated_finite_part.value},
                                        {"error_estimate", rep.extrapolated_finite_part.error_estimate}};
  ct["rows"] = std::move(crow);

  Json& v = d["verdict"];
  v["sum_route_finite"] = rep.verdict.sum_route_finite;
  v["partial_totals_diverge"] = rep.verdict.partial_totals_diverge;
  v["cutoff_total_eps_independent"] =
      rep.verdict.cutoff_total_eps_independent ? Json(*rep.verdict.cutoff_total_eps_independent) : Json(nullptr);
  v["routes_agree"] = rep.verdict.routes_agree;
  v["passed"] = rep.verdict.passed();

  r.output.tables = {std::move(partial), std::move(cutoff)};
  r.status = rep.verdict.passed() ? 0 : 1;
  return r;
}

CommandResult cmd_scan(const RunConfig& c) {
  CommandResult r;
  Json& d = r.output.document;
  d = header("scan", c);
  Table t;
  switch (c.sweep) {
    case Sweep::Epsilon: {
      d["sweep"] = "epsilon";
      d["theta"] = c.theta;
      const Geometry g = c.geometry();
      const Position pos = Position::from_theta(c.theta, g);
      const double zeta_electric = scalar1d::electric_density(g, pos, regsum::RegScheme::zeta());
      const double limit = regsum::abel_sum_sin_limit(c.theta);
      const double s = std::sin(c.theta);
      t.columns = {"epsilon", "sin_sum", "expansion", "residual", "electric_cutoff", "electric_zeta"};
      for (double eps : c.values) {
        const double sum = regsum::abel_sum_sin(eps, c.theta);
        const double expansion = limit - std::cos(c.theta) / (8.0 * s * s * s) * eps * eps;
        const double electric = scalar1d::electric_density(g, pos, regsum::RegScheme::cutoff(eps));
        t.rows.push_back({eps, sum, expansion, sum - expansion, electric, zeta_electric});
      }
      break;
    }
    case Sweep::Delta: {
      d["sweep"] = "delta";
      const Geometry g = c.geometry();
      t.columns = {"delta", "partial_total", "analytic", "divergent_part"};
      for (double delta : c.values) {
        const auto res = scalar1d::total_energy_by_route(g, scalar1d::IntegrateRegularizedDensity{delta},
                                                         regsum::RegScheme::zeta());
        t.rows.push_back({delta, res.value, res.analytic, res.divergent_part.value_or(0.0)});
      }
      break;
    }
    case Sweep::Length: {
      d["sweep"] = "length";
      d.erase("length");
      t.columns = {"length"};
      bool first = true;
      for (double length : c.values) {
        const Totals tot = totals_for(c, Geometry(length));
        std::vector<Json> row{length};
        auto add = [&](const char* name, const std::optional<double>& v) {
          if (!v) return;
          if (first) t.columns.push_back(name);
          row.push_back(*v);
        };
        add("free_energy", tot.free);
        add("correction", tot.correction);
        add("pole_term", tot.pole_term);
        add("total_energy", tot.total);
        add("force_per_area", tot.force);
        add("force_per_area_numeric", tot.force_numeric);
        t.rows.push_back(std::move(row));
        first = false;
      }
      break;
    }
  }
  d["columns"] = t.columns;
  d["rows"] = table_rows_as_json(t);
  r.output.tables.push_back(std::move(t));
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Invocation inv;
  try {
    inv = parse_invocation(argc, argv);
  } catch (const HelpRequest& h) {
    out << h.text;
    return 0;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const casimir::Error& e) {
    // couplings or geometry rejected while building the config
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const RunConfig& c = inv.config;
  if (inv.units_note) {
    (inv.command ? err : out) << units_note();
    if (!inv.command) return 0;
  }

  CommandResult result;
  try {
    switch (*inv.command) {
      case Command::Density:
        warn_validity(c, c.length, err);
        result = cmd_density(c);
        break;
      case Command::Total:
        warn_validity(c, c.length, err);
        result = cmd_total(c);
        break;
      case Command::Verify:
        result = cmd_verify(c, tolerance_scale_from_env());
        break;
      case Command::Commute:
        warn_validity(c, c.length, err);
        result = cmd_commute(c);
        break;
      case Command::Scan:
        if (c.sweep == Sweep::Length) {
          for (double length : c.values) warn_validity(c, length, err);
        } else {
          warn_validity(c, c.length, err);
        }
        result = cmd_scan(c);
        break;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return 1;
  }

  const Format format = c.format.value_or(*inv.command == Command::Verify ? Format::Json : Format::Csv);
  std::ostringstream buffer;
  if (format == Format::Json) {
    write_json(buffer, result.output.document);
  } else {
    write_csv(buffer, result.output.tables);
  }

  if (c.out) {
    std::ofstream file(*c.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: out: cannot open " << *c.out << " for writing\n";
      return 2;
    }
    file << buffer.str();
    if (!file.flush()) {
      err << "error: out: write to " << *c.out << " failed\n";
      return 2;
    }
  } else {
    out << buffer.str();
  }
  if (result.status != 0) err << "one or more checks failed\n";
  return result.status;
}

}  // namespace casimir::cli
