#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/em3d.hpp"
#include "casimir/geometry.hpp"
#include "casimir/limits_lab.hpp"
#include "casimir/regsum.hpp"
#include "casimir/scalar1d.hpp"
#include "casimir/verify.hpp"

namespace casimir::cli {

enum class Model { Scalar1D, Em3D };
enum class Format { Csv, Json };
enum class Command { Density, Total, Verify, Commute, Scan };
enum class Sweep { Epsilon, Delta, Length };

/// Bad flag, config key or value. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct RunConfig {
  Model model = Model::Scalar1D;
  double length = 1.0;
  // For the scalar model the interaction is switched on by giving alpha.
  // The em3d model always carries couplings, physical ones by default.
  std::optional<double> alpha;
  double mass = 1.0;
  regsum::RegScheme scheme = regsum::RegScheme::zeta();
  lab::GridSpec grid{};
  // Unset means the command's own default (JSON for verify, CSV otherwise).
  std::optional<Format> format;
  std::optional<std::string> out;

  verify::Suite suite = verify::Suite::Quick;
  std::vector<double> deltas{0.02, 0.01, 0.005, 0.0025};
  std::vector<double> epsilons{0.04, 0.02, 0.01, 0.005};
  Sweep sweep = Sweep::Epsilon;
  std::vector<double> values;  // empty: per-sweep default
  double theta = 1.0;

  Geometry geometry() const { return Geometry(length); }
  std::optional<scalar1d::Couplings> scalar_couplings() const;
  em3d::EhCouplings em_couplings() const;
  bool has_couplings() const { return model == Model::Em3D || alpha.has_value(); }
};

struct Invocation {
  std::optional<Command> command;
  RunConfig config;
  bool units_note = false;
};

/// --help / --version: print `text` and exit 0.
struct HelpRequest {
  std::string text;
};

/// Parses the command line (argv[0] included) and any --config file, then
/// validates the result. Throws ConfigError or HelpRequest.
Invocation parse_invocation(int argc, const char* const* argv);

/// Conventions for --units-note.
std::string units_note();

std::string model_name(Model m);
std::string scheme_name(const regsum::RegScheme& s);
std::string cluster_name(lab::Clustering c);

}  // namespace casimir::cli
