#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "lrinv/constants.hpp"
#include "lrinv/error.hpp"

namespace lrinv {

enum class UnitKind { natural, cgs, si };

/// Action and speed scales of one unit system. `h()` is always 2π·ħ.
struct UnitSystem {
  UnitKind kind = UnitKind::natural;
  double hbar = 1.0;
  double c = 1.0;

  double h() const noexcept { return constants::two_pi * hbar; }

  /// Factor dividing qA in the minimal coupling p - qA/κ: c for Gaussian and
  /// natural units, 1 for SI.
  double field_coupling() const noexcept { return kind == UnitKind::si ? 1.0 : c; }

  static UnitSystem natural() { return {UnitKind::natural, 1.0, 1.0}; }
  static UnitSystem cgs() {
    return {UnitKind::cgs, constants::cgs::planck.value / constants::two_pi,
            constants::cgs::speed_of_light.value};
  }
  static UnitSystem si() {
    return {UnitKind::si, constants::si::planck.value / constants::two_pi,
            constants::si::speed_of_light.value};
  }
  static UnitSystem of(UnitKind kind) {
    switch (kind) {
      case UnitKind::cgs: return cgs();
      case UnitKind::si: return si();
      default: return natural();
    }
  }

  /// Elementary charge in this unit system; natural units have none.
  std::optional<double> elementary_charge() const {
    switch (kind) {
      case UnitKind::cgs: return constants::cgs::elementary_charge.value;
      case UnitKind::si: return constants::si::elementary_charge.value;
      default: return std::nullopt;
    }
  }

  bool operator==(const UnitSystem&) const = default;
};

struct ParticleSpec {
  double mass = 1.0;
  double charge = 1.0;
  bool operator==(const ParticleSpec&) const = default;
};

enum class Geometry { electric_1d, parallel_eb };

/// Constant fields. The electric potential is U(x) = -E x; for the parallel
/// geometry the vector potential is A = B (0, 0, y).
struct FieldConfig {
  double electric = 1.0;
  double magnetic = 0.0;
  Geometry geometry = Geometry::electric_1d;
  bool operator==(const FieldConfig&) const = default;
};

enum class EigenSign { minus, plus };

/// Displacements generated by the conserved operators. `dt` is the physical
/// time shift of the solution (state φ(x, t - dt)); `eigen_sign` is only the
/// convention relating dt to the eigenvalue λ of p - qEt.
struct DisplacementParams {
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;
  double dt = 0.0;
  EigenSign eigen_sign = EigenSign::minus;
  bool operator==(const DisplacementParams&) const = default;
};

struct SystemConfig {
  UnitSystem units;
  ParticleSpec particle;
  FieldConfig fields;
  double box_length = 1.0;
  DisplacementParams displacements;
  /// Use amplitude 1/L for the plane-wave solution instead of 1/sqrt(L).
  /// Comparison output only; such states are not unit-normalized.
  bool inverse_length_normalization = false;
  int ladder_depth = 6;
  /// Operator text replacing the built-in Hamiltonians in symbolic checks.
  std::optional<std::string> hamiltonian_1d_override;
  std::optional<std::string> hamiltonian_parallel_override;

  double hbar() const noexcept { return units.hbar; }
  double mass() const noexcept { return particle.mass; }
  double charge() const noexcept { return particle.charge; }
  double electric() const noexcept { return fields.electric; }
  /// q·E, the constant force.
  double force() const noexcept { return particle.charge * fields.electric; }

  bool operator==(const SystemConfig&) const = default;
};

inline constexpr int max_ladder_depth = 64;

/// ω_c = qB/(m c), with c replaced by 1 in SI.
inline double cyclotron_frequency(const SystemConfig& cfg) {
  if (cfg.fields.geometry != Geometry::parallel_eb)
    throw GeometryError("no magnetic field in this geometry");
  return cfg.particle.charge * cfg.fields.magnetic /
         (cfg.particle.mass * cfg.units.field_coupling());
}

/// (ħ²/(m|qE|))^(1/3), the length on which the electric problem has no
/// free parameter; L/8 when there is no force.
inline double electric_length(const SystemConfig& cfg) {
  const double f = std::abs(cfg.force());
  if (f == 0.0) return cfg.box_length / 8.0;
  return std::cbrt(cfg.hbar() * cfg.hbar() / (cfg.mass() * f));
}

/// mℓ²/ħ for ℓ = electric_length.
inline double electric_time(const SystemConfig& cfg) {
  const double l = electric_length(cfg);
  return cfg.mass() * l * l / cfg.hbar();
}

/// Eigenvalue of p - qEt carried by the state shifted by `dt`. The sign
/// convention does not enter: the state φ(x, t - dt) has λ = -qE·dt.
inline double shift_eigenvalue(const SystemConfig& cfg, double dt) { return -cfg.force() * dt; }

/// The displacement symbol written under the configured sign convention,
/// δt = ∓λ/(qE).
inline double conventional_shift(const SystemConfig& cfg, double dt) {
  return cfg.displacements.eigen_sign == EigenSign::minus ? dt : -dt;
}

inline const char* to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::cgs: return "cgs";
    case UnitKind::si: return "si";
    default: return "natural";
  }
}

inline UnitKind parse_unit_kind(const std::string& s) {
  if (s == "natural") return UnitKind::natural;
  if (s == "cgs") return UnitKind::cgs;
  if (s == "si") return UnitKind::si;
  throw ConfigError("units", "unknown unit system '" + s + "'");
}

inline const char* to_string(Geometry g) {
  return g == Geometry::parallel_eb ? "parallel_eb" : "electric_1d";
}

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(key, std::string("missing required key '") + key + "'");
  return doc.at(key);
}

inline double finite_number(const nlohmann::json& v, const char* key) {
  if (!v.is_number()) throw ConfigError(key, std::string("'") + key + "' must be a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(key, std::string("'") + key + "' must be finite");
  return x;
}

/// Numbers, or the symbolic constants "e", "-e", "m_e" resolved from the
/// bundled constants table.
inline double quantity(const nlohmann::json& v, const char* key, const UnitSystem& units) {
  if (!v.is_string()) return finite_number(v, key);
  const auto s = v.get<std::string>();
  if (s == "e" || s == "-e") {
    auto e = units.elementary_charge();
    if (!e) throw ConfigError(key, "symbolic charge 'e' needs cgs or si units");
    return s == "e" ? *e : -*e;
  }
  if (s == "m_e") {
    if (units.kind == UnitKind::si) return constants::si::electron_mass.value;
    if (units.kind == UnitKind::cgs) return constants::cgs::electron_mass.value;
    throw ConfigError(key, "symbolic mass 'm_e' needs cgs or si units");
  }
  throw ConfigError(key, "unknown symbolic constant '" + s + "'");
}

inline double optional_number(const nlohmann::json& doc, const char* key, double fallback) {
  return doc.contains(key) ? finite_number(doc.at(key), key) : fallback;
}

}  // namespace detail

/// Validates a structured document into a SystemConfig.
///
/// Required keys: m, q, E, L. Optional: units (natural), geometry
/// (electric_1d), B, dx, dy, dz, dt, eigen_sign (minus),
/// inverse_length_normalization, ladder_depth (6), hamiltonian_1d,
/// hamiltonian_parallel.
inline SystemConfig build_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("", "configuration must be a JSON object");
  SystemConfig cfg;
  if (doc.contains("units")) {
    if (!doc.at("units").is_string()) throw ConfigError("units", "'units' must be a string");
    cfg.units = UnitSystem::of(parse_unit_kind(doc.at("units").get<std::string>()));
  }
  cfg.particle.mass = detail::quantity(detail::require(doc, "m"), "m", cfg.units);
  cfg.particle.charge = detail::quantity(detail::require(doc, "q"), "q", cfg.units);
  cfg.fields.electric = detail::finite_number(detail::require(doc, "E"), "E");
  cfg.box_length = detail::finite_number(detail::require(doc, "L"), "L");
  cfg.fields.magnetic = detail::optional_number(doc, "B", 0.0);

  if (doc.contains("geometry")) {
    const auto g = doc.at("geometry").get<std::string>();
    if (g == "electric_1d") cfg.fields.geometry = Geometry::electric_1d;
    else if (g == "parallel_eb") cfg.fields.geometry = Geometry::parallel_eb;
    else throw ConfigError("geometry", "unknown geometry '" + g + "'");
  }

  cfg.displacements.dx = detail::optional_number(doc, "dx", 0.0);
  cfg.displacements.dy = detail::optional_number(doc, "dy", 0.0);
  cfg.displacements.dz = detail::optional_number(doc, "dz", 0.0);
  cfg.displacements.dt = detail::optional_number(doc, "dt", 0.0);
  if (doc.contains("eigen_sign")) {
    const auto s = doc.at("eigen_sign").get<std::string>();
    if (s == "minus") cfg.displacements.eigen_sign = EigenSign::minus;
    else if (s == "plus") cfg.displacements.eigen_sign = EigenSign::plus;
    else throw ConfigError("eigen_sign", "eigen_sign must be 'plus' or 'minus'");
  }
  if (doc.contains("inverse_length_normalization"))
    cfg.inverse_length_normalization = doc.at("inverse_length_normalization").get<bool>();
  if (doc.contains("ladder_depth")) cfg.ladder_depth = doc.at("ladder_depth").get<int>();
  if (doc.contains("hamiltonian_1d"))
    cfg.hamiltonian_1d_override = doc.at("hamiltonian_1d").get<std::string>();
  if (doc.contains("hamiltonian_parallel"))
    cfg.hamiltonian_parallel_override = doc.at("hamiltonian_parallel").get<std::string>();

  if (!(cfg.particle.mass > 0.0)) throw ConfigError("m", "mass must be positive");
  if (cfg.particle.charge == 0.0) throw ConfigError("q", "charge must be nonzero");
  if (!(cfg.box_length > 0.0)) throw ConfigError("L", "box length must be positive");
  if (cfg.fields.magnetic < 0.0) throw ConfigError("B", "magnetic intensity must be non-negative");
  if (cfg.ladder_depth < 0 || cfg.ladder_depth > max_ladder_depth)
    throw ConfigError("ladder_depth", "ladder_depth must lie in [0, 64]");
  return cfg;
}

inline SystemConfig parse_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  try {
    return build_config(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("", std::string("wrong value type: ") + e.what());
  }
}

inline SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

/// Serializes every field numerically; `build_config(to_json(c)) == c`.
inline nlohmann::json to_json(const SystemConfig& cfg) {
  nlohmann::json doc;
  doc["units"] = to_string(cfg.units.kind);
  doc["m"] = cfg.particle.mass;
  doc["q"] = cfg.particle.charge;
  doc["E"] = cfg.fields.electric;
  doc["B"] = cfg.fields.magnetic;
  doc["L"] = cfg.box_length;
  doc["geometry"] = to_string(cfg.fields.geometry);
  doc["dx"] = cfg.displacements.dx;
  doc["dy"] = cfg.displacements.dy;
  doc["dz"] = cfg.displacements.dz;
  doc["dt"] = cfg.displacements.dt;
  doc["eigen_sign"] = cfg.displacements.eigen_sign == EigenSign::minus ? "minus" : "plus";
  doc["inverse_length_normalization"] = cfg.inverse_length_normalization;
  doc["ladder_depth"] = cfg.ladder_depth;
  if (cfg.hamiltonian_1d_override) doc["hamiltonian_1d"] = *cfg.hamiltonian_1d_override;
  if (cfg.hamiltonian_parallel_override)
    doc["hamiltonian_parallel"] = *cfg.hamiltonian_parallel_override;
  return doc;
}

/// Natural-units config used by tests and the default CLI run:
/// ħ = m = q = c = 1, E = 1, L = 8.
inline SystemConfig natural_config(Geometry geometry = Geometry::electric_1d, double magnetic = 0.0) {
  SystemConfig cfg;
  cfg.box_length = 8.0;
  cfg.fields.geometry = geometry;
  cfg.fields.magnetic = magnetic;
  return cfg;
}

}  // namespace lrinv
