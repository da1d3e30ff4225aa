#pragma once

// Flat key-value config documents: parse, render, and resolution into a full
// ProtocolConfig. Unset keys fall back to the derived defaults (tau tracks
// the pulse width, the window tracks tau, dt tracks the width).

#include <charconv>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbsim/config.hpp"
#include "qbsim/errors.hpp"
#include "qbsim/sweep.hpp"

namespace qbsim {

// A partially specified run: every field optional, exactly what a config
// file or a set of command-line flags can carry.
struct ConfigDocument {
  std::optional<Protocol> protocol;
  std::optional<Direction> direction;
  std::optional<double> omega0;
  std::optional<double> width;
  std::optional<double> tau;
  std::optional<Spectrum> eps;
  std::optional<double> phase;
  std::optional<double> t_start;
  std::optional<double> t_end;
  std::optional<double> dt;
  std::optional<int> initial_level;  // starting bare level, 1..3
  std::optional<SweepParameter> sweep_param;
  std::optional<std::vector<double>> sweep_values;

  bool operator==(const ConfigDocument&) const = default;

  // Later documents win field by field (e.g. flags over a config file).
  void merge_from(const ConfigDocument& over) {
    if (over.protocol) protocol = over.protocol;
    if (over.direction) direction = over.direction;
    if (over.omega0) omega0 = over.omega0;
    if (over.width) width = over.width;
    if (over.tau) tau = over.tau;
    if (over.eps) eps = over.eps;
    if (over.phase) phase = over.phase;
    if (over.t_start) t_start = over.t_start;
    if (over.t_end) t_end = over.t_end;
    if (over.dt) dt = over.dt;
    if (over.initial_level) initial_level = over.initial_level;
    if (over.sweep_param) sweep_param = over.sweep_param;
    if (over.sweep_values) sweep_values = over.sweep_values;
  }
};

inline Protocol parse_protocol(std::string_view s) {
  if (s == "stirap") return Protocol::Stirap;
  if (s == "cdstirap") return Protocol::CdStirap;
  throw ConfigError("unknown protocol '" + std::string(s) +
                    "' (expected stirap or cdstirap)");
}

inline Direction parse_direction(std::string_view s) {
  if (s == "charge") return Direction::Charge;
  if (s == "discharge") return Direction::Discharge;
  throw ConfigError("unknown direction '" + std::string(s) +
                    "' (expected charge or discharge)");
}

inline SweepParameter parse_sweep_parameter(std::string_view s) {
  if (s == "tau") return SweepParameter::Tau;
  if (s == "omega0") return SweepParameter::Omega0;
  throw ConfigError("unknown sweep parameter '" + std::string(s) +
                    "' (expected tau or omega0)");
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline double parse_double(std::string_view s, const std::string& key) {
  double out = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError("config key '" + key + "': bad number '" +
                      std::string(s) + "'");
  return out;
}

inline std::vector<double> parse_double_list(std::string_view s,
                                             const std::string& key) {
  std::vector<double> out;
  while (true) {
    const std::size_t comma = s.find(',');
    out.push_back(parse_double(trim(s.substr(0, comma)), key));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

inline std::string render_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string render_list(const double* values, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ',';
    out += render_double(values[i]);
  }
  return out;
}

}  // namespace detail

// Parse a flat "key = value" document. '#' starts a comment, blank lines are
// skipped, an unknown key is an error, and a repeated key keeps its last
// assignment.
inline ConfigDocument parse_config(std::string_view text) {
  ConfigDocument doc;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line is not 'key = value': '" +
                        std::string(line) + "'");
    const std::string key{detail::trim(line.substr(0, eq))};
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (value.empty())
      throw ConfigError("config key '" + key + "' has no value");

    if (key == "protocol") {
      doc.protocol = parse_protocol(value);
    } else if (key == "direction") {
      doc.direction = parse_direction(value);
    } else if (key == "omega0") {
      doc.omega0 = detail::parse_double(value, key);
    } else if (key == "width") {
      doc.width = detail::parse_double(value, key);
    } else if (key == "tau") {
      doc.tau = detail::parse_double(value, key);
    } else if (key == "eps") {
      const std::vector<double> e = detail::parse_double_list(value, key);
      if (e.size() != 3)
        throw ConfigError("config key 'eps' needs exactly 3 values");
      doc.eps = Spectrum{e[0], e[1], e[2]};
    } else if (key == "phase") {
      doc.phase = detail::parse_double(value, key);
    } else if (key == "t_start") {
      doc.t_start = detail::parse_double(value, key);
    } else if (key == "t_end") {
      doc.t_end = detail::parse_double(value, key);
    } else if (key == "dt") {
      doc.dt = detail::parse_double(value, key);
    } else if (key == "initial") {
      const double v = detail::parse_double(value, key);
      const int level = static_cast<int>(v);
      if (v != level || level < 1 || level > 3)
        throw ConfigError("config key 'initial' must be 1, 2, or 3");
      doc.initial_level = level;
    } else if (key == "param") {
      doc.sweep_param = parse_sweep_parameter(value);
    } else if (key == "values") {
      doc.sweep_values = detail::parse_double_list(value, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return doc;
}

// Render only the fields that are set, in a fixed key order, with enough
// digits that parse(render(doc)) == doc exactly.
inline std::string render_config(const ConfigDocument& doc) {
  std::string out;
  const auto line = [&out](const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  if (doc.protocol) line("protocol", to_string(*doc.protocol));
  if (doc.direction) line("direction", to_string(*doc.direction));
  if (doc.omega0) line("omega0", detail::render_double(*doc.omega0));
  if (doc.width) line("width", detail::render_double(*doc.width));
  if (doc.tau) line("tau", detail::render_double(*doc.tau));
  if (doc.eps) line("eps", detail::render_list(doc.eps->data(), 3));
  if (doc.phase) line("phase", detail::render_double(*doc.phase));
  if (doc.t_start) line("t_start", detail::render_double(*doc.t_start));
  if (doc.t_end) line("t_end", detail::render_double(*doc.t_end));
  if (doc.dt) line("dt", detail::render_double(*doc.dt));
  if (doc.initial_level)
    line("initial", std::to_string(*doc.initial_level));
  if (doc.sweep_param) line("param", to_string(*doc.sweep_param));
  if (doc.sweep_values)
    line("values",
         detail::render_list(doc.sweep_values->data(),
                             doc.sweep_values->size()));
  return out;
}

// Fill the unset fields with the derived defaults and validate the result.
inline ProtocolConfig resolve_config(const ConfigDocument& doc) {
  ProtocolConfig cfg;
  cfg.protocol = doc.protocol.value_or(Protocol::CdStirap);
  cfg.direction = doc.direction.value_or(Direction::Charge);
  cfg.omega0 = doc.omega0.value_or(1.0);
  cfg.width = doc.width.value_or(1.0);
  cfg.tau = doc.tau.value_or(0.7 * cfg.width);
  cfg.eps = doc.eps.value_or(kDefaultSpectrum);
  cfg.phase = doc.phase.value_or(std::numbers::pi / 2.0);
  const double half = default_half_window(cfg.tau, cfg.width);
  cfg.t_start = doc.t_start.value_or(-half);
  cfg.t_end = doc.t_end.value_or(half);
  cfg.dt = doc.dt.value_or(cfg.width / 2000.0);
  cfg.validate();
  return cfg;
}

// Document carrying every field of a resolved configuration.
inline ConfigDocument document_from_config(const ProtocolConfig& cfg) {
  ConfigDocument doc;
  doc.protocol = cfg.protocol;
  doc.direction = cfg.direction;
  doc.omega0 = cfg.omega0;
  doc.width = cfg.width;
  doc.tau = cfg.tau;
  doc.eps = cfg.eps;
  doc.phase = cfg.phase;
  doc.t_start = cfg.t_start;
  doc.t_end = cfg.t_end;
  doc.dt = cfg.dt;
  return doc;
}

}  // namespace qbsim
