#include "btx/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "btx/error.hpp"
#include "btx/text.hpp"

namespace btx {

namespace {

long parse_long(std::string_view key, std::string_view value) {
  try {
    return Rational::parse(value).to_long();
  } catch (const std::exception&) {
    throw ConfigError(std::string(key) + ": expected an integer, got '" + std::string(value) + "'");
  }
}

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ConfigError("config values must be strings or integers, got " + v.dump());
}

std::string joined(const nlohmann::json& v, char sep) {
  if (!v.is_array()) return scalar_text(v);
  std::string out;
  for (const auto& item : v) {
    if (!out.empty()) out += sep;
    out += scalar_text(item);
  }
  return out;
}

}  // namespace

MeixnerDefinition parse_meixner(std::string_view text) {
  if (text == "pochhammer") return MeixnerDefinition::pochhammer;
  if (text == "hypergeometric") return MeixnerDefinition::hypergeometric;
  throw ConfigError("unknown Meixner definition '" + std::string(text) + "' (pochhammer|hypergeometric)");
}

std::string to_string(MeixnerDefinition d) {
  return d == MeixnerDefinition::pochhammer ? "pochhammer" : "hypergeometric";
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "n_max") {
    config.bounds.n_max = parse_long(key, value);
  } else if (key == "m_max") {
    config.bounds.m_max = parse_long(key, value);
  } else if (key == "r_max") {
    config.bounds.r_max = parse_long(key, value);
  } else if (key == "seed") {
    const long s = parse_long(key, value);
    if (s < 0) throw ConfigError("seed must be nonnegative");
    config.seed = static_cast<std::uint64_t>(s);
  } else if (key == "meixner") {
    config.meixner = parse_meixner(value);
  } else if (key.rfind("grid.", 0) == 0) {
    const std::string var(key.substr(5));
    if (var.empty()) throw ConfigError("grid override needs a variable name");
    std::vector<Rational> points;
    for (const auto& piece : split_top_level(value, ',')) {
      if (!piece.empty()) points.push_back(Rational::parse(piece));
    }
    config.grid_values[var] = std::move(points);
  } else if (key == "sequences") {
    config.sequences.clear();
    for (const auto& piece : split_top_level(value, ';')) {
      if (!piece.empty()) config.sequences.push_back(SequenceSpec::parse(piece));
    }
  } else if (key == "corrupt") {
    const auto parts = split_top_level(value, ',');
    if (parts.size() < 2 || parts.size() > 3) throw ConfigError("corrupt expects n,j or n,j,delta");
    Corruption c{parse_long(key, parts[0]), parse_long(key, parts[1]), Rational(1)};
    if (parts.size() == 3) c.delta = Rational::parse(parts[2]);
    config.corruption = c;
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("config JSON: ") + e.what());
    }
    for (const auto& [key, value] : j.items()) {
      if (key == "grid") {
        if (!value.is_object()) throw ConfigError("config JSON: grid must be an object");
        for (const auto& [var, points] : value.items()) apply_setting(base, "grid." + var, joined(points, ','));
      } else if (key == "sequences") {
        apply_setting(base, key, joined(value, ';'));
      } else if (key == "corrupt") {
        apply_setting(base, key, joined(value, ','));
      } else {
        apply_setting(base, key, scalar_text(value));
      }
    }
    return base;
  }

  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view l = trim(line);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(number) + ": expected key = value");
    }
    apply_setting(base, l.substr(0, eq), l.substr(eq + 1));
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

}  // namespace btx
