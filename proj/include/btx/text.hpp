#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "btx/rational.hpp"

namespace btx {

/// Splits on `sep` outside square brackets; pieces are trimmed.
std::vector<std::string> split_top_level(std::string_view text, char sep);

std::string_view trim(std::string_view text);

/// Strips one level of enclosing square brackets, if present.
std::string unbracket(std::string_view text);

/// "key=value,key=value" parameters of a spec string. Lookups record which
/// keys were used so leftovers can be rejected.
class Params {
 public:
  Params(std::string_view family, std::string_view text);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> text(const std::string& key);
  Rational rational(const std::string& key);
  Rational rational(const std::string& key, const Rational& fallback);
  long integer(const std::string& key);
  long integer(const std::string& key, long fallback);
  /// Throws ConfigError naming any key that was never looked up.
  void finish() const;

 private:
  std::string family_;
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> used_;
};

}  // namespace btx
