#include "btx/text.hpp"

#include "btx/error.hpp"

namespace btx {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '[') {
      ++depth;
    } else if (ch == ']') {
      if (--depth < 0) throw ConfigError("unbalanced ']' in '" + std::string(text) + "'");
    } else if (ch == sep && depth == 0) {
      out.emplace_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ConfigError("unbalanced '[' in '" + std::string(text) + "'");
  out.emplace_back(trim(text.substr(start)));
  return out;
}

std::string unbracket(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    return std::string(trim(text.substr(1, text.size() - 2)));
  }
  return std::string(text);
}

Params::Params(std::string_view family, std::string_view text) : family_(family) {
  if (trim(text).empty()) return;
  for (const auto& piece : split_top_level(text, ',')) {
    const auto eq = piece.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(family_ + ": expected key=value, got '" + piece + "'");
    }
    const std::string key(trim(std::string_view(piece).substr(0, eq)));
    const std::string value = unbracket(std::string_view(piece).substr(eq + 1));
    if (!values_.emplace(key, value).second) throw ConfigError(family_ + ": repeated key '" + key + "'");
  }
}

std::optional<std::string> Params::text(const std::string& key) {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  used_[key] = true;
  return it->second;
}

Rational Params::rational(const std::string& key) {
  auto v = text(key);
  if (!v) throw ConfigError(family_ + ": missing parameter '" + key + "'");
  return Rational::parse(*v);
}

Rational Params::rational(const std::string& key, const Rational& fallback) {
  return has(key) ? rational(key) : fallback;
}

long Params::integer(const std::string& key) {
  const Rational v = rational(key);
  if (!v.is_integer()) throw ConfigError(family_ + ": parameter '" + key + "' must be an integer");
  return v.to_long();
}

long Params::integer(const std::string& key, long fallback) {
  return has(key) ? integer(key) : fallback;
}

void Params::finish() const {
  for (const auto& [key, value] : values_) {
    if (!used_.count(key)) throw ConfigError(family_ + ": unknown parameter '" + key + "'");
  }
}

}  // namespace btx
