#pragma once

#include <string>
#include <string_view>

#include "btx/registry.hpp"

namespace btx {

MeixnerDefinition parse_meixner(std::string_view text);
std::string to_string(MeixnerDefinition d);

/// One setting: n_max, m_max, r_max, seed, meixner, grid.<var> (comma list),
/// sequences (';' list), corrupt ("n,j" or "n,j,delta").
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Key-value text, one "key = value" per line with '#' comments, or a JSON
/// object with the same keys ("grid" may be an object of lists).
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

}  // namespace btx
