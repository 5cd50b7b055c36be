#pragma once

#include <string>
#include <string_view>

#include "btx/registry.hpp"

namespace btx {

enum class Format { json, csv, pretty };

/// Throws ConfigError for anything but json, csv or pretty.
Format parse_format(std::string_view text);

/// Renders a verification report. Without `timing` the wall-time fields are
/// left out, so identical runs render identically.
std::string render(const VerificationReport& report, Format format, bool timing = true);

}  // namespace btx
