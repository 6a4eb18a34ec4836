#pragma once

#include <string>

#include "json.hpp"

namespace qw {

/// Reports are ordered JSON documents with a stable field order and an
/// integer report_version, so byte-identical output is reproducible across
/// runs. The text rendering is a pure function of the document.
using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

std::string render_text(const Json& report);
std::string render_json(const Json& report);

}  // namespace qw
