#pragma once

#include <string>

#include <json.hpp>

namespace tdom {

using OrderedJson = nlohmann::ordered_json;

/// Deterministic pretty-printer for CLI reports: insertion order, 2-space
/// indent, every real serialized with 17 significant digits (%.17g).
/// Non-finite reals become the strings "inf"/"-inf"/"nan" (JSON has no
/// number form for them).
std::string dump_report_json(const OrderedJson& j);

}  // namespace tdom
