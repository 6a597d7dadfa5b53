#pragma once

#include <string>

#include "tdom/power_series.hpp"

namespace tdom {

/// %.17g — shortest text that still round-trips a double exactly.
std::string format_real17(double x);

/// Series interchange format: {"label": str, "order": int, "coeffs":
/// [[re_mantissa, im_mantissa, exp2], ...]} with exactly order+1 triples and
/// reals carrying 17 significant digits.
std::string series_to_json(const PowerSeries& f);
PowerSeries series_from_json(const std::string& text);

void write_series_file(const std::string& path, const PowerSeries& f);
PowerSeries read_series_file(const std::string& path);

}  // namespace tdom
