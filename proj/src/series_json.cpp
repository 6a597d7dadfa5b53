#include "tdom/series_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tdom {

std::string format_real17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string series_to_json(const PowerSeries& f) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"label\": " << nlohmann::json(f.label()).dump() << ",\n";
  out << "  \"order\": " << f.order() << ",\n";
  out << "  \"coeffs\": [\n";
  for (int k = 0; k <= f.order(); ++k) {
    const ScaledComplex& c = f.coeff(k);
    out << "    [" << format_real17(c.re) << ", " << format_real17(c.im) << ", " << c.exp2 << "]";
    out << (k < f.order() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

PowerSeries series_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("series file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("label") || !j.contains("order") || !j.contains("coeffs"))
    throw std::runtime_error("series file needs fields label, order, coeffs");
  if (!j["label"].is_string() || !j["order"].is_number_integer() || !j["coeffs"].is_array())
    throw std::runtime_error("series file has wrongly typed fields");
  const auto order = j["order"].get<std::int64_t>();
  if (order < 0) throw std::runtime_error("series order must be >= 0");
  const auto& coeffs = j["coeffs"];
  if (static_cast<std::int64_t>(coeffs.size()) != order + 1)
    throw std::runtime_error("series file needs exactly order+1 coefficient triples");
  std::vector<ScaledComplex> c(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& t = coeffs[k];
    if (!t.is_array() || t.size() != 3 || !t[0].is_number() || !t[1].is_number() || !t[2].is_number_integer())
      throw std::runtime_error("coefficient must be a [re_mantissa, im_mantissa, exp2] triple");
    c[k] = ScaledComplex{t[0].get<double>(), t[1].get<double>(), t[2].get<std::int64_t>()};
  }
  return {std::move(c), j["label"].get<std::string>()};
}

void write_series_file(const std::string& path, const PowerSeries& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << series_to_json(f);
  if (!out) throw std::runtime_error("write failed: " + path);
}

PowerSeries read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open series file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return series_from_json(buf.str());
}

}  // namespace tdom
