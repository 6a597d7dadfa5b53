#include "tdom/run_report.hpp"

#include <cmath>

#include "tdom/series_json.hpp"

namespace tdom {

namespace {

void emit(const OrderedJson& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad_in + nlohmann::json(it.key()).dump() + ": ";
        emit(it.value(), out, indent + 1);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad_in;
        emit(j[i], out, indent + 1);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x))
        out += format_real17(x);
      else
        out += nlohmann::json(format_real17(x)).dump();
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_report_json(const OrderedJson& j) {
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace tdom
