#include "relhur/sweep_table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace relhur {

double round_sig12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

bool SweepTable::strictly_increasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].gamma > rows[i - 1].gamma)) return false;
  }
  return true;
}

bool SweepTable::strictly_decreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].gamma < rows[i - 1].gamma)) return false;
  }
  return true;
}

void SweepTable::write_csv(std::ostream& out) const {
  out << "param,gamma,err_est\n";
  for (const auto& r : rows) {
    out << (r.param_infinite ? std::string("inf") : format_number(r.param)) << ',' << format_number(r.gamma) << ','
        << format_number(r.err_est) << '\n';
  }
}

nlohmann::json SweepTable::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    if (r.param_infinite) {
      row[param_name] = "inf";
    } else {
      row[param_name] = round_sig12(r.param);
    }
    row["gamma"] = round_sig12(r.gamma);
    row["err_est"] = round_sig12(r.err_est);
    rows_json.push_back(row);
  }
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [k, v] : metadata) meta[k] = round_sig12(v);
  return {{"param", param_name}, {"rows", rows_json}, {"metadata", meta}};
}

}  // namespace relhur
