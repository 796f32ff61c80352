#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace relhur {

struct SweepRow {
  double param = 0.0;
  bool param_infinite = false;
  double gamma = 0.0;
  double err_est = 0.0;
};

struct SweepTable {
  std::string param_name = "param";
  std::vector<SweepRow> rows;
  std::map<std::string, double> metadata;

  bool strictly_increasing() const;
  bool strictly_decreasing() const;

  /// Header `param,gamma,err_est`, LF line endings.
  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;
};

/// Round to 12 significant digits for emission.
double round_sig12(double x);

/// 12-significant-digit text form; "inf" for infinity.
std::string format_number(double x);

}  // namespace relhur
