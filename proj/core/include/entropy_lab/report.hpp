#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "entropy_lab/bounds.hpp"
#include "entropy_lab/exact_risk.hpp"

namespace entropy_lab {

/// Shortest decimal text that round-trips to the same double (CSV cell
/// format).
std::string format_shortest(double value);

/// Fixed-point text with exactly `digits` significant digits, trailing
/// zeros kept ("0.693147180560" for ln 2 at 12 digits).
std::string format_significant(double value, int digits);

/// One measured-risk CSV row. `family` tags the witness distribution
/// ("point_mass", "uniform", "two_level", "explicit"); heavy_mass is set for
/// two-level rows.
struct RiskRow {
  int n = 0;
  int support_size = 0;
  double a = 0.0;
  std::string estimator;
  std::string family;
  RiskReport report;
  std::uint64_t seed = 0;
};

std::string risk_csv_header();
std::string risk_csv_row(const RiskRow& row);

std::string bounds_csv_header();
std::string bounds_csv_row(const BoundProfile& profile, std::optional<double> thm4_bias);

/// Sweep rows are a risk row joined with the bound profile at the same
/// (n, S, a).
std::string sweep_csv_header();
std::string sweep_csv_row(const RiskRow& row, const BoundProfile& profile,
                          std::optional<double> thm4_bias);

}  // namespace entropy_lab
