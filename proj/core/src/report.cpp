#include "entropy_lab/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "entropy_lab/errors.hpp"

namespace entropy_lab {

std::string format_shortest(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_significant(double value, int digits) {
  if (digits < 1 || digits > 17) throw validation_error("digits must be in [1, 17]");
  if (value == 0.0 || !std::isfinite(value)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
  }
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
  const int decimals = digits - 1 - exponent;
  char buf[512];
  if (decimals >= 0) {
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  } else {
    // magnitude so large that significant digits end before the decimal point
    std::snprintf(buf, sizeof(buf), "%.*e", digits - 1, value);
  }
  return buf;
}

namespace {

std::string cell(const std::optional<double>& value) {
  return value ? format_shortest(*value) : std::string();
}

constexpr const char* kRiskColumns = "n,S,a,estimator,family,method,bias,variance,mse,std_error,seed";
constexpr const char* kBoundColumns =
    "thm1_bias,thm1_var,thm1_total,thm2_lower_main,thm2_c_term_coefficient,"
    "thm2_small_n_value,thm3_lower,mle_upper,mle_lower_main,var_upper,"
    "appendix_bias_upper,thm4_bias_upper,regime_flags";

std::string risk_cells(const RiskRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.support_size << ',' << format_shortest(row.a) << ','
      << row.estimator << ',' << row.family << ',' << risk_method_name(row.report.method)
      << ',' << format_shortest(row.report.bias) << ',' << format_shortest(row.report.variance)
      << ',' << format_shortest(row.report.mse) << ',' << cell(row.report.std_error) << ','
      << row.seed;
  return out.str();
}

std::string bound_cells(const BoundProfile& p, const std::optional<double>& thm4_bias) {
  std::ostringstream out;
  out << cell(p.thm1_bias) << ',' << cell(p.thm1_var) << ',' << cell(p.thm1_total) << ','
      << cell(p.thm2_lower_main) << ',' << cell(p.thm2_c_term_coefficient) << ','
      << cell(p.thm2_small_n_value) << ',' << cell(p.thm3_lower) << ','
      << format_shortest(p.mle_upper) << ',' << cell(p.mle_lower_main) << ','
      << format_shortest(p.var_upper) << ',' << cell(p.appendix_bias) << ','
      << cell(thm4_bias) << ',';
  for (std::size_t i = 0; i < p.regime_flags.size(); ++i) {
    if (i) out << ';';
    out << p.regime_flags[i];
  }
  return out.str();
}

}  // namespace

std::string risk_csv_header() { return kRiskColumns; }

std::string risk_csv_row(const RiskRow& row) { return risk_cells(row); }

std::string bounds_csv_header() { return std::string("n,S,a,") + kBoundColumns; }

std::string bounds_csv_row(const BoundProfile& profile, std::optional<double> thm4_bias) {
  std::ostringstream out;
  out << profile.n << ',' << profile.support_size << ',' << format_shortest(profile.a) << ','
      << bound_cells(profile, thm4_bias);
  return out.str();
}

std::string sweep_csv_header() {
  return std::string(kRiskColumns) + ',' + kBoundColumns;
}

std::string sweep_csv_row(const RiskRow& row, const BoundProfile& profile,
                          std::optional<double> thm4_bias) {
  return risk_cells(row) + ',' + bound_cells(profile, thm4_bias);
}

}  // namespace entropy_lab
