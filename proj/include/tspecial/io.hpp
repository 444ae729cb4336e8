#pragma once

// JSON and CSV forms of the library's data types. Every JSON document and CSV table carries a
// schema_version; readers reject other versions with PreconditionError.

#include <string>
#include <vector>

#include <json.hpp>

#include "tspecial/approx.hpp"
#include "tspecial/dist.hpp"
#include "tspecial/integrals.hpp"
#include "tspecial/series.hpp"
#include "tspecial/tfun.hpp"

namespace tspecial::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Decimal text with 17 significant digits, "nan"/"inf"/"-inf" otherwise.
std::string format_double(double x);

/// {schema_version, order, coefficients: [{power, terms: [{m, numerator, denominator}]}]}.
/// Numerators and denominators are decimal strings so no digit is lost.
Json series_to_json(const series::PowerSeries& ps);
series::PowerSeries series_from_json(const Json& j);

/// {schema_version, a, b, coeffs}
Json approximant_to_json(const approx::ChebyshevApproximant& p);
approx::ChebyshevApproximant approximant_from_json(const Json& j);

/// {schema_version, coeffs} in ascending powers.
Json monomial_to_json(const std::vector<double>& coeffs);
std::vector<double> monomial_from_json(const Json& j);

/// {schema_version, piece1, piece2, tail_constant, source}
Json evaluator_to_json(const tfun::TEvaluator& ev);
tfun::TEvaluator evaluator_from_json(const Json& j);

/// {schema_version, lambda, mu, c, target, fit_point, residual}
Json fit_to_json(const dist::FitResult& fit, const std::string& target, double fit_point);

struct StoredFit {
  double lambda = 0.0;
  double mu = 0.0;
  double c = 0.0;
  std::string target;
  double fit_point = 0.0;
  double residual = 0.0;
};
StoredFit fit_from_json(const Json& j);

/// Columns: schema_version, index, oracle, alt_oracle, closed_form, one column
/// per variant, one abs_error_<variant> column per variant, best_reading.
/// Variant names are the union over all rows; absent cells are empty.
std::string comparison_csv(const std::vector<integrals::ComparisonRow>& rows);

/// A schema_version column, then the header and rows of numbers through format_double.
std::string numeric_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

/// Splits CSV text into rows of cells (no quoting: cells never contain commas).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace tspecial::io
