#include "tspecial/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "tspecial/errors.hpp"

namespace tspecial::io {
namespace {

void check_version(const Json& j, const char* what) {
  if (!j.is_object()) throw PreconditionError(std::string(what) + ": expected a JSON object");
  if (!j.contains("schema_version") || j.at("schema_version") != kSchemaVersion) {
    throw PreconditionError(std::string(what) + ": unsupported schema_version");
  }
}

template <typename T>
T field(const Json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw PreconditionError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw PreconditionError(std::string(what) + ": field '" + key + "' has the wrong type");
  }
}

Json cheb_body(const approx::ChebyshevApproximant& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"coeffs", p.coeffs}};
}

approx::ChebyshevApproximant cheb_from_body(const Json& j, const char* what) {
  approx::ChebyshevApproximant p;
  p.a = field<double>(j, "a", what);
  p.b = field<double>(j, "b", what);
  p.coeffs = field<std::vector<double>>(j, "coeffs", what);
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw PreconditionError(std::string(what) + ": " + e.what());
  }
  return p;
}

const char* source_name(tfun::EvaluatorSource s) {
  return s == tfun::EvaluatorSource::stored ? "stored" : "regenerated";
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json series_to_json(const series::PowerSeries& ps) {
  Json coefficients = Json::array();
  for (int p = 0; p <= ps.order; ++p) {
    Json terms = Json::array();
    for (const auto& [m, q] : ps[p].terms()) {
      terms.push_back({{"m", m}, {"numerator", q.get_num().get_str()}, {"denominator", q.get_den().get_str()}});
    }
    coefficients.push_back({{"power", p}, {"terms", terms}});
  }
  return Json{{"schema_version", kSchemaVersion}, {"order", ps.order}, {"coefficients", coefficients}};
}

series::PowerSeries series_from_json(const Json& j) {
  check_version(j, "series");
  const int order = field<int>(j, "order", "series");
  if (order < 0) throw PreconditionError("series: order must be non-negative");
  series::PowerSeries ps(order);
  for (const auto& entry : field<Json>(j, "coefficients", "series")) {
    const int p = field<int>(entry, "power", "series");
    if (p < 0 || p > order) throw PreconditionError("series: power outside 0..order");
    series::PiHalfRational::Terms terms;
    for (const auto& t : field<Json>(entry, "terms", "series")) {
      mpq_class q;
      try {
        q = mpq_class(mpz_class(field<std::string>(t, "numerator", "series")),
                      mpz_class(field<std::string>(t, "denominator", "series")));
      } catch (const std::invalid_argument&) {
        throw PreconditionError("series: malformed integer");
      }
      if (q.get_den() == 0) throw PreconditionError("series: zero denominator");
      q.canonicalize();
      terms[field<int>(t, "m", "series")] += q;
    }
    ps[p] = series::PiHalfRational::from_terms(std::move(terms));
  }
  return ps;
}

Json approximant_to_json(const approx::ChebyshevApproximant& p) {
  Json j{{"schema_version", kSchemaVersion}};
  j.update(cheb_body(p));
  return j;
}

approx::ChebyshevApproximant approximant_from_json(const Json& j) {
  check_version(j, "approximant");
  return cheb_from_body(j, "approximant");
}

Json monomial_to_json(const std::vector<double>& coeffs) {
  return Json{{"schema_version", kSchemaVersion}, {"coeffs", coeffs}};
}

std::vector<double> monomial_from_json(const Json& j) {
  check_version(j, "monomial");
  auto coeffs = field<std::vector<double>>(j, "coeffs", "monomial");
  if (coeffs.empty()) throw PreconditionError("monomial: no coefficients");
  return coeffs;
}

Json evaluator_to_json(const tfun::TEvaluator& ev) {
  return Json{{"schema_version", kSchemaVersion},
              {"piece1", cheb_body(ev.piece1)},
              {"piece2", cheb_body(ev.piece2)},
              {"tail_constant", ev.tail_constant},
              {"source", source_name(ev.source)}};
}

tfun::TEvaluator evaluator_from_json(const Json& j) {
  check_version(j, "evaluator");
  tfun::TEvaluator ev;
  ev.piece1 = cheb_from_body(field<Json>(j, "piece1", "evaluator"), "evaluator.piece1");
  ev.piece2 = cheb_from_body(field<Json>(j, "piece2", "evaluator"), "evaluator.piece2");
  ev.tail_constant = field<double>(j, "tail_constant", "evaluator");
  const auto source = field<std::string>(j, "source", "evaluator");
  if (source == "stored") {
    ev.source = tfun::EvaluatorSource::stored;
  } else if (source == "regenerated") {
    ev.source = tfun::EvaluatorSource::regenerated;
  } else {
    throw PreconditionError("evaluator: unknown source '" + source + "'");
  }
  ev.validate();
  return ev;
}

Json fit_to_json(const dist::FitResult& fit, const std::string& target, double fit_point) {
  return Json{{"schema_version", kSchemaVersion}, {"lambda", fit.lambda},     {"mu", fit.mu},
              {"c", fit.c},                       {"target", target},         {"fit_point", fit_point},
              {"residual", fit.residual}};
}

StoredFit fit_from_json(const Json& j) {
  check_version(j, "fit");
  StoredFit f;
  f.lambda = field<double>(j, "lambda", "fit");
  f.mu = field<double>(j, "mu", "fit");
  f.c = field<double>(j, "c", "fit");
  f.target = field<std::string>(j, "target", "fit");
  f.fit_point = field<double>(j, "fit_point", "fit");
  f.residual = field<double>(j, "residual", "fit");
  if (!(f.lambda > 0.0) || !(f.lambda + f.mu > 0.0) || !(f.c > 0.0)) {
    throw PreconditionError("fit: parameters outside the feasible region");
  }
  return f;
}

std::string comparison_csv(const std::vector<integrals::ComparisonRow>& rows) {
  std::set<std::string> names;
  for (const auto& row : rows) {
    for (const auto& [name, value] : row.approx_variants) names.insert(name);
  }
  std::ostringstream out;
  out << "schema_version,index,oracle,alt_oracle,closed_form";
  for (const auto& name : names) out << ',' << name;
  for (const auto& name : names) out << ",abs_error_" << name;
  out << ",best_reading\n";
  for (const auto& row : rows) {
    out << kSchemaVersion << ',' << row.index << ',' << format_double(row.oracle) << ','
        << (row.alt_oracle ? format_double(*row.alt_oracle) : "") << ',' << format_double(row.closed_form);
    for (const auto& name : names) {
      const auto it = row.approx_variants.find(name);
      out << ',' << (it == row.approx_variants.end() ? "" : format_double(it->second));
    }
    for (const auto& name : names) {
      const auto it = row.abs_errors.find(name);
      out << ',' << (it == row.abs_errors.end() ? "" : format_double(it->second));
    }
    out << ',' << row.best_reading << '\n';
  }
  return out.str();
}

std::string numeric_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  out << "schema_version";
  for (const auto& name : header) out << ',' << name;
  out << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw PreconditionError("numeric_csv: row width differs from header");
    out << kSchemaVersion;
    for (double v : row) out << ',' << format_double(v);
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    size_t start = 0;
    while (true) {
      const size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace tspecial::io
