#include "tspecial/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tspecial/checks.hpp"
#include "tspecial/dist.hpp"
#include "tspecial/errors.hpp"
#include "tspecial/integrals.hpp"
#include "tspecial/io.hpp"
#include "tspecial/kernels.hpp"
#include "tspecial/series.hpp"
#include "tspecial/tfun.hpp"

namespace tspecial::cli {
namespace {

using io::Json;

constexpr double kFitLambda = 0.1671645;
constexpr double kFitMu = 0.8449657;
constexpr double kNominalHeuristic = 0.97216864;

struct Range {
  double a = 0.0;
  double b = 0.0;
  double h = 0.0;
};

// Options shared by every subcommand.
struct Common {
  bool json = false;
  std::string out_path;
};

struct Options {
  Common common;
  std::string fn = "T";
  double x = 1.0;
  std::string range;
  std::string interval = "0:1.5";
  std::string kind = "curve";
  std::optional<double> lambda;
  std::optional<double> mu;
  double a = 0.75;
  std::optional<double> a_integrals;
  std::uint64_t seed = 0;
  int n = 1000;
  int degree = 11;
  int nodes = 64;
  bool monomial = false;
  std::string build_evaluator;
  std::string evaluator_path;
  std::string target = "erf";
  double x0 = 1.0;
  std::string slope = "kernel";
  bool freeze_mu = false;
  std::string table = "i2k";
  int max_index = 3;
  int criterion = 0;
};

std::vector<double> split_numbers(const std::string& text, size_t expected, const char* what) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ':')) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || !std::isfinite(v)) {
      throw PreconditionError(std::string(what) + ": cannot parse '" + text + "'");
    }
    values.push_back(v);
  }
  if (values.size() != expected) throw PreconditionError(std::string(what) + ": expected " + std::to_string(expected) + " fields in '" + text + "'");
  return values;
}

Range parse_range(const std::string& text) {
  const auto v = split_numbers(text, 3, "--range");
  Range r{v[0], v[1], v[2]};
  if (!(r.h > 0.0)) throw PreconditionError("--range: step must be positive");
  if (r.b < r.a) throw PreconditionError("--range: end must not precede start");
  return r;
}

std::vector<double> grid(const Range& r) {
  // The small allowance keeps b itself when (b - a)/h is an integer up to rounding.
  const long count = static_cast<long>(std::floor((r.b - r.a) / r.h + 1e-9)) + 1;
  if (count > 10000000) throw PreconditionError("--range: more than 1e7 points");
  std::vector<double> xs;
  xs.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) xs.push_back(r.a + static_cast<double>(i) * r.h);
  return xs;
}

void emit(const Common& common, const std::string& text, std::ostream& out) {
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_path);
  if (!file) throw PreconditionError("cannot open '" + common.out_path + "' for writing");
  file << text;
  if (!file) throw PreconditionError("failed writing '" + common.out_path + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::optional<tfun::TEvaluator> load_evaluator(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream file(path);
  if (!file) throw PreconditionError("cannot open evaluator '" + path + "'");
  Json j;
  try {
    j = Json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("evaluator '" + path + "': " + e.what());
  }
  return io::evaluator_from_json(j);
}

dist::TDistParams dist_params(const Options& o) {
  return dist::make_params(o.lambda.value_or(kFitLambda), o.mu.value_or(kFitMu));
}

// Evaluates the selected function on a set of points; maxwell adds the fitted
// approximation and its gap as extra columns.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Table evaluate_fn(const Options& o, const std::vector<double>& xs) {
  Table t;
  t.header = {"x", o.fn};
  const auto ev = load_evaluator(o.evaluator_path);
  auto require_nonnegative = [&](double x) {
    if (std::isnan(x) || x < 0.0) throw DomainError(o.fn + ": x must be >= 0, got " + io::format_double(x));
  };
  if (o.fn == "T" || o.fn == "Tref") {
    const bool fast = o.fn == "T" && ev.has_value();
    for (double x : xs) {
      require_nonnegative(x);
      t.rows.push_back({x, fast ? tfun::t_eval(*ev, x) : tfun::t_reference(x)});
    }
  } else if (o.fn == "erf") {
    for (double x : xs) t.rows.push_back({x, kernels::erf(x)});
  } else if (o.fn == "pdf" || o.fn == "cdf") {
    const auto p = dist_params(o);
    for (double x : xs) t.rows.push_back({x, o.fn == "pdf" ? dist::pdf(p, x) : dist::cdf(p, x)});
  } else if (o.fn == "maxwell") {
    t.header = {"x", "maxwell", "maxwell_approx", "abs_gap"};
    const auto m = dist::fit_maxwell(o.a);
    for (double x : xs) {
      const double exact = dist::maxwell_cdf(o.a, x);
      const double approx = dist::maxwell_approx(m, x);
      t.rows.push_back({x, exact, approx, std::fabs(approx - exact)});
    }
  } else {
    throw PreconditionError("unknown function '" + o.fn + "'");
  }
  return t;
}

Json table_json(const Table& t) {
  return Json{{"schema_version", io::kSchemaVersion}, {"columns", t.header}, {"rows", t.rows}};
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto t = evaluate_fn(o, {o.x});
  const auto& row = t.rows.front();
  if (o.common.json) {
    Json j{{"schema_version", io::kSchemaVersion}, {"fn", o.fn}, {"x", o.x}, {"value", row[1]}};
    if (o.fn == "maxwell") {
      j["a"] = o.a;
      j["approx"] = row[2];
    }
    if (o.fn == "pdf" || o.fn == "cdf") {
      j["lambda"] = o.lambda.value_or(kFitLambda);
      j["mu"] = o.mu.value_or(kFitMu);
    }
    emit(o.common, dump(j), out);
  } else {
    emit(o.common, io::format_double(row[1]) + "\n", out);
  }
  return kExitOk;
}

Table euler_table() {
  Table t{{"h", "x", "euler", "exact", "abs_error"}, {}};
  for (int n : {10, 50}) {
    const auto trace = quadrature::euler_scheme(tfun::product_integrand, 0.0, 0.0, 1.0 / n, n);
    for (const auto& [x, y] : trace.samples) {
      const double e = kernels::erf(x);
      const double exact = kSqrtPi / 4.0 * e * e;
      t.rows.push_back({trace.h, x, y, exact, std::fabs(y - exact)});
    }
  }
  return t;
}

Table partial_sum_table(double x) {
  Table t{{"N", "partial_sum", "reference", "abs_error"}, {}};
  const auto c = series::t_series(25, false);
  const double ref = tfun::t_reference(x);
  for (int n = 1; n <= 25; ++n) {
    const double s = series::partial_sum(c, x, n);
    t.rows.push_back({static_cast<double>(n), s, ref, std::fabs(s - ref)});
  }
  return t;
}

int cmd_tabulate(const Options& o, std::ostream& out) {
  Table t;
  if (o.kind == "curve") {
    const std::string fallback = o.fn == "maxwell" ? "0:5:0.01" : "0:10:0.01";
    t = evaluate_fn(o, grid(parse_range(o.range.empty() ? fallback : o.range)));
  } else if (o.kind == "euler") {
    t = euler_table();
  } else if (o.kind == "partial-sums") {
    t = partial_sum_table(o.x);
  } else {
    throw PreconditionError("unknown table kind '" + o.kind + "'");
  }
  emit(o.common, o.common.json ? dump(table_json(t)) : io::numeric_csv(t.header, t.rows), out);
  return kExitOk;
}

int cmd_constants(const Options& o, std::ostream& out) {
  const double quad = tfun::t_infinity(tfun::TInfinityMode::quadrature);
  const double literal = tfun::t_infinity(tfun::TInfinityMode::heuristic);
  const double product = kSqrtPi / 4.0;
  if (o.common.json) {
    emit(o.common,
         dump(Json{{"schema_version", io::kSchemaVersion},
                   {"t_infinity_digits", tfun::t_infinity_digits()},
                   {"t_infinity_quadrature", quad},
                   {"heuristic_nominal", kNominalHeuristic},
                   {"heuristic_literal", literal},
                   {"product_constant", product}}),
         out);
  } else {
    std::ostringstream s;
    s << "t_infinity_digits " << tfun::t_infinity_digits() << "\n"
      << "t_infinity_quadrature " << io::format_double(quad) << "\n"
      << "heuristic_nominal " << io::format_double(kNominalHeuristic) << "\n"
      << "heuristic_literal " << io::format_double(literal) << "\n"
      << "product_constant " << io::format_double(product) << "\n";
    emit(o.common, s.str(), out);
  }
  return kExitOk;
}

int cmd_cheb_fit(const Options& o, std::ostream& out) {
  if (!o.build_evaluator.empty()) {
    tfun::EvaluatorSource source;
    if (o.build_evaluator == "stored") {
      source = tfun::EvaluatorSource::stored;
    } else if (o.build_evaluator == "regenerated") {
      source = tfun::EvaluatorSource::regenerated;
    } else {
      throw PreconditionError("unknown evaluator source '" + o.build_evaluator + "'");
    }
    emit(o.common, dump(io::evaluator_to_json(tfun::build_evaluator(source))), out);
    return kExitOk;
  }

  const auto ab = split_numbers(o.interval, 2, "--interval");
  quadrature::Integrand f;
  if (o.fn == "T" || o.fn == "Tref") {
    if (ab[0] < 0.0) throw DomainError("cheb-fit: T is fitted on x >= 0 only");
    f = [](double x) { return tfun::t_reference(x); };
  } else if (o.fn == "erf") {
    f = [](double x) { return kernels::erf(x); };
  } else {
    throw PreconditionError("cheb-fit: unsupported function '" + o.fn + "'");
  }
  const auto p = approx::cheb_fit(f, ab[0], ab[1], o.degree, o.nodes);
  if (o.monomial) {
    const auto mono = approx::cheb_to_monomial(p);
    if (o.common.json) {
      emit(o.common, dump(io::monomial_to_json(mono)), out);
    } else {
      Table t{{"power", "coefficient"}, {}};
      for (size_t i = 0; i < mono.size(); ++i) t.rows.push_back({static_cast<double>(i), mono[i]});
      emit(o.common, io::numeric_csv(t.header, t.rows), out);
    }
  } else if (o.common.json) {
    emit(o.common, dump(io::approximant_to_json(p)), out);
  } else {
    Table t{{"index", "coefficient"}, {}};
    for (size_t i = 0; i < p.coeffs.size(); ++i) t.rows.push_back({static_cast<double>(i), p.coeffs[i]});
    emit(o.common, io::numeric_csv(t.header, t.rows), out);
  }
  return kExitOk;
}

int cmd_fit_dist(const Options& o, std::ostream& out) {
  dist::FitOptions opt;
  if (o.slope == "kernel") {
    opt.slope = dist::SlopeMatch::kernel;
  } else if (o.slope == "density") {
    opt.slope = dist::SlopeMatch::density;
  } else {
    throw PreconditionError("unknown slope convention '" + o.slope + "'");
  }
  opt.freeze_mu = o.freeze_mu;

  dist::FitResult fit;
  std::string target;
  if (o.target == "erf") {
    fit = dist::fit_to_target([](double x) { return kernels::erf(x); },
                              [](double x) { return kTwoOverSqrtPi * std::exp(-x * x); }, o.x0,
                              o.lambda.value_or(0.2), o.mu.value_or(0.8), opt);
    target = "erf";
  } else if (o.target == "maxwell") {
    fit = dist::fit_maxwell(o.a, o.x0, opt).fit;
    target = "erf(x/(sqrt(2)*" + io::format_double(o.a) + "))";
  } else {
    throw PreconditionError("unknown fit target '" + o.target + "'");
  }

  if (o.common.json) {
    emit(o.common, dump(io::fit_to_json(fit, target, o.x0)), out);
  } else {
    std::ostringstream s;
    s << "target " << target << "\n"
      << "fit_point " << io::format_double(o.x0) << "\n"
      << "lambda " << io::format_double(fit.lambda) << "\n"
      << "mu " << io::format_double(fit.mu) << "\n"
      << "c " << io::format_double(fit.c) << "\n"
      << "inverse_c " << io::format_double(1.0 / fit.c) << "\n"
      << "residual " << io::format_double(fit.residual) << "\n"
      << "iterations " << fit.iterations << "\n";
    emit(o.common, s.str(), out);
  }
  return kExitOk;
}

int cmd_integrals_table(const Options& o, std::ostream& out) {
  if (o.max_index < 1) throw PreconditionError("--max must be at least 1");
  std::vector<integrals::ComparisonRow> rows;
  if (o.table == "i2k") {
    rows = integrals::i2k_table(o.max_index, o.a_integrals.value_or(integrals::default_a()));
  } else if (o.table == "in") {
    rows = integrals::i_n_table(o.max_index);
  } else {
    throw PreconditionError("unknown table '" + o.table + "'");
  }
  if (!o.common.json) {
    emit(o.common, io::comparison_csv(rows), out);
    return kExitOk;
  }
  Json list = Json::array();
  for (const auto& r : rows) {
    Json j{{"index", r.index},
           {"oracle", r.oracle},
           {"alt_oracle", r.alt_oracle ? Json(*r.alt_oracle) : Json(nullptr)},
           {"closed_form", r.closed_form},
           {"variants", r.approx_variants},
           {"abs_errors", r.abs_errors},
           {"best_reading", r.best_reading}};
    list.push_back(std::move(j));
  }
  emit(o.common, dump(Json{{"schema_version", io::kSchemaVersion}, {"table", o.table}, {"rows", list}}), out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<checks::CheckResult> results;
  if (o.criterion == 0) {
    results = checks::run_all();
  } else {
    results = checks::run_criterion(o.criterion);
  }
  const Json report = checks::report_json(results);
  if (o.common.json || !o.common.out_path.empty()) {
    emit(o.common, dump(report), out);
  } else {
    std::ostringstream s;
    for (const auto& r : results) {
      s << (r.pass ? "PASS " : "FAIL ") << r.criterion << ' ' << r.name << " measured="
        << io::format_double(r.measured) << " expected=" << io::format_double(r.expected) << ' '
        << checks::rule_name(r.rule) << '=' << io::format_double(r.tolerance);
      if (!r.error.empty()) s << " error=" << r.error;
      s << "\n";
    }
    out << s.str();
  }
  return report.at("pass").get<bool>() ? kExitOk : kExitNumerical;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const auto p = dist_params(o);
  const auto draws = dist::sample(p, o.seed, o.n);
  if (o.common.json) {
    emit(o.common,
         dump(Json{{"schema_version", io::kSchemaVersion},
                   {"lambda", p.lambda},
                   {"mu", p.mu},
                   {"seed", o.seed},
                   {"n", o.n},
                   {"draws", draws}}),
         out);
  } else {
    std::vector<std::vector<double>> rows;
    rows.reserve(draws.size());
    for (double x : draws) rows.push_back({x});
    emit(o.common, io::numeric_csv({"x"}, rows), out);
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Common& common) {
  sub->add_flag("--json", common.json, "Machine-readable JSON output");
  sub->add_option("--out", common.out_path, "Write the output to this file instead of stdout");
}

const std::vector<std::string> kFunctions{"T", "Tref", "erf", "pdf", "cdf", "maxwell"};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and verify T(x) = int_0^x exp(-t^2 erf t) dt and its distribution family"};
  app.name("tspecial");
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate one function at one point");
  eval->add_option("--fn", o.fn, "Function: T, Tref, erf, pdf, cdf, maxwell")
      ->check(CLI::IsMember(kFunctions))
      ->capture_default_str();
  eval->add_option("--x", o.x, "Argument")->capture_default_str();

  auto* tab = app.add_subcommand("tabulate", "Tabulate a function on a grid as CSV");
  tab->add_option("--fn", o.fn, "Function: T, Tref, erf, pdf, cdf, maxwell")
      ->check(CLI::IsMember(kFunctions))
      ->capture_default_str();
  tab->add_option("--range", o.range, "Grid a:b:h (default 0:10:0.01, maxwell 0:5:0.01)");
  tab->add_option("--kind", o.kind, "curve, euler (h = 1/10 and 1/50) or partial-sums (N <= 25 at --x)")
      ->check(CLI::IsMember({"curve", "euler", "partial-sums"}))
      ->capture_default_str();
  tab->add_option("--x", o.x, "Point for partial-sums")->capture_default_str();

  for (auto* sub : {eval, tab}) {
    sub->add_option("--lambda", o.lambda, "lambda for pdf/cdf (default 0.1671645)");
    sub->add_option("--mu", o.mu, "mu for pdf/cdf (default 0.8449657)");
    sub->add_option("--a", o.a, "Maxwell scale a in (0, 1]")->capture_default_str();
    sub->add_option("--evaluator", o.evaluator_path, "Evaluator JSON used for T instead of quadrature");
  }

  auto* constants = app.add_subcommand("constants", "Print T(inf) and related constants");

  auto* cheb = app.add_subcommand("cheb-fit", "Chebyshev fit of T or erf, or a full evaluator");
  cheb->add_option("--fn", o.fn, "T or erf")->check(CLI::IsMember({"T", "Tref", "erf"}))->capture_default_str();
  cheb->add_option("--interval", o.interval, "Interval a:b")->capture_default_str();
  cheb->add_option("--degree", o.degree, "Degree")->check(CLI::Range(0, 200))->capture_default_str();
  cheb->add_option("--nodes", o.nodes, "Sample nodes")->check(CLI::Range(1, 100000))->capture_default_str();
  cheb->add_flag("--monomial", o.monomial, "Emit monomial coefficients");
  cheb->add_option("--build-evaluator", o.build_evaluator, "Emit evaluator JSON: stored or regenerated")
      ->check(CLI::IsMember({"stored", "regenerated"}));

  auto* fit = app.add_subcommand("fit-dist", "Fit lambda and mu to a target CDF at one point");
  fit->add_option("--target", o.target, "erf or maxwell")->check(CLI::IsMember({"erf", "maxwell"}))->capture_default_str();
  fit->add_option("--x0", o.x0, "Fit point")->capture_default_str();
  fit->add_option("--lambda", o.lambda, "Initial lambda for erf (default 0.2)");
  fit->add_option("--mu", o.mu, "Initial mu for erf (default 0.8)");
  fit->add_option("--a", o.a, "Maxwell scale a in (0, 1]")->capture_default_str();
  fit->add_option("--slope", o.slope, "Slope condition: kernel or density")
      ->check(CLI::IsMember({"kernel", "density"}))
      ->capture_default_str();
  fit->add_flag("--freeze-mu", o.freeze_mu, "Hold mu at 0 and fit lambda from the value alone");

  auto* ints = app.add_subcommand("integrals-table", "Comparison table of erf-power integrals");
  ints->add_option("--table", o.table, "i2k or in")->check(CLI::IsMember({"i2k", "in"}))->capture_default_str();
  ints->add_option("--max", o.max_index, "Largest index")->check(CLI::Range(1, 8))->capture_default_str();
  ints->add_option("--a", o.a_integrals, "Gaussian constant a (default (1 + pi)^(2/3) ln(2)^2)");

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_option("--criterion", o.criterion, "Single criterion 1-18 (default all)")->check(CLI::Range(1, 18));

  auto* sample = app.add_subcommand("sample", "Draw from T_{lambda,mu} by inverse transform");
  sample->add_option("--lambda", o.lambda, "lambda (default 0.1671645)");
  sample->add_option("--mu", o.mu, "mu (default 0.8449657)");
  sample->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  sample->add_option("--n", o.n, "Number of draws")->check(CLI::Range(1, 10000000))->capture_default_str();

  for (auto* sub : {eval, tab, constants, cheb, fit, ints, verify, sample}) add_common(sub, o.common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (tab->parsed()) return cmd_tabulate(o, out);
    if (constants->parsed()) return cmd_constants(o, out);
    if (cheb->parsed()) return cmd_cheb_fit(o, out);
    if (fit->parsed()) return cmd_fit_dist(o, out);
    if (ints->parsed()) return cmd_integrals_table(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sample->parsed()) return cmd_sample(o, out);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FitError& e) {
    err << "fit failed: " << e.what() << " after " << e.trace().size() << " iterates\n";
    return kExitNumerical;
  } catch (const AccuracyError& e) {
    err << "accuracy not reached: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace tspecial::cli
