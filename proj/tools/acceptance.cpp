// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is 0 only when every selected criterion passes.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "tspecial/checks.hpp"
#include "tspecial/io.hpp"

using namespace tspecial;

namespace {

std::string failure_detail(const checks::CheckResult& r) {
  if (!r.error.empty()) return r.name + ": " + r.error;
  return r.name + ": measured " + io::format_double(r.measured) + ", expected " + io::format_double(r.expected) +
         " (" + checks::rule_name(r.rule) + " " + io::format_double(r.tolerance) + ")";
}

bool report(const checks::Criterion& c) {
  const auto results = checks::run_criterion(c.id);
  bool pass = true;
  std::string detail;
  for (const auto& r : results) {
    if (r.pass) continue;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + failure_detail(r);
  }
  std::printf("%s criterion %2d  %s", pass ? "PASS" : "FAIL", c.id, c.title.c_str());
  if (!pass) std::printf("  [%s]", detail.c_str());
  std::printf("\n");
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-18)")->check(CLI::Range(1, 18));
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const auto& c : checks::criteria()) {
    if (only != 0 && c.id != only) continue;
    all = report(c) && all;
  }
  return all ? 0 : 1;
}
