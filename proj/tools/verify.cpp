// Batch verification front end: runs identity suites over seeded sample
// sweeps and emits a machine-readable report.
//
// Exit codes: 0 all checks pass, 1 at least one check failed,
//             2 usage error, 3 internal numeric error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "spinc/suites.hpp"

namespace {

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

std::string default_output(const spinc::RunConfig& cfg) {
  const char* dir = std::getenv("SPINC_OUTPUT_DIR");
  std::string base = dir ? dir : ".";
  return base + "/report-" + to_string(cfg.suite) + "." + cfg.format;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verify: certify the closed-form geometry and Dirac identities"};
  app.set_config("--config", "", "flat key=value configuration file");

  std::string suite = "all";
  spinc::RunConfig cfg;
  std::vector<std::string> tol_specs;

  app.add_option("--suite", suite, "eh|calabi|dirac|quotient|l2|flux|all")
      ->check(CLI::IsMember({"eh", "calabi", "dirac", "quotient", "l2", "flux", "all"}));
  app.add_option("--n", cfg.n, "base dimension for the general-n suites")->check(CLI::Range(1, 8));
  app.add_option("--kappa", cfg.kappa, "metric parameter kappa");
  app.add_option("--ell-max", cfg.ell_max, "largest twist flux swept");
  app.add_option("--seed", cfg.seed, "random seed for the sample sweep");
  app.add_option("--samples", cfg.samples, "sample points per identity");
  app.add_option("--out", cfg.output, "report path (default $SPINC_OUTPUT_DIR)");
  app.add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", tol_specs, "tolerance override, name=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.suite = spinc::suite_from_string(suite);
    for (const auto& spec : tol_specs) {
      auto eq = spec.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--tol expects name=value");
      cfg.tolerances[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
    }
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    spinc::Report rep = spinc::suites::run(cfg);
    rep.timestamp = iso_timestamp();

    for (const auto& r : rep.records)
      std::printf("%-4s %-44s residual %.3e  tol %.1e  %s\n", r.pass() ? "ok" : "FAIL",
                  r.id.c_str(), r.max_residual, r.tolerance, r.details.c_str());
    std::printf("%d passed, %d failed\n", rep.passed(), rep.failed());

    std::string path = cfg.output.empty() ? default_output(cfg) : cfg.output;
    spinc::write_atomically(path, spinc::serialize(rep));
    std::printf("report written to %s\n", path.c_str());
    return rep.failed() == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
