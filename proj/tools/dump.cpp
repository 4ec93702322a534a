// Profile dumps for external plotting: radial profiles on an s-grid and
// the zero-mode classification table.
//
// Exit codes: 0 success, 2 usage error, 3 internal error.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinc/profiles.hpp"

namespace {

spinc::ProfileGrid parse_grid(const std::string& text) {
  spinc::ProfileGrid g;
  std::istringstream in(text);
  char c1, c2;
  if (!(in >> g.a >> c1 >> g.b >> c2 >> g.k) || c1 != ',' || c2 != ',' || g.k < 2 ||
      !(g.b > g.a) || !(g.a > 0.0))
    throw std::invalid_argument("--grid expects a,b,k with 0 < a < b and k >= 2");
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dump: radial profiles and mode tables as CSV"};
  app.set_config("--config", "", "flat key=value configuration file");

  std::string profile = "eh", grid_spec = "0.1,20,400", out_path;
  int n = 1, ell = 1, ell_max = 3, twoN = 0, twoM = 0;
  double kappa = 1.0;

  app.add_option("--profile", profile, "eh|calabi|mode|modes|l2")
      ->check(CLI::IsMember({"eh", "calabi", "mode", "modes", "l2"}));
  app.add_option("--grid", grid_spec, "s-grid as a,b,k");
  app.add_option("--n", n, "base dimension for the calabi profile and tables")->check(CLI::Range(1, 8));
  app.add_option("--kappa", kappa, "metric parameter kappa");
  app.add_option("--ell", ell, "twist flux of the selected mode");
  app.add_option("--ell-max", ell_max, "largest flux in the mode table");
  app.add_option("--twoN", twoN, "2N of the selected mode");
  app.add_option("--twoM", twoM, "2m of the selected mode");
  app.add_option("--out", out_path, "output path (default $SPINC_OUTPUT_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    spinc::ProfileGrid grid = parse_grid(grid_spec);
    std::string csv;
    if (profile == "eh")
      csv = spinc::eh_profile_csv(grid, kappa);
    else if (profile == "calabi")
      csv = spinc::calabi_profile_csv(grid, n, kappa);
    else if (profile == "mode")
      csv = spinc::mode_profile_csv(grid, twoN, twoM, ell, kappa);
    else if (profile == "modes")
      csv = spinc::mode_table_csv(n, ell_max, kappa);
    else
      csv = spinc::l2_table_csv(n, ell_max, kappa);

    if (out_path.empty()) {
      const char* dir = std::getenv("SPINC_OUTPUT_DIR");
      out_path = std::string(dir ? dir : ".") + "/profile-" + profile + ".csv";
    }
    spinc::write_atomically(out_path, csv);
    std::cout << "profile written to " << out_path << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
