#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fanodelta/fanodelta.h"

namespace {

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool deep_from_env() {
  const char* v = std::getenv("FANO_DELTA_DEEP");
  return v && std::string(v) == "1";
}

/// Prints the result and returns the process exit code.
int emit(fd_status status, fd_result* result, bool json) {
  if (status == FD_OK || (status == FD_ERR_ORACLE && *fd_result_json(result) != '\0')) {
    std::cout << (json ? fd_result_json(result) : fd_result_text(result));
  }
  if (status != FD_OK) std::cerr << "error: " << fd_result_error(result) << '\n';
  fd_result_free(result);
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact delta invariants of projective bundles and cones over Fano bases"};
  app.set_version_flag("--version", fd_version());
  app.require_subcommand(0, 1);

  std::optional<std::string> check_path;
  app.add_option("--check", check_path, "Re-run a JSON result file and require identical output");

  bool json = false;

  int n = 0;
  std::string r, delta_v = "ge1", a = "0", b = "0", c = "0";

  auto* bundle = app.add_subcommand("bundle", "Delta invariant of P(L^-1 + O) with boundary a V0 + b Vinf");
  bundle->add_option("--n", n, "Dimension of the base")->required();
  bundle->add_option("--r", r, "Slope r with L ~ -(1/r) K_V")->required();
  bundle->add_option("--delta-v", delta_v, "delta(V): ge1 or an exact fraction")->required();
  bundle->add_option("--a", a, "Coefficient of V0")->capture_default_str();
  bundle->add_option("--b", b, "Coefficient of Vinf")->capture_default_str();
  bundle->add_flag("--json", json, "Emit JSON");

  auto* cone = app.add_subcommand("cone", "Delta invariant of the projective cone with boundary c Vinf");
  cone->add_option("--n", n, "Dimension of the base")->required();
  cone->add_option("--r", r, "Slope r with L ~ -(1/r) K_V")->required();
  cone->add_option("--delta-v", delta_v, "delta(V): ge1 or an exact fraction")->required();
  cone->add_option("--c", c, "Coefficient of Vinf")->capture_default_str();
  cone->add_flag("--json", json, "Emit JSON");

  int d = 0, i = 0, k = 0, l = 0;
  std::string delta_v0 = "ge1";
  auto* iterate = app.add_subcommand("cone-iterate", "Cone iterated i times over a degree-d hypersurface");
  iterate->add_option("--n", n, "Dimension of the hypersurface")->required();
  iterate->add_option("--d", d, "Degree, 2 <= d <= n+1")->required();
  iterate->add_option("--i", i, "Number of cone iterations")->required();
  iterate->add_option("--delta-v0", delta_v0, "delta of the hypersurface: ge1 or an exact fraction")
      ->capture_default_str();
  iterate->add_flag("--json", json, "Emit JSON");

  std::optional<std::string> delta_pair;
  auto* branched = app.add_subcommand("branched-cone", "Cone over the cover x_{n+1}^k x_{n+2}^{d-k} = g_d");
  branched->add_option("--n", n, "Dimension")->required();
  branched->add_option("--k", k, "Branching multiplicity, k >= 2")->required();
  branched->add_option("--d", d, "Degree of g_d")->required();
  branched->add_option("--l", l, "Auxiliary integer l")->required();
  branched->add_option("--delta-pair", delta_pair, "delta of the branch pair (needed unless n+1<=d<=n+2)");
  branched->add_flag("--json", json, "Emit JSON");

  std::string lambda;
  std::optional<std::string> angle_a;
  bool base_semistable = true, divisor_semistable = true, base_polystable = false, divisor_polystable = false;
  auto* angle = app.add_subcommand("angle", "K-semistable angle range of (V, a S) with S ~ -lambda K_V");
  angle->add_option("--n", n, "Dimension of V")->required();
  angle->add_option("--lambda", lambda, "lambda > 0")->required();
  angle->add_option("--a", angle_a, "Classify this angle");
  angle->add_option("--base-semistable", base_semistable, "V is K-semistable")->capture_default_str();
  angle->add_option("--divisor-semistable", divisor_semistable, "S is K-semistable")->capture_default_str();
  angle->add_flag("--base-polystable", base_polystable, "V is K-polystable");
  angle->add_flag("--divisor-polystable", divisor_polystable, "S is K-polystable");
  angle->add_flag("--json", json, "Emit JSON");

  std::optional<std::string> beta, csv_path;
  std::string mu = "1";
  int samples = 101;
  auto* calabi = app.add_subcommand("calabi", "Calabi-ansatz momentum profile on the smooth bundle");
  calabi->add_option("--n", n, "Dimension of the base")->required();
  calabi->add_option("--r", r, "Slope r > 1")->required();
  calabi->add_option("--beta", beta, "Ricci lower bound beta (default beta_0)");
  calabi->add_option("--mu", mu, "Twisting constant mu")->capture_default_str();
  calabi->add_option("--csv", csv_path, "Write (tau, phi) samples to this file");
  calabi->add_option("--samples", samples, "Number of CSV samples")->capture_default_str();
  calabi->add_flag("--json", json, "Emit JSON");

  bool deep = false;
  std::string grid = "default";
  std::optional<std::string> report_path;
  auto* verify = app.add_subcommand("verify", "Run the independent oracle suite");
  verify->add_flag("--deep", deep, "m = 10^5 Riemann sums (also FANO_DELTA_DEEP=1)");
  verify->add_option("--grid", grid, "Preset (default, smoke) or grid JSON file")->capture_default_str();
  verify->add_option("--json", report_path, "Write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return FD_ERR_PARSE;
  }

  fd_result* result = nullptr;
  if (check_path) {
    std::string doc;
    if (!read_file(*check_path, doc)) {
      std::cerr << "error: cannot read " << *check_path << '\n';
      return FD_ERR_PARSE;
    }
    const fd_status s = fd_check(doc.c_str(), &result);
    return emit(s, result, false);
  }

  fd_status status = FD_OK;
  if (*bundle) {
    status = fd_bundle(n, r.c_str(), delta_v.c_str(), a.c_str(), b.c_str(), &result);
    return emit(status, result, json);
  }
  if (*cone) {
    status = fd_cone(n, r.c_str(), delta_v.c_str(), c.c_str(), &result);
    return emit(status, result, json);
  }
  if (*iterate) {
    status = fd_cone_iterate(n, d, i, delta_v0.c_str(), &result);
    return emit(status, result, json);
  }
  if (*branched) {
    status = fd_branched_cone(n, k, d, l, opt(delta_pair), &result);
    return emit(status, result, json);
  }
  if (*angle) {
    status = fd_angle(n, lambda.c_str(), opt(angle_a), base_semistable, divisor_semistable, base_polystable,
                      divisor_polystable, &result);
    return emit(status, result, json);
  }
  if (*calabi) {
    const fd_status s = fd_calabi(n, r.c_str(), opt(beta), mu.c_str(), csv_path ? samples : 0, &result);
    if (s == FD_OK && csv_path) {
      std::ofstream csv(*csv_path, std::ios::binary);
      if (!csv) {
        std::cerr << "error: cannot write " << *csv_path << '\n';
        fd_result_free(result);
        return FD_ERR_INTERNAL;
      }
      csv << fd_result_csv(result);
    }
    return emit(s, result, json);
  }
  if (*verify) {
    deep = deep || deep_from_env();
    std::string grid_text;
    const bool is_file = std::filesystem::is_regular_file(grid);
    if (is_file && !read_file(grid, grid_text)) {
      std::cerr << "error: cannot read grid file " << grid << '\n';
      return FD_ERR_PARSE;
    }
    const fd_status s = fd_verify(deep, is_file ? grid_text.c_str() : grid.c_str(), is_file, &result);
    if (report_path && *fd_result_json(result) != '\0') {
      std::ofstream out(*report_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << *report_path << '\n';
        fd_result_free(result);
        return FD_ERR_INTERNAL;
      }
      out << fd_result_json(result);
    }
    return emit(s, result, false);
  }

  std::cerr << app.help();
  return FD_ERR_PARSE;
}
