#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanodelta/bundle.hpp"
#include "fanodelta/calabi.hpp"
#include "fanodelta/cone.hpp"
#include "fanodelta/delta.hpp"
#include "fanodelta/rational.hpp"

namespace fanodelta {

/// One comparison of a closed form against an independent computation.
/// All sums are accumulated exactly; the error is discretisation only.
struct OracleReport {
  std::string target;
  Rational closed_form;
  Rational approximation;
  long m_or_steps = 0;
  Rational absolute_error;
  Rational bound;
  bool pass = false;
  std::string detail;
};

/// sum_j (j/m)(A + j/m)^n / sum_j (A + j/m)^n over j = 0..m(B-A).
/// Requires m (B - A) to be an integer.
Rational riemann_s_limit(int n, const Rational& A, const Rational& B, long m);

/// Provable bound on |riemann_s_limit - (Phi(A,B,n) - A)|.
Rational riemann_error_bound(int n, const Rational& A, const Rational& B, long m);

OracleReport riemann_report(int n, const Rational& A, const Rational& B, long m);

/// Composite midpoint rule for
///   int_0^{B-A} (B^{n+1} - (A+t)^{n+1}) dt / (B^{n+1} - A^{n+1}).
Rational quadrature_s_v0_raw(int n, const Rational& A, const Rational& B, long steps);
/// Bound L h^2 max|f''| / 24, divided by the exact normaliser.
Rational quadrature_error_bound(int n, const Rational& A, const Rational& B, long steps);

/// Validated bundle version; converges to s_v0.
Rational quadrature_s_v0(const FanoBase& base, const BundleBoundary& bdry, long steps);

OracleReport quadrature_report(int n, const Rational& A, const Rational& B, long steps, const std::string& target);

/// Grid tuple for the brute-force branch comparison.
struct BundlePoint {
  int n = 1;
  Rational r = 1;
  Rational a = 0;
  Rational b = 0;
  DeltaKnowledge delta = DeltaKnowledge::at_least_one();
};

struct ConePoint {
  int n = 1;
  Rational r = 1;
  Rational c = 0;
  DeltaKnowledge delta = DeltaKnowledge::at_least_one();
};

std::string describe(const BundlePoint& p);
std::string describe(const ConePoint& p);

/// Recomputes the three branches from integrals of t^n and compares value and
/// minimizers with bundle_delta / cone_delta.
OracleReport branch_min_bruteforce(const BundlePoint& p);
OracleReport branch_min_bruteforce(const ConePoint& p);

/// Composite midpoint rule for the Futaki integral. Throws like futaki_invariant
/// on a non-admissible profile.
Rational futaki_quadrature(const AdmissibleProfile& profile, long steps);
Rational futaki_quadrature_bound(const AdmissibleProfile& profile, long steps);

/// Product of the single-step factors (n+1+j) r_{j-1} / ((n+j)(r_{j-1}+1)),
/// j = 1..i, applied to min(delta_0, 1).
Rational telescoping_iterated_cone(int n, int d, int i, const DeltaKnowledge& delta0);

struct GridSpec {
  std::vector<BundlePoint> bundle;
  std::vector<ConePoint> cone;
};

/// "default" or "smoke".
GridSpec grid_preset(const std::string& name);
/// {"bundle": [{"n":1,"r":"2","a":"0","b":"0","delta":"1"}, ...], "cone": [{"n":..,"r":..,"c":..,"delta":..}]}
GridSpec parse_grid_json(const std::string& text);

struct VerifySettings {
  bool deep = false;
  GridSpec grid;
  std::string grid_name = "default";
  long riemann_m = 1000;
  long quadrature_steps = 10000;
  unsigned workers = 0;  // 0 picks the hardware concurrency
};

VerifySettings verify_settings(bool deep, const std::string& grid);

struct VerifySummary {
  std::vector<OracleReport> reports;
  /// Closed form, composition and telescoping values of the iterated cones.
  std::vector<std::string> findings;
  std::size_t failures() const;
};

/// Runs every oracle. Reports come back in a fixed order that does not depend
/// on how the work was scheduled.
VerifySummary run_verification(const VerifySettings& settings);

}  // namespace fanodelta
