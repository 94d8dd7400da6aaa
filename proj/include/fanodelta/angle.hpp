#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanodelta/cone.hpp"
#include "fanodelta/delta.hpp"
#include "fanodelta/rational.hpp"

namespace fanodelta {

/// Pair (V, a S) with S ~ -lambda K_V and dim V = n.
struct DivisorPairSpec {
  int n = 1;
  Rational lambda = 1;
  bool base_semistable = true;
  bool divisor_semistable = true;
  bool base_polystable = false;
  bool divisor_polystable = false;
};

/// Range of angles a for which (V, a S) is K-semistable.
struct AngleRange {
  Rational r;          // 1/lambda - 1, only meaningful when lambda < 1
  Rational endpoint;   // 1 - r/n for lambda < 1, 1/lambda for lambda >= 1
  bool semistable_closed = true;
  bool polystable_open_interval = false;
  bool stable_open_interval = false;
  std::vector<std::string> hypotheses;
};

/// [0, 1 - r/n] with r = 1/lambda - 1, for 1/(n+1) <= lambda < 1.
AngleRange optimal_angle_interval(const DivisorPairSpec& spec);

/// [0, 1/lambda) for lambda >= 1.
AngleRange semistable_range_lambda_ge_1(int n, const Rational& lambda);

/// Dispatches on lambda < 1 or lambda >= 1.
AngleRange angle_range(const DivisorPairSpec& spec);

/// Delta of the cone over S with boundary a S_inf: cone_delta on a base of
/// dimension n-1 with slope r and c = a.
ConeResult cone_over_divisor_delta(int n, const Rational& r, const Rational& a, const DeltaKnowledge& delta_s);

struct AngleClassification {
  Rational a;
  bool within_range = false;
  /// Set when a lies past the endpoint (lambda < 1): the cone over S with
  /// delta(S) >= 1 whose value is < 1.
  std::optional<ConeResult> instability_certificate;
  std::string verdict;
};

AngleClassification classify_angle(const DivisorPairSpec& spec, const Rational& a);

}  // namespace fanodelta
