#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanodelta/rational.hpp"

namespace fanodelta {

/// What is known about the delta invariant of the base: an exact value, or
/// only that it is at least one (a K-semistable base).
class DeltaKnowledge {
 public:
  static DeltaKnowledge exact(Rational value);
  static DeltaKnowledge at_least_one() { return DeltaKnowledge{}; }
  /// "ge1" or an exact fraction "p/q" / "p". Decimal input is rejected.
  static DeltaKnowledge parse(std::string_view text);

  bool is_exact() const { return value_.has_value(); }
  /// Throws std::logic_error on an at-least-one knowledge.
  const Rational& value() const;
  /// The exact value, or 1 when only delta >= 1 is known.
  Rational lower_bound() const { return value_.value_or(Rational(1)); }
  std::string str() const { return value_ ? value_->str() : "ge1"; }

 private:
  DeltaKnowledge() = default;
  std::optional<Rational> value_;
};

/// Base variety V of dimension n with L ~ -(1/r) K_V, L^n normalised to 1.
struct FanoBase {
  int n = 1;
  Rational r = 1;
  DeltaKnowledge delta = DeltaKnowledge::at_least_one();

  void validate() const;
};

enum class Divisor { Base, V0, Vinf };

std::string_view divisor_name(Divisor d);

/// The three branch values of a delta formula and their minimum.
///
/// base_branch is empty when delta(V) is only known to be >= 1. In that case
/// base_at_one holds the base branch evaluated at delta(V) = 1, and the value
/// is exact only when min(v0, vinf) <= base_at_one. Otherwise `value` is the
/// lower bound base_at_one, `upper_bound` is min(v0, vinf) and the result is
/// flagged lower_bound_only.
struct DeltaBreakdown {
  std::optional<Rational> base_branch;
  Rational base_at_one;
  Rational v0_branch;
  Rational vinf_branch;
  Rational value;
  bool lower_bound_only = false;
  std::optional<Rational> upper_bound;
  std::vector<Divisor> minimizers;
};

/// Combine branches as (base_coefficient * delta, v0, vinf).
DeltaBreakdown resolve_branches(const DeltaKnowledge& delta, const Rational& base_coefficient,
                                const Rational& v0, const Rational& vinf);

/// "K-semistable" (value >= 1), "K-unstable" (value < 1) or "indeterminate".
std::string stability_verdict(const DeltaBreakdown& breakdown);

}  // namespace fanodelta
