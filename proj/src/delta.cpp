#include "fanodelta/delta.hpp"

#include <stdexcept>

#include "fanodelta/errors.hpp"

namespace fanodelta {

DeltaKnowledge DeltaKnowledge::exact(Rational value) {
  if (value.sign() < 0) throw DomainError("delta(V) must be >= 0, got " + value.str());
  DeltaKnowledge out;
  out.value_ = std::move(value);
  return out;
}

DeltaKnowledge DeltaKnowledge::parse(std::string_view text) {
  if (text == "ge1" || text == ">=1") return at_least_one();
  if (text.find_first_of(".eE") != std::string_view::npos) {
    throw ParseError("delta must be 'ge1' or an exact fraction p/q, got '" + std::string(text) + "'");
  }
  return exact(Rational::parse(text));
}

const Rational& DeltaKnowledge::value() const {
  if (!value_) throw std::logic_error("delta(V) is only known to be >= 1");
  return *value_;
}

void FanoBase::validate() const {
  if (n < 1) throw DomainError("n must be a positive integer, got " + std::to_string(n));
  if (r.sign() <= 0) throw DomainError("r must satisfy r > 0, got " + r.str());
}

std::string_view divisor_name(Divisor d) {
  switch (d) {
    case Divisor::Base:
      return "BaseDivisor";
    case Divisor::V0:
      return "V0";
    case Divisor::Vinf:
      return "Vinf";
  }
  return "?";
}

DeltaBreakdown resolve_branches(const DeltaKnowledge& delta, const Rational& base_coefficient,
                                const Rational& v0, const Rational& vinf) {
  DeltaBreakdown out;
  out.v0_branch = v0;
  out.vinf_branch = vinf;
  out.base_at_one = base_coefficient;
  const Rational& divisor_min = min(v0, vinf);

  if (delta.is_exact()) {
    out.base_branch = base_coefficient * delta.value();
    out.value = min(*out.base_branch, divisor_min);
    if (*out.base_branch == out.value) out.minimizers.push_back(Divisor::Base);
  } else if (divisor_min <= base_coefficient) {
    // base branch is >= base_coefficient >= divisor_min for every delta(V) >= 1
    out.value = divisor_min;
  } else {
    out.value = base_coefficient;
    out.lower_bound_only = true;
    out.upper_bound = divisor_min;
  }
  if (v0 == divisor_min && (out.lower_bound_only || v0 == out.value)) out.minimizers.push_back(Divisor::V0);
  if (vinf == divisor_min && (out.lower_bound_only || vinf == out.value)) {
    out.minimizers.push_back(Divisor::Vinf);
  }
  return out;
}

std::string stability_verdict(const DeltaBreakdown& breakdown) {
  if (breakdown.lower_bound_only) {
    if (breakdown.value >= Rational(1)) return "K-semistable";
    if (breakdown.upper_bound && *breakdown.upper_bound < Rational(1)) return "K-unstable";
    return "indeterminate";
  }
  return breakdown.value >= Rational(1) ? "K-semistable" : "K-unstable";
}

}  // namespace fanodelta
