#include "fanodelta/angle.hpp"

#include "fanodelta/errors.hpp"

namespace fanodelta {

namespace {

void validate_pair(const DivisorPairSpec& spec) {
  if (spec.n < 1) throw DomainError("n must be a positive integer, got " + std::to_string(spec.n));
  if (spec.lambda.sign() <= 0) throw DomainError("lambda must be > 0, got " + spec.lambda.str());
}

}  // namespace

AngleRange optimal_angle_interval(const DivisorPairSpec& spec) {
  validate_pair(spec);
  if (spec.lambda >= Rational(1)) {
    throw DomainError("lambda must be < 1 for the optimal interval, got " + spec.lambda.str() +
                      " (use the lambda>=1 range)");
  }
  if (!spec.base_semistable || !spec.divisor_semistable) {
    throw DomainError("hypotheses not met: V and S must both be K-semistable");
  }
  if (spec.lambda < Rational(1, spec.n + 1)) {
    throw DomainError("lambda must satisfy lambda>=1/(n+1), got " + spec.lambda.str());
  }
  AngleRange out;
  out.r = spec.lambda.reciprocal() - 1;
  out.endpoint = Rational(1) - out.r / Rational(spec.n);
  out.semistable_closed = true;
  out.hypotheses.push_back("K-semistable on [0, endpoint] requires V and S K-semistable");
  if (spec.base_polystable && spec.divisor_polystable) {
    out.polystable_open_interval = true;
    out.hypotheses.push_back("K-polystable on [0, endpoint) requires V and S K-polystable");
  }
  return out;
}

AngleRange semistable_range_lambda_ge_1(int n, const Rational& lambda) {
  if (n < 1) throw DomainError("n must be a positive integer, got " + std::to_string(n));
  if (lambda < Rational(1)) throw DomainError("lambda must be >= 1 for this range, got " + lambda.str());
  AngleRange out;
  out.r = lambda.reciprocal() - 1;
  out.endpoint = lambda.reciprocal();
  out.semistable_closed = false;
  out.stable_open_interval = true;
  out.hypotheses.push_back("K-semistable on [0, 1/lambda) requires V K-semistable");
  if (lambda == Rational(1)) {
    out.hypotheses.push_back("K-stable on (0, 1) per interpolation argument; stability variant unspecified");
  } else {
    out.hypotheses.push_back("K-stable on (0, 1/lambda) since delta(V, aS) > 1 there");
  }
  return out;
}

AngleRange angle_range(const DivisorPairSpec& spec) {
  validate_pair(spec);
  if (spec.lambda >= Rational(1)) {
    if (!spec.base_semistable) throw DomainError("hypotheses not met: V must be K-semistable");
    return semistable_range_lambda_ge_1(spec.n, spec.lambda);
  }
  return optimal_angle_interval(spec);
}

ConeResult cone_over_divisor_delta(int n, const Rational& r, const Rational& a, const DeltaKnowledge& delta_s) {
  if (n < 1) throw DomainError("n must be a positive integer, got " + std::to_string(n));
  if (a.sign() < 0 || a >= Rational(1)) throw DomainError("a must satisfy 0<=a<1, got a=" + a.str());
  return cone_delta_dimension(n - 1, r, delta_s, a);
}

AngleClassification classify_angle(const DivisorPairSpec& spec, const Rational& a) {
  if (a.sign() < 0 || a >= Rational(1)) throw DomainError("a must satisfy 0<=a<1, got a=" + a.str());
  const AngleRange range = angle_range(spec);
  AngleClassification out;
  out.a = a;
  out.within_range = range.semistable_closed ? a <= range.endpoint : a < range.endpoint;
  if (out.within_range) {
    out.verdict = "K-semistable";
  } else if (spec.lambda < Rational(1)) {
    out.instability_certificate = cone_over_divisor_delta(spec.n, range.r, a, DeltaKnowledge::at_least_one());
    out.verdict = stability_verdict(out.instability_certificate->breakdown);
  } else {
    // a >= 1/lambda makes -(K_V + aS) non-ample
    out.verdict = "not log Fano";
  }
  return out;
}

}  // namespace fanodelta
