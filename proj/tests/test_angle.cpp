#include <doctest.h>

#include "fanodelta/angle.hpp"
#include "fanodelta/errors.hpp"

using namespace fanodelta;

namespace {

DivisorPairSpec pair(int n, const Rational& lambda) {
  DivisorPairSpec spec;
  spec.n = n;
  spec.lambda = lambda;
  return spec;
}

}  // namespace

TEST_CASE("plane with a conic") {
  const AngleRange range = optimal_angle_interval(pair(2, Rational(2, 3)));
  CHECK(range.r == Rational(1, 2));
  CHECK(range.endpoint == Rational(3, 4));
  CHECK(range.semistable_closed);
  CHECK_FALSE(range.polystable_open_interval);
}

TEST_CASE("projective space with a degree-d hypersurface") {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= n; ++d) {
      const AngleRange range = optimal_angle_interval(pair(n, Rational(d, n + 1)));
      const Rational r(n + 1 - d, d);
      CHECK(range.r == r);
      CHECK(range.endpoint == Rational(1) - r / Rational(n));
    }
  }
  // lambda = 1/(n+1) degenerates to {0}
  CHECK(optimal_angle_interval(pair(3, Rational(1, 4))).endpoint == Rational(0));
}

TEST_CASE("polystability is an annotation with hypotheses") {
  DivisorPairSpec spec = pair(2, Rational(2, 3));
  spec.base_polystable = true;
  spec.divisor_polystable = true;
  const AngleRange range = optimal_angle_interval(spec);
  CHECK(range.polystable_open_interval);
  bool mentions = false;
  for (const auto& h : range.hypotheses) mentions = mentions || h.find("K-polystable") != std::string::npos;
  CHECK(mentions);
}

TEST_CASE("optimal interval errors") {
  CHECK_THROWS_AS(optimal_angle_interval(pair(2, 1)), DomainError);
  CHECK_THROWS_AS(optimal_angle_interval(pair(2, 0)), DomainError);
  CHECK_THROWS_AS(optimal_angle_interval(pair(2, Rational(-1, 2))), DomainError);
  CHECK_THROWS_AS(optimal_angle_interval(pair(2, Rational(1, 5))), DomainError);
  DivisorPairSpec spec = pair(2, Rational(2, 3));
  spec.divisor_semistable = false;
  try {
    optimal_angle_interval(spec);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("hypotheses not met") != std::string::npos);
  }
}

TEST_CASE("lambda >= 1 range") {
  CHECK(semistable_range_lambda_ge_1(3, 1).endpoint == Rational(1));
  CHECK(semistable_range_lambda_ge_1(3, 2).endpoint == Rational(1, 2));
  CHECK(semistable_range_lambda_ge_1(3, Rational(3, 2)).endpoint == Rational(2, 3));
  CHECK_FALSE(semistable_range_lambda_ge_1(3, 2).semistable_closed);
  CHECK(semistable_range_lambda_ge_1(3, 2).stable_open_interval);
  CHECK_THROWS_AS(semistable_range_lambda_ge_1(3, Rational(1, 2)), DomainError);
  bool interpolation = false;
  for (const auto& h : semistable_range_lambda_ge_1(2, 1).hypotheses) {
    interpolation = interpolation || h.find("interpolation") != std::string::npos;
  }
  CHECK(interpolation);
}

TEST_CASE("endpoint identity (n+1)(1-a) = r+1-a") {
  for (int n = 1; n <= 10; ++n) {
    for (int q = 1; q <= 4 * n; ++q) {
      const Rational r(q, 4);
      const Rational a = Rational(1) - r / Rational(n);
      CHECK(Rational(n + 1) * (Rational(1) - a) == r + 1 - a);
      if (a < Rational(1)) {
        CHECK(cone_over_divisor_delta(n, r, a, DeltaKnowledge::at_least_one()).breakdown.vinf_branch == Rational(1));
      }
    }
  }
}

TEST_CASE("cone over the divisor") {
  const ConeResult at_end = cone_over_divisor_delta(2, Rational(1, 2), Rational(3, 4), DeltaKnowledge::at_least_one());
  CHECK(at_end.breakdown.vinf_branch == Rational(1));
  const ConeResult past = cone_over_divisor_delta(2, Rational(1, 2), Rational(7, 8), DeltaKnowledge::at_least_one());
  CHECK(past.breakdown.vinf_branch == Rational(3, 5));
  CHECK(past.breakdown.value <= Rational(3, 5));
  CHECK_THROWS_AS(cone_over_divisor_delta(2, 1, 1, DeltaKnowledge::at_least_one()), DomainError);
}

TEST_CASE("cone over the divisor is the cone formula one dimension down") {
  for (int n = 2; n <= 6; ++n) {
    for (const Rational& r : {Rational(1, 3), Rational(1), Rational(5, 2)}) {
      for (const Rational& a : {Rational(0), Rational(1, 5), Rational(2, 3)}) {
        for (const DeltaKnowledge& d : {DeltaKnowledge::at_least_one(), DeltaKnowledge::exact(Rational(4, 5))}) {
          const ConeResult lhs = cone_over_divisor_delta(n, r, a, d);
          const ConeResult rhs = cone_delta(FanoBase{n - 1, r, d}, ConeBoundary{a});
          CHECK(lhs.breakdown.value == rhs.breakdown.value);
          CHECK(lhs.breakdown.minimizers == rhs.breakdown.minimizers);
          // closed form of the three branches
          CHECK(lhs.breakdown.v0_branch == Rational(n + 1) * r / (Rational(n) * (r + 1 - a)));
          CHECK(lhs.breakdown.vinf_branch == Rational(n + 1) * (Rational(1) - a) / (r + 1 - a));
        }
      }
    }
  }
}

TEST_CASE("angles past the endpoint carry an instability certificate") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      const DivisorPairSpec spec = pair(n, Rational(d, n + 1));
      const Rational end = optimal_angle_interval(spec).endpoint;
      CHECK(Rational(0) <= end);
      CHECK(end < Rational(1));
      for (int k = 1; k <= 5; ++k) {
        const Rational a = end + (Rational(1) - end) * Rational(k, 6);
        const AngleClassification cls = classify_angle(spec, a);
        CHECK_FALSE(cls.within_range);
        REQUIRE(cls.instability_certificate);
        CHECK(cls.instability_certificate->breakdown.value < Rational(1));
        CHECK(cls.verdict == "K-unstable");
      }
      const AngleClassification inside = classify_angle(spec, end);
      CHECK(inside.within_range);
      CHECK_FALSE(inside.instability_certificate);
    }
  }
  CHECK(classify_angle(pair(2, 2), Rational(3, 4)).verdict == "not log Fano");
  CHECK(classify_angle(pair(2, 2), Rational(1, 4)).verdict == "K-semistable");
}
