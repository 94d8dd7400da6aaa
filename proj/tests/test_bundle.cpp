#include <doctest.h>

#include <algorithm>
#include <random>

#include "fanodelta/bundle.hpp"
#include "fanodelta/errors.hpp"
#include "fanodelta/polynomial.hpp"

using namespace fanodelta;

namespace {

// centroid from two exact integrals, independent of the closed form
Rational centroid_by_integrals(const Rational& A, const Rational& B, unsigned n) {
  return integrate_definite(Polynomial::monomial(1, n + 1), A, B) / integrate_definite(Polynomial::monomial(1, n), A, B);
}

FanoBase base(int n, Rational r, DeltaKnowledge d) { return FanoBase{n, std::move(r), std::move(d)}; }

DeltaKnowledge exact(const Rational& q) { return DeltaKnowledge::exact(q); }

}  // namespace

TEST_CASE("delta knowledge parsing") {
  CHECK_FALSE(DeltaKnowledge::parse("ge1").is_exact());
  CHECK_FALSE(DeltaKnowledge::parse(">=1").is_exact());
  CHECK(DeltaKnowledge::parse("13/14").value() == Rational(13, 14));
  CHECK(DeltaKnowledge::parse("ge1").lower_bound() == Rational(1));
  CHECK_THROWS_AS(DeltaKnowledge::parse("0.5"), ParseError);
  CHECK_THROWS_AS(DeltaKnowledge::parse("1e0"), ParseError);
  CHECK_THROWS_AS(DeltaKnowledge::parse("-1/2"), DomainError);
  CHECK_THROWS_AS(DeltaKnowledge::parse("ge2"), ParseError);
}

TEST_CASE("centroid examples") {
  CHECK(centroid_phi(1, 3, 1) == Rational(13, 6));
  for (int n = 0; n <= 6; ++n) {
    CHECK(centroid_phi(0, Rational(7, 2), n) == Rational(n + 1) * Rational(7, 2) / Rational(n + 2));
    CHECK(centroid_phi(Rational(1, 3), 5, 0) == (Rational(1, 3) + 5) / 2);
  }
  CHECK_THROWS_AS(centroid_phi(2, 2, 1), DomainError);
  CHECK_THROWS_AS(centroid_phi(-1, 2, 1), DomainError);
  CHECK_THROWS_AS(centroid_phi(0, 2, -1), DomainError);
}

TEST_CASE("centroid lies strictly inside and matches the integral ratio") {
  for (unsigned n = 0; n <= 10; ++n) {
    for (int a2 = 0; a2 < 40; a2 += 3) {
      for (int b2 = a2 + 1; b2 <= 40; b2 += 4) {
        const Rational A(a2, 2), B(b2, 2);
        const Rational phi = centroid_phi(A, B, static_cast<int>(n));
        CHECK(A < phi);
        CHECK(phi < B);
        CHECK(phi == centroid_by_integrals(A, B, n));
      }
    }
  }
}

TEST_CASE("beta_0 examples") {
  CHECK(beta_zero(1, 2) == Rational(6, 7));
  CHECK(beta_zero(1, 3) == Rational(9, 10));
  CHECK(beta_zero(2, 2) == Rational(13, 17));
  CHECK_THROWS_AS(beta_zero(1, 1), DomainError);
  CHECK_THROWS_AS(beta_zero(1, Rational(1, 2)), DomainError);
}

TEST_CASE("beta_0 lies in (1/2, 1) on the quarter grid") {
  int violations = 0;
  for (int n = 1; n <= 10; ++n) {
    for (int q = 5; q <= 4 * (n + 1); ++q) {
      const Rational b0 = beta_zero(n, Rational(q, 4));
      if (!(Rational(1, 2) < b0 && b0 < Rational(1))) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("S invariants") {
  const FanoBase v = base(1, 2, DeltaKnowledge::at_least_one());
  CHECK(s_v0(v, {0, 0}) == Rational(7, 6));
  CHECK(s_vinf(v, {0, 0}) == Rational(5, 6));
  for (int n = 1; n <= 5; ++n) {
    for (const Rational& a : {Rational(0), Rational(1, 3)}) {
      for (const Rational& b : {Rational(0), Rational(3, 4)}) {
        const FanoBase w = base(n, Rational(5, 2), DeltaKnowledge::at_least_one());
        CHECK(s_v0(w, {a, b}) + s_vinf(w, {a, b}) == Rational(2) - a - b);
        CHECK(s_v0(w, {a, b}).sign() > 0);
        CHECK(s_vinf(w, {a, b}).sign() > 0);
      }
    }
  }
}

TEST_CASE("boundary domain validation") {
  const FanoBase big = base(1, 2, exact(1));
  CHECK_NOTHROW(validate_bundle_boundary(big, {0, 0}));
  CHECK_THROWS_AS(validate_bundle_boundary(big, {1, 0}), DomainError);
  CHECK_THROWS_AS(validate_bundle_boundary(big, {Rational(-1, 2), 0}), DomainError);
  CHECK_THROWS_AS(validate_bundle_boundary(big, {0, 1}), DomainError);
  const FanoBase small = base(1, Rational(1, 2), exact(1));
  CHECK_THROWS_AS(validate_bundle_boundary(small, {Rational(1, 2), 0}), DomainError);
  CHECK_NOTHROW(validate_bundle_boundary(small, {Rational(3, 4), 0}));
  CHECK_THROWS_AS(validate_bundle_boundary(base(1, 1, exact(1)), {0, 0}), DomainError);
  CHECK_THROWS_AS(validate_bundle_boundary(base(0, 2, exact(1)), {0, 0}), DomainError);
  CHECK_THROWS_AS(validate_bundle_boundary(base(1, 0, exact(1)), {Rational(1, 2), 0}), DomainError);
  try {
    validate_bundle_boundary(base(1, 1, exact(1)), {0, 0});
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("1-r<a<1 when r<=1") != std::string::npos);
  }
}

TEST_CASE("smooth blow-up of the plane in a point") {
  const DeltaBreakdown b = bundle_delta(base(1, 2, exact(1)), {0, 0});
  REQUIRE(b.base_branch);
  CHECK(*b.base_branch == Rational(12, 13));
  CHECK(b.v0_branch == Rational(6, 7));
  CHECK(b.vinf_branch == Rational(6, 5));
  CHECK(b.value == Rational(6, 7));
  CHECK(b.minimizers == std::vector<Divisor>{Divisor::V0});
  CHECK_FALSE(b.lower_bound_only);
}

TEST_CASE("base branch wins for small delta(V)") {
  const DeltaBreakdown b = bundle_delta(base(1, 2, exact(Rational(1, 2))), {0, 0});
  CHECK(b.value == Rational(6, 13));
  CHECK(b.minimizers == std::vector<Divisor>{Divisor::Base});
}

TEST_CASE("semistable base gives an exact value when a divisor branch is smaller") {
  const DeltaBreakdown b = bundle_delta(base(1, 2, DeltaKnowledge::at_least_one()), {0, 0});
  CHECK_FALSE(b.base_branch);
  CHECK(b.value == Rational(6, 7));
  CHECK(b.minimizers == std::vector<Divisor>{Divisor::V0});
  CHECK_FALSE(b.lower_bound_only);
  CHECK(stability_verdict(b) == "K-unstable");
}

TEST_CASE("with delta >= 1 the base branch never undercuts the divisor branches") {
  // so a bundle value with delta = ge1 is exact; ties are possible
  for (int n = 1; n <= 5; ++n) {
    for (int q = 1; q <= 24; ++q) {
      const Rational r(q, 4);
      for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
          const Rational a(i, 10), b(j, 10);
          if (r <= Rational(1) && a <= Rational(1) - r) continue;
          const DeltaBreakdown d = bundle_delta(base(n, r, DeltaKnowledge::at_least_one()), {a, b});
          CHECK(d.base_at_one >= min(d.v0_branch, d.vinf_branch));
          CHECK_FALSE(d.lower_bound_only);
          CHECK(d.value == min(d.v0_branch, d.vinf_branch));
        }
      }
    }
  }
}

TEST_CASE("lower-bound reporting when the base coefficient is smallest") {
  const DeltaBreakdown b = resolve_branches(DeltaKnowledge::at_least_one(), Rational(1, 2), Rational(3, 4), 2);
  CHECK(b.lower_bound_only);
  CHECK(b.value == Rational(1, 2));
  REQUIRE(b.upper_bound);
  CHECK(*b.upper_bound == Rational(3, 4));
  CHECK(b.minimizers == std::vector<Divisor>{Divisor::V0});
  CHECK(stability_verdict(b) == "K-unstable");
  const DeltaBreakdown open = resolve_branches(DeltaKnowledge::at_least_one(), Rational(1, 2), 2, 3);
  CHECK(stability_verdict(open) == "indeterminate");
}

TEST_CASE("two-branch smooth relation") {
  CHECK(smooth_threshold_relation(1, 2, exact(1)) == Rational(6, 7));
  CHECK(smooth_threshold_relation(1, 2, exact(Rational(1, 2))) == Rational(6, 13));
  CHECK(smooth_delta_threshold(1, 2) == Rational(13, 14));
  const DeltaBreakdown tie = bundle_delta(base(1, 2, exact(Rational(13, 14))), {0, 0});
  CHECK(tie.value == Rational(6, 7));
  CHECK(tie.minimizers == std::vector<Divisor>{Divisor::Base, Divisor::V0});
  CHECK_THROWS_AS(smooth_threshold_relation(1, 2, DeltaKnowledge::at_least_one()), DomainError);
  CHECK_THROWS_AS(smooth_threshold_relation(1, 1, exact(1)), DomainError);
}

TEST_CASE("smooth relation matches the three-branch formula for r <= n+1") {
  for (int n = 1; n <= 6; ++n) {
    for (int q = 5; q <= 4 * (n + 1); ++q) {
      const Rational r(q, 4);
      const Rational b0 = beta_zero(n, r);
      for (const Rational& d : {Rational(1, 3), Rational(1), Rational(2), smooth_delta_threshold(n, r)}) {
        const DeltaBreakdown b = bundle_delta(base(n, r, exact(d)), {0, 0});
        CHECK(b.value == smooth_threshold_relation(n, r, exact(d)));
        CHECK(b.vinf_branch == b0 / (Rational(2) * b0 - 1));
        CHECK(b.v0_branch == b0);
        CHECK(b.v0_branch <= b.vinf_branch);
        // vinf is never the unique minimizer
        CHECK(b.minimizers != std::vector<Divisor>{Divisor::Vinf});
      }
    }
  }
}

TEST_CASE("beta form restatement agrees with the direct formula") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> ndist(1, 8), rnum(1, 24), frac(0, 11);
  int checked = 0;
  while (checked < 100) {
    const int n = ndist(rng);
    const Rational r(rnum(rng), 4);
    const Rational a(frac(rng), 12), b(frac(rng), 12);
    const Rational delta(rnum(rng), 8);
    const FanoBase v = base(n, r, exact(delta));
    try {
      validate_bundle_boundary(v, {a, b});
    } catch (const DomainError&) {
      continue;
    }
    const DeltaBreakdown direct = bundle_delta(v, {a, b});
    const BetaForm form = bundle_beta_form(v, {a, b});
    CHECK(form.base_coefficient * delta == *direct.base_branch);
    CHECK(form.beta == direct.v0_branch);
    CHECK(form.vinf_branch == direct.vinf_branch);
    // 1 - a + A beta = beta Phi
    const Rational A = bundle_lower_end(r, {a, b});
    CHECK(Rational(1) - a + A * form.beta == form.beta * centroid_phi(A, bundle_upper_end(r, {a, b}), n));
    ++checked;
  }
}

TEST_CASE("value is nondecreasing in delta(V)") {
  for (int n = 1; n <= 4; ++n) {
    for (const Rational& r : {Rational(1, 2), Rational(2), Rational(7, 2)}) {
      const BundleBoundary bdry{r > Rational(1) ? Rational(0) : Rational(3, 4), Rational(1, 5)};
      Rational previous(-1);
      for (int k = 0; k <= 24; ++k) {
        const Rational value = bundle_delta(base(n, r, exact(Rational(k, 8))), bdry).value;
        CHECK(previous <= value);
        previous = value;
      }
    }
  }
}

TEST_CASE("minimizers match a brute-force scan of the branches") {
  for (int n = 1; n <= 5; ++n) {
    for (const Rational& r : {Rational(3, 2), Rational(2), Rational(3)}) {
      for (const Rational& d : {Rational(1, 4), Rational(1), Rational(13, 14), Rational(3)}) {
        const DeltaBreakdown b = bundle_delta(base(n, r, exact(d)), {Rational(1, 4), Rational(1, 3)});
        const Rational vals[3] = {*b.base_branch, b.v0_branch, b.vinf_branch};
        const Divisor names[3] = {Divisor::Base, Divisor::V0, Divisor::Vinf};
        Rational best = vals[0];
        for (const auto& v : vals) best = min(best, v);
        std::vector<Divisor> expect;
        for (int k = 0; k < 3; ++k) {
          if (vals[k] == best) expect.push_back(names[k]);
        }
        CHECK(b.value == best);
        CHECK(b.minimizers == expect);
      }
    }
  }
}
