#include <doctest.h>

#include "fanodelta/bundle.hpp"
#include "fanodelta/calabi.hpp"
#include "fanodelta/errors.hpp"

using namespace fanodelta;

namespace {

const std::vector<Rational> kSlopes{Rational(3, 2), Rational(2), Rational(3), Rational(4)};

}  // namespace

TEST_CASE("profile constants for the blown-up plane") {
  const CalabiProfile p = solve_profile(1, 2, Rational(6, 7));
  CHECK(p.c1 == Rational(13, 14));
  CHECK(p.c2 == Rational(-9, 14));
  CHECK(p.numerator(1) == Rational(0));
  CHECK(p.numerator(3) == Rational(0));
  CHECK(profile_slope(1, p.numerator, 1) == Rational(1));
}

TEST_CASE("profile is linear in beta") {
  const CalabiProfile full = solve_profile(1, 2, Rational(6, 7));
  const CalabiProfile half = solve_profile(1, 2, Rational(3, 7));
  CHECK(half.c1 == full.c1 / 2);
  CHECK(half.c2 == full.c2 / 2);
  CHECK(half.numerator == full.numerator * Rational(1, 2));
}

TEST_CASE("ODE residual, boundary values and edge angles on the grid") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& r : kSlopes) {
      const Rational b0 = beta_zero(n, r);
      for (const Rational& beta : {b0, b0 / 2, b0 / 3}) {
        const CalabiProfile p = solve_profile(n, r, beta);
        CHECK(ode_residual(p).is_zero());
        CHECK(p.numerator(r - 1) == Rational(0));
        CHECK(p.numerator(r + 1) == Rational(0));
        const EdgeAngles e = edge_angles(p);
        CHECK(e.beta1 == beta / b0);
        CHECK(e.beta2 == beta * (Rational(2) * b0 - 1) / b0);
        CHECK(phi_positive(p.numerator, r));
      }
    }
  }
}

TEST_CASE("edge angle examples") {
  const EdgeAngles full = edge_angles(solve_profile(1, 2, Rational(6, 7)));
  CHECK(full.beta1 == Rational(1));
  CHECK(full.beta2 == Rational(5, 7));
  const EdgeAngles half = edge_angles(solve_profile(1, 2, Rational(3, 7)));
  CHECK(half.beta1 == Rational(1, 2));
  CHECK(half.beta2 == Rational(5, 14));
}

TEST_CASE("angles are ordered when the beta condition holds") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& r : kSlopes) {
      for (const Rational& mu : {Rational(1, 2), Rational(9, 10), Rational(1)}) {
        const Rational b0 = beta_zero(n, r);
        const Rational cap = min(mu * b0 / smooth_delta_threshold(n, r), b0);
        for (const Rational& beta : {cap, cap / 2}) {
          REQUIRE(satisfies_beta_condition(n, r, beta, mu));
          const EdgeAngles e = edge_angles(solve_profile(n, r, beta));
          CHECK(Rational(0) < e.beta2);
          CHECK(e.beta2 < e.beta1);
          CHECK(e.beta1 <= Rational(1));
        }
        CHECK_FALSE(satisfies_beta_condition(n, r, cap + Rational(1, 1000), mu));
      }
    }
  }
}

TEST_CASE("ricci margin") {
  const CalabiProfile p = solve_profile(1, 2, Rational(6, 7));
  CHECK(ricci_bound_margin(p, Rational(13, 14)) == Rational(0));
  CHECK(ricci_bound_margin(p, 1) == Rational(1, 14));
  // beta -> 0 limit, computed at a tiny beta
  const Rational tiny(1, 1000000);
  const CalabiProfile q = solve_profile(1, 2, tiny);
  const Rational b0 = beta_zero(1, 2);
  CHECK(ricci_bound_margin(q, Rational(3, 5)) == Rational(3, 5) - tiny / (Rational(2) * b0) - tiny / 2);
}

TEST_CASE("pointwise Ricci excess is the constant margin") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& r : kSlopes) {
      const Rational b0 = beta_zero(n, r);
      for (const Rational& beta : {b0, b0 / 3}) {
        const CalabiProfile p = solve_profile(n, r, beta);
        for (const Rational& mu : {Rational(1, 2), Rational(1)}) {
          const Rational margin = ricci_bound_margin(p, mu);
          CHECK(equivalent(ricci_bound_excess(p, mu), RationalFunction(Polynomial::constant(margin))));
          CHECK((margin.sign() >= 0) == (beta <= mu * b0 / smooth_delta_threshold(n, r)));
        }
      }
    }
  }
}

TEST_CASE("admissible profiles") {
  for (const auto& [n, r] : std::vector<std::pair<int, Rational>>{{1, 2}, {2, 2}, {2, 3}, {4, Rational(5, 2)}}) {
    const AdmissibleProfile h = hermite_profile(n, r);
    CHECK(admissibility_failures(h).empty());
    CHECK(admissibility_failures(perturbed(h, Rational(1, 10), Polynomial::constant(1))).empty());
  }
}

TEST_CASE("Futaki invariant is profile independent and matches the closed form") {
  for (const auto& [n, r] : std::vector<std::pair<int, Rational>>{{1, 2}, {2, 2}, {2, 3}, {3, Rational(3, 2)}}) {
    const AdmissibleProfile h = hermite_profile(n, r);
    const std::vector<AdmissibleProfile> profiles{
        h, perturbed(h, Rational(1, 10), Polynomial::constant(1)), perturbed(h, Rational(1, 50), Polynomial::identity()),
        perturbed(h, Rational(-1, 200), Polynomial::monomial(1, 2))};
    const Rational closed = futaki_closed_form(n, r);
    CHECK(closed.sign() > 0);
    for (const auto& p : profiles) {
      REQUIRE(admissibility_failures(p).empty());
      CHECK(futaki_invariant(p) == closed);
    }
  }
  CHECK(futaki_closed_form(1, 2) == Rational(4, 3));
}

TEST_CASE("the perturbation from the example keeps the value") {
  // phi + eps (tau-1)^2 (tau-3)^2 / tau for n = 1, r = 2
  const AdmissibleProfile h = hermite_profile(1, 2);
  AdmissibleProfile p = h;
  p.numerator += Rational(1, 10) * (Polynomial({-1, 1}) * Polynomial({-3, 1})).pow(2);
  CHECK(futaki_invariant(p) == Rational(4, 3));
}

TEST_CASE("the beta_0 profile has a cone angle at V_inf and is rejected") {
  const CalabiProfile canonical = solve_profile(1, 2, Rational(6, 7));
  const AdmissibleProfile p{1, 2, canonical.numerator};
  const auto failures = admissibility_failures(p);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0] == "phi'(r+1) = -5/7, expected -1");
  CHECK_THROWS_AS(futaki_invariant(p), DomainError);
}

TEST_CASE("positivity check") {
  CHECK(phi_positive(hermite_profile(2, 2).numerator, 2));
  // a large negative bump creates interior roots
  const AdmissibleProfile bad = perturbed(hermite_profile(1, 2), -10, Polynomial::constant(1));
  CHECK_FALSE(phi_positive(bad.numerator, 2));
  CHECK(admissibility_failures(bad) == std::vector<std::string>{"phi is not positive on (r-1, r+1)"});
  CHECK_FALSE(phi_positive(Polynomial(), 2));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(solve_profile(1, 1, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(solve_profile(0, 2, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(solve_profile(1, 2, 0), DomainError);
  CHECK_THROWS_AS(ricci_bound_margin(solve_profile(1, 2, 1), 0), DomainError);
  CHECK_THROWS_AS(profile_csv(solve_profile(1, 2, 1), 1), DomainError);
}

TEST_CASE("csv samples") {
  const std::string csv = profile_csv(solve_profile(1, 2, Rational(6, 7)), 5);
  CHECK(csv.rfind("tau,phi\n1.000000000000,0.000000000000\n", 0) == 0);
  CHECK(csv.find("3.000000000000,0.000000000000\n") != std::string::npos);
}
