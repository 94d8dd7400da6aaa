#include "fanodelta/cone.hpp"

#include <numeric>

#include "fanodelta/bundle.hpp"
#include "fanodelta/errors.hpp"

namespace fanodelta {

std::string_view proof_coverage_name(ProofCoverage coverage) {
  return coverage == ProofCoverage::Full ? "full" : "upper-bound-only";
}

ConeResult cone_delta_dimension(int dim, const Rational& r, const DeltaKnowledge& delta, const Rational& c) {
  if (dim < 0) throw DomainError("base dimension must be >= 0, got " + std::to_string(dim));
  if (r.sign() <= 0) throw DomainError("r must satisfy r > 0, got " + r.str());
  if (c.sign() < 0 || c >= Rational(1)) throw DomainError("c must satisfy 0<=c<1, got c=" + c.str());

  const Rational denom = Rational(dim + 1) * (r + 1 - c);
  const Rational v0 = Rational(dim + 2) * r / denom;
  const Rational vinf = Rational(dim + 2) * (Rational(1) - c) / (r + 1 - c);

  ConeResult out;
  out.breakdown = resolve_branches(delta, v0, v0, vinf);
  out.r_effective = r;
  out.v0_log_discrepancy = r;
  out.coverage = r > Rational(dim + 1) ? ProofCoverage::UpperBoundOnly : ProofCoverage::Full;
  return out;
}

ConeResult cone_delta(const FanoBase& base, const ConeBoundary& bdry) {
  base.validate();
  return cone_delta_dimension(base.n, base.r, base.delta, bdry.c);
}

ConeBundleConsistency cone_bundle_consistency(const FanoBase& base, const Rational& c) {
  base.validate();
  if (c.sign() < 0 || c >= Rational(1)) throw DomainError("c must satisfy 0<=c<1, got c=" + c.str());

  // a = 1 - r lies outside the log Fano range of the bundle, so the bundle
  // ends are formed directly rather than through validate_bundle_boundary.
  const BundleBoundary formal{Rational(1) - base.r, c};
  ConeBundleConsistency out;
  out.lower_end = bundle_lower_end(base.r, formal);
  out.upper_end = bundle_upper_end(base.r, formal);
  out.phi = centroid_phi(out.lower_end, out.upper_end, base.n);
  out.s_v0 = out.phi - out.lower_end;
  out.s_vinf = out.upper_end - out.phi;
  out.bundle_side = {base.r / out.phi, base.r / out.s_v0, (Rational(1) - c) / out.s_vinf};

  const ConeResult cone = cone_delta(FanoBase{base.n, base.r, DeltaKnowledge::at_least_one()}, ConeBoundary{c});
  out.cone_side = {cone.breakdown.base_at_one, cone.breakdown.v0_branch, cone.breakdown.vinf_branch};
  out.matches = out.bundle_side == out.cone_side;
  return out;
}

void validate_hypersurface_cone(const HypersurfaceConeSpec& spec) {
  if (spec.n < 1) throw DomainError("n must be a positive integer, got " + std::to_string(spec.n));
  if (spec.d < 2 || spec.d > spec.n + 1) {
    throw DomainError("d must satisfy 2<=d<=n+1, got d=" + std::to_string(spec.d) + ", n=" + std::to_string(spec.n));
  }
  if (spec.i < 1) throw DomainError("i must be >= 1, got " + std::to_string(spec.i));
}

Rational iterated_cone_closed_form(const HypersurfaceConeSpec& spec) {
  validate_hypersurface_cone(spec);
  const int n = spec.n, d = spec.d, i = spec.i;
  const Rational factor = Rational((n + 2 - d) * (n + 1 + i), (n + 1) * (n + 2 + i - d));
  return factor * min(spec.delta_v0.lower_bound(), Rational(1));
}

IteratedConeResult iterated_hypersurface_delta(const HypersurfaceConeSpec& spec) {
  validate_hypersurface_cone(spec);
  IteratedConeResult out;
  out.r0 = Rational(spec.n + 2 - spec.d);
  out.closed_form = iterated_cone_closed_form(spec);

  DeltaKnowledge delta = spec.delta_v0;
  Rational r = out.r0;
  for (int step = 0; step < spec.i; ++step) {
    const int dim = spec.n + step;
    ConeResult result = cone_delta_dimension(dim, r, delta, 0);
    if (result.breakdown.lower_bound_only) {
      throw DomainError("iterated cone step " + std::to_string(step + 1) + " only yields a lower bound");
    }
    delta = DeltaKnowledge::exact(result.breakdown.value);
    out.steps.push_back({dim, r, std::move(result)});
    r += 1;
  }
  out.composition = delta.value();

  if (out.composition != out.closed_form) {
    throw OracleDisagreement("iterated cone: closed form " + out.closed_form.str() + " != composition " +
                             out.composition.str());
  }
  return out;
}

Rational branched_slope(const BranchedConeSpec& spec) {
  return Rational(spec.n + 1) * Rational(spec.k) - Rational(spec.k - 1) * Rational(spec.d);
}

std::vector<SideCondition> branched_side_conditions(const BranchedConeSpec& spec) {
  const long dl_minus_one = static_cast<long>(spec.d) * spec.l - 1;
  return {
      {"l<k", spec.l < spec.k},
      {"gcd(k,l)=1", std::gcd(spec.k, spec.l) == 1},
      {"k | d*l-1", dl_minus_one % spec.k == 0},
      {"r>0", branched_slope(spec).sign() > 0},
  };
}

bool branched_pair_semistable_by_degree(const BranchedConeSpec& spec) {
  return spec.n + 1 <= spec.d && spec.d <= spec.n + 2;
}

BranchedConeResult branched_cone_delta(const BranchedConeSpec& spec,
                                       const std::optional<DeltaKnowledge>& delta_pair) {
  if (spec.n < 1) throw DomainError("n must be a positive integer, got " + std::to_string(spec.n));
  if (spec.k < 2) throw DomainError("k must be >= 2, got " + std::to_string(spec.k));
  if (spec.d < 1) throw DomainError("d must be a positive integer, got " + std::to_string(spec.d));
  if (spec.l < 1) throw DomainError("l must be a positive integer, got " + std::to_string(spec.l));

  BranchedConeResult out;
  out.side_conditions = branched_side_conditions(spec);
  std::string failed;
  for (const auto& cond : out.side_conditions) {
    if (!cond.satisfied) failed += (failed.empty() ? "" : "; ") + cond.name;
  }
  if (!failed.empty()) throw DomainError("branched cone side conditions violated: " + failed);

  if (delta_pair) {
    out.delta_pair = *delta_pair;
  } else if (branched_pair_semistable_by_degree(spec)) {
    out.delta_from_degree = true;
  } else {
    throw DomainError("delta of the branch pair is required unless n+1<=d<=n+2, got d=" + std::to_string(spec.d));
  }
  out.cone = cone_delta(FanoBase{spec.n, branched_slope(spec), out.delta_pair}, ConeBoundary{0});
  return out;
}

}  // namespace fanodelta
