#include "report.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include "fanodelta/angle.hpp"
#include "fanodelta/bundle.hpp"
#include "fanodelta/calabi.hpp"
#include "fanodelta/cone.hpp"
#include "fanodelta/errors.hpp"
#include "fanodelta/oracle.hpp"

namespace fanodelta {

namespace {

constexpr int kPlaces = 6;

// ---- input access ----

int get_int(const ojson& in, const char* key) {
  if (!in.contains(key) || !in.at(key).is_number_integer()) {
    throw ParseError(std::string("input '") + key + "' must be an integer");
  }
  return in.at(key).get<int>();
}

Rational get_rational(const ojson& in, const char* key) {
  if (!in.contains(key)) throw ParseError(std::string("missing input '") + key + "'");
  const auto& v = in.at(key);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ParseError(std::string("input '") + key + "' must be a rational string");
  return Rational::parse(v.get<std::string>());
}

std::optional<Rational> get_optional_rational(const ojson& in, const char* key) {
  if (!in.contains(key) || in.at(key).is_null()) return std::nullopt;
  return get_rational(in, key);
}

DeltaKnowledge get_delta(const ojson& in, const char* key) {
  if (!in.contains(key) || !in.at(key).is_string()) {
    throw ParseError(std::string("input '") + key + "' must be \"ge1\" or an exact rational string");
  }
  return DeltaKnowledge::parse(in.at(key).get<std::string>());
}

std::optional<DeltaKnowledge> get_optional_delta(const ojson& in, const char* key) {
  if (!in.contains(key) || in.at(key).is_null()) return std::nullopt;
  return get_delta(in, key);
}

bool get_bool(const ojson& in, const char* key, bool fallback) {
  if (!in.contains(key) || in.at(key).is_null()) return fallback;
  if (!in.at(key).is_boolean()) throw ParseError(std::string("input '") + key + "' must be a boolean");
  return in.at(key).get<bool>();
}

// ---- shared rendering ----

ojson header(const std::string& command, const ojson& inputs) {
  ojson j;
  j["schema"] = "1";
  j["command"] = command;
  j["inputs"] = inputs;
  return j;
}

ojson optional_str(const std::optional<Rational>& q) { return q ? ojson(q->str()) : ojson(nullptr); }

ojson minimizer_list(const DeltaBreakdown& b) {
  ojson out = ojson::array();
  for (auto d : b.minimizers) out.push_back(std::string(divisor_name(d)));
  return out;
}

std::vector<std::string> breakdown_flags(const DeltaBreakdown& b) {
  std::vector<std::string> flags;
  if (b.lower_bound_only) flags.emplace_back("indeterminate without exact delta(V)");
  return flags;
}

void put_breakdown(ojson& j, const DeltaBreakdown& b) {
  j["branches"] = {{"base", optional_str(b.base_branch)}, {"v0", b.v0_branch.str()}, {"vinf", b.vinf_branch.str()}};
  j["base_at_delta_one"] = b.base_at_one.str();
  j["value"] = b.value.str();
  j["decimal"] = b.value.decimal(kPlaces);
  j["lower_bound_only"] = b.lower_bound_only;
  j["upper_bound"] = optional_str(b.upper_bound);
  j["minimizers"] = minimizer_list(b);
  j["verdict"] = stability_verdict(b);
}

std::string exact_and_decimal(const Rational& q) { return q.str() + " (" + q.decimal(kPlaces) + ")"; }

void write_row(std::ostringstream& os, const std::string& name, const std::string& exact, const std::string& dec) {
  os << "  " << std::left << std::setw(14) << name << std::setw(22) << exact << dec << '\n';
}

void write_breakdown(std::ostringstream& os, const DeltaBreakdown& b) {
  os << (b.lower_bound_only ? "delta >= " : "delta = ") << exact_and_decimal(b.value) << '\n';
  if (b.upper_bound) os << "delta <= " << exact_and_decimal(*b.upper_bound) << '\n';
  os << "verdict: " << stability_verdict(b) << '\n';
  os << "branches:\n";
  write_row(os, "branch", "exact", "decimal");
  if (b.base_branch) {
    write_row(os, "BaseDivisor", b.base_branch->str(), b.base_branch->decimal(kPlaces));
  } else {
    write_row(os, "BaseDivisor", ">= " + b.base_at_one.str(), ">= " + b.base_at_one.decimal(kPlaces));
  }
  write_row(os, "V0", b.v0_branch.str(), b.v0_branch.decimal(kPlaces));
  write_row(os, "Vinf", b.vinf_branch.str(), b.vinf_branch.decimal(kPlaces));
  os << "minimizers:";
  for (auto d : b.minimizers) os << ' ' << divisor_name(d);
  os << '\n';
  for (const auto& f : breakdown_flags(b)) os << "flag: " << f << '\n';
}

Rendered finish(const ojson& j, const std::ostringstream& text) {
  Rendered out;
  out.json = j.dump(2) + "\n";
  out.text = text.str();
  return out;
}

// ---- commands ----

Rendered bundle_command(const ojson& in) {
  const FanoBase base{get_int(in, "n"), get_rational(in, "r"), get_delta(in, "delta_v")};
  const BundleBoundary bdry{get_rational(in, "a"), get_rational(in, "b")};
  const DeltaBreakdown b = bundle_delta(base, bdry);
  const Rational A = bundle_lower_end(base.r, bdry);
  const Rational B = bundle_upper_end(base.r, bdry);
  const Rational phi = centroid_phi(A, B, base.n);

  ojson j = header("bundle", {{"n", base.n},
                              {"r", base.r.str()},
                              {"delta_v", base.delta.str()},
                              {"a", bdry.a.str()},
                              {"b", bdry.b.str()}});
  put_breakdown(j, b);
  j["proof_coverage"] = "full";
  j["flags"] = breakdown_flags(b);
  j["invariants"] = {{"A", A.str()},
                     {"B", B.str()},
                     {"phi", phi.str()},
                     {"s_v0", (phi - A).str()},
                     {"s_vinf", (B - phi).str()},
                     {"beta", bundle_beta_form(base, bdry).beta.str()}};

  std::ostringstream os;
  os << "bundle n=" << base.n << " r=" << base.r << " delta(V)=" << base.delta.str() << " a=" << bdry.a
     << " b=" << bdry.b << '\n';
  write_breakdown(os, b);
  os << "proof coverage: full\n";
  os << "A=" << A << " B=" << B << " Phi=" << phi << " S(V0)=" << (phi - A) << " S(Vinf)=" << (B - phi) << '\n';
  return finish(j, os);
}

void put_cone(ojson& j, const ConeResult& c) {
  put_breakdown(j, c.breakdown);
  j["r_effective"] = c.r_effective.str();
  j["proof_coverage"] = std::string(proof_coverage_name(c.coverage));
  j["log_discrepancy_v0"] = c.v0_log_discrepancy.str();
  auto flags = breakdown_flags(c.breakdown);
  if (c.coverage == ProofCoverage::UpperBoundOnly) flags.emplace_back("equality proven only for r<=n+1");
  j["flags"] = flags;
}

void write_cone(std::ostringstream& os, const ConeResult& c) {
  write_breakdown(os, c.breakdown);
  os << "r_effective: " << c.r_effective << '\n';
  os << "proof coverage: " << proof_coverage_name(c.coverage) << '\n';
  if (c.coverage == ProofCoverage::UpperBoundOnly) os << "flag: equality proven only for r<=n+1\n";
}

Rendered cone_command(const ojson& in) {
  const FanoBase base{get_int(in, "n"), get_rational(in, "r"), get_delta(in, "delta_v")};
  const ConeBoundary bdry{get_rational(in, "c")};
  const ConeResult c = cone_delta(base, bdry);

  ojson j = header("cone", {{"n", base.n}, {"r", base.r.str()}, {"delta_v", base.delta.str()}, {"c", bdry.c.str()}});
  put_cone(j, c);

  std::ostringstream os;
  os << "cone n=" << base.n << " r=" << base.r << " delta(V)=" << base.delta.str() << " c=" << bdry.c << '\n';
  write_cone(os, c);
  return finish(j, os);
}

Rendered cone_iterate_command(const ojson& in) {
  const HypersurfaceConeSpec spec{get_int(in, "n"), get_int(in, "d"), get_int(in, "i"), get_delta(in, "delta_v0")};
  const IteratedConeResult res = iterated_hypersurface_delta(spec);
  const Rational telescoped = telescoping_iterated_cone(spec.n, spec.d, spec.i, spec.delta_v0);
  if (telescoped != res.composition) {
    throw OracleDisagreement("iterated cone: telescoping " + telescoped.str() + " != composition " +
                             res.composition.str());
  }

  ojson j = header("cone-iterate",
                   {{"n", spec.n}, {"d", spec.d}, {"i", spec.i}, {"delta_v0", spec.delta_v0.str()}});
  j["r0"] = res.r0.str();
  j["value"] = res.composition.str();
  j["decimal"] = res.composition.decimal(kPlaces);
  j["closed_form"] = res.closed_form.str();
  j["composition"] = res.composition.str();
  j["telescoping"] = telescoped.str();
  j["verdict"] = res.composition >= Rational(1) ? "K-semistable" : "K-unstable";
  ojson steps = ojson::array();
  for (const auto& s : res.steps) {
    steps.push_back({{"dim", s.dim},
                     {"r", s.r.str()},
                     {"value", s.result.breakdown.value.str()},
                     {"minimizers", minimizer_list(s.result.breakdown)},
                     {"proof_coverage", std::string(proof_coverage_name(s.result.coverage))}});
  }
  j["steps"] = steps;

  std::ostringstream os;
  os << "cone-iterate n=" << spec.n << " d=" << spec.d << " i=" << spec.i << " delta(V0)=" << spec.delta_v0.str()
     << '\n';
  os << "delta = " << exact_and_decimal(res.composition) << '\n';
  os << "verdict: " << j["verdict"].get<std::string>() << '\n';
  os << "closed form: " << res.closed_form << "  composition: " << res.composition << "  telescoping: " << telescoped
     << '\n';
  for (const auto& s : res.steps) {
    os << "  step dim=" << s.dim << " r=" << s.r << " -> " << exact_and_decimal(s.result.breakdown.value) << '\n';
  }
  return finish(j, os);
}

Rendered branched_cone_command(const ojson& in) {
  const BranchedConeSpec spec{get_int(in, "n"), get_int(in, "k"), get_int(in, "d"), get_int(in, "l")};
  const auto delta = get_optional_delta(in, "delta_pair");
  const BranchedConeResult res = branched_cone_delta(spec, delta);

  ojson j = header("branched-cone", {{"n", spec.n},
                                     {"k", spec.k},
                                     {"d", spec.d},
                                     {"l", spec.l},
                                     {"delta_pair", delta ? ojson(delta->str()) : ojson(nullptr)}});
  put_cone(j, res.cone);
  ojson conds = ojson::array();
  for (const auto& c : res.side_conditions) conds.push_back({{"condition", c.name}, {"satisfied", c.satisfied}});
  j["side_conditions"] = conds;
  j["delta_pair"] = res.delta_pair.str();
  j["delta_pair_source"] = res.delta_from_degree ? "semistable since n+1<=d<=n+2" : "input";

  std::ostringstream os;
  os << "branched-cone n=" << spec.n << " k=" << spec.k << " d=" << spec.d << " l=" << spec.l << '\n';
  os << "side conditions:";
  for (const auto& c : res.side_conditions) os << ' ' << c.name << (c.satisfied ? " ok" : " FAILED") << ';';
  os << '\n';
  os << "delta(pair): " << res.delta_pair.str() << (res.delta_from_degree ? " (n+1<=d<=n+2)" : " (input)") << '\n';
  write_cone(os, res.cone);
  return finish(j, os);
}

Rendered angle_command(const ojson& in) {
  DivisorPairSpec spec;
  spec.n = get_int(in, "n");
  spec.lambda = get_rational(in, "lambda");
  spec.base_semistable = get_bool(in, "base_semistable", true);
  spec.divisor_semistable = get_bool(in, "divisor_semistable", true);
  spec.base_polystable = get_bool(in, "base_polystable", false);
  spec.divisor_polystable = get_bool(in, "divisor_polystable", false);
  const auto a = get_optional_rational(in, "a");
  const AngleRange range = angle_range(spec);

  ojson j = header("angle", {{"n", spec.n},
                             {"lambda", spec.lambda.str()},
                             {"a", optional_str(a)},
                             {"base_semistable", spec.base_semistable},
                             {"divisor_semistable", spec.divisor_semistable},
                             {"base_polystable", spec.base_polystable},
                             {"divisor_polystable", spec.divisor_polystable}});
  j["endpoint"] = range.endpoint.str();
  j["decimal"] = range.endpoint.decimal(kPlaces);
  j["semistable_closed"] = range.semistable_closed;
  j["polystable_open_interval"] = range.polystable_open_interval;
  j["stable_open_interval"] = range.stable_open_interval;
  j["hypotheses"] = range.hypotheses;
  if (spec.lambda < Rational(1)) j["r"] = range.r.str();

  std::ostringstream os;
  os << "angle n=" << spec.n << " lambda=" << spec.lambda << '\n';
  os << "K-semistable for a in [0, " << range.endpoint << (range.semistable_closed ? "]" : ")") << "  endpoint "
     << exact_and_decimal(range.endpoint) << '\n';
  if (spec.lambda < Rational(1)) os << "r = 1/lambda - 1 = " << range.r << '\n';
  for (const auto& h : range.hypotheses) os << "note: " << h << '\n';

  if (a) {
    const AngleClassification cls = classify_angle(spec, *a);
    ojson c;
    c["a"] = a->str();
    c["within_range"] = cls.within_range;
    c["verdict"] = cls.verdict;
    if (cls.instability_certificate) {
      ojson cert;
      put_cone(cert, *cls.instability_certificate);
      c["certificate"] = cert;
    } else {
      c["certificate"] = nullptr;
    }
    j["classification"] = c;
    os << "a=" << *a << ": " << cls.verdict << '\n';
    if (cls.instability_certificate) {
      os << "certificate: cone over S with boundary a S_inf\n";
      write_cone(os, *cls.instability_certificate);
    }
  }
  return finish(j, os);
}

Rendered calabi_command(const ojson& in) {
  const int n = get_int(in, "n");
  const Rational r = get_rational(in, "r");
  const auto beta_in = get_optional_rational(in, "beta");
  const Rational mu = get_rational(in, "mu");
  const int samples = in.contains("csv_samples") && !in.at("csv_samples").is_null() ? get_int(in, "csv_samples") : 0;

  const Rational b0 = beta_zero(n, r);
  const Rational beta = beta_in.value_or(b0);
  const CalabiProfile profile = solve_profile(n, r, beta);
  const EdgeAngles angles = edge_angles(profile);
  const bool residual_zero = ode_residual(profile).is_zero();
  const bool boundary_exact = profile.numerator(r - 1).is_zero() && profile.numerator(r + 1).is_zero();
  const Rational margin = ricci_bound_margin(profile, mu);
  const RationalFunction excess = ricci_bound_excess(profile, mu);
  const bool excess_constant = equivalent(excess, RationalFunction(Polynomial::constant(margin)));
  const bool positive = phi_positive(profile.numerator, r);
  const AdmissibleProfile admissible = hermite_profile(n, r);
  const Rational fut = futaki_invariant(admissible);
  const Rational fut_closed = futaki_closed_form(n, r);
  if (!residual_zero || !boundary_exact || !excess_constant || fut != fut_closed) {
    throw OracleDisagreement("calabi profile identities failed for n=" + std::to_string(n) + ", r=" + r.str());
  }

  ojson j = header("calabi", {{"n", n},
                              {"r", r.str()},
                              {"beta", optional_str(beta_in)},
                              {"mu", mu.str()},
                              {"csv_samples", samples > 0 ? ojson(samples) : ojson(nullptr)}});
  j["normalization"] = "L^n=1, factors of 2pi dropped";
  j["beta0"] = b0.str();
  j["beta"] = beta.str();
  j["profile"] = {{"c1", profile.c1.str()}, {"c2", profile.c2.str()}, {"numerator", profile.numerator.str("tau")}};
  j["ode_residual_zero"] = residual_zero;
  j["boundary_exact"] = boundary_exact;
  j["phi_positive"] = positive;
  j["edge_angles"] = {{"beta1", angles.beta1.str()}, {"beta2", angles.beta2.str()}};
  j["ricci_margin"] = margin.str();
  j["beta_condition"] = satisfies_beta_condition(n, r, beta, mu);
  j["futaki"] = {{"value", fut.str()},
                 {"decimal", fut.decimal(kPlaces)},
                 {"closed_form", fut_closed.str()},
                 {"profile", "hermite admissible"}};

  std::ostringstream os;
  os << "calabi n=" << n << " r=" << r << " beta=" << beta << (beta_in ? "" : " (beta0)") << " mu=" << mu << '\n';
  os << "units: L^n=1, factors of 2pi dropped\n";
  os << "beta0 = " << exact_and_decimal(b0) << '\n';
  os << "c1 = " << exact_and_decimal(profile.c1) << "  c2 = " << exact_and_decimal(profile.c2) << '\n';
  os << "tau^n phi = " << profile.numerator.str("tau") << '\n';
  os << "ode residual zero: " << (residual_zero ? "yes" : "no") << "  boundary exact: " << (boundary_exact ? "yes" : "no")
     << "  phi > 0 inside: " << (positive ? "yes" : "no") << '\n';
  os << "edge angles: beta1 = " << exact_and_decimal(angles.beta1) << "  beta2 = " << exact_and_decimal(angles.beta2)
     << '\n';
  os << "ricci margin = " << exact_and_decimal(margin)
     << "  beta condition: " << (j["beta_condition"].get<bool>() ? "holds" : "fails") << '\n';
  os << "futaki = " << exact_and_decimal(fut) << " (closed form " << fut_closed << ")\n";

  Rendered out = finish(j, os);
  if (samples > 0) out.csv = profile_csv(profile, samples);
  return out;
}

Rendered verify_command(const ojson& in) {
  const bool deep = get_bool(in, "deep", false);
  VerifySettings settings;
  ojson grid_echo;
  if (!in.contains("grid") || in.at("grid").is_null() || in.at("grid").is_string()) {
    const std::string name = in.contains("grid") && in.at("grid").is_string() ? in.at("grid").get<std::string>()
                                                                               : std::string("default");
    settings = verify_settings(deep, name);
    grid_echo = name;
  } else {
    settings = verify_settings(deep, "smoke");
    settings.grid = parse_grid_json(in.at("grid").dump());
    settings.grid_name = "file";
    grid_echo = in.at("grid");
  }
  const VerifySummary summary = run_verification(settings);

  ojson j = header("verify", {{"deep", deep}, {"grid", grid_echo}});
  j["m"] = settings.riemann_m;
  j["steps"] = settings.quadrature_steps;
  ojson reports = ojson::array();
  for (const auto& r : summary.reports) {
    reports.push_back({{"target", r.target},
                       {"closed_form", r.closed_form.str()},
                       {"approximation", r.approximation.decimal(12)},
                       {"m_or_steps", r.m_or_steps},
                       {"absolute_error", r.absolute_error.decimal(12)},
                       {"bound", r.bound.decimal(12)},
                       {"status", r.pass ? "pass" : "fail"},
                       {"detail", r.detail}});
  }
  j["reports"] = reports;
  j["findings"] = summary.findings;
  j["total"] = summary.reports.size();
  j["failures"] = summary.failures();
  j["verdict"] = summary.failures() == 0 ? "pass" : "fail";

  std::ostringstream os;
  os << "verify " << (deep ? "deep" : "standard") << " m=" << settings.riemann_m << " steps=" << settings.quadrature_steps
     << " grid=" << settings.grid_name << '\n';
  std::size_t shown = 0;
  for (const auto& r : summary.reports) {
    if (r.pass) continue;
    os << "FAIL " << r.target << ": closed " << r.closed_form << " vs " << r.approximation.decimal(12)
       << " err " << r.absolute_error.decimal(12) << " bound " << r.bound.decimal(12);
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << '\n';
    ++shown;
  }
  for (const auto& f : summary.findings) {
    if (f.find("differs") != std::string::npos) os << "finding: " << f << '\n';
  }
  os << summary.reports.size() - shown << "/" << summary.reports.size() << " oracle checks passed\n";

  Rendered out = finish(j, os);
  out.status = summary.failures() == 0 ? 0 : 4;
  return out;
}

}  // namespace

Rendered run_command(const std::string& command, const ojson& inputs) {
  if (!inputs.is_object()) throw ParseError("inputs must be a JSON object");
  if (command == "bundle") return bundle_command(inputs);
  if (command == "cone") return cone_command(inputs);
  if (command == "cone-iterate") return cone_iterate_command(inputs);
  if (command == "branched-cone") return branched_cone_command(inputs);
  if (command == "angle") return angle_command(inputs);
  if (command == "calabi") return calabi_command(inputs);
  if (command == "verify") return verify_command(inputs);
  throw ParseError("unknown command '" + command + "'");
}

Rendered run_check(const std::string& document) {
  ojson j;
  try {
    j = ojson::parse(document);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("check input is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != "1") {
    throw ParseError("check input lacks \"schema\": \"1\"");
  }
  if (!j.contains("command") || !j.at("command").is_string() || !j.contains("inputs")) {
    throw ParseError("check input lacks \"command\" or \"inputs\"");
  }
  Rendered rerun = run_command(j.at("command").get<std::string>(), j.at("inputs"));
  std::string expected = document;
  if (expected.empty() || expected.back() != '\n') expected += '\n';
  if (rerun.json != expected) {
    throw OracleDisagreement("check failed: recomputed output differs from the recorded " +
                             j.at("command").get<std::string>() + " document");
  }
  Rendered out;
  out.json = rerun.json;
  out.text = "check ok: " + j.at("command").get<std::string>() + " output reproduced byte-for-byte\n";
  return out;
}

}  // namespace fanodelta
