#include "dpcyl/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dpcyl/error.hpp"
#include "dpcyl/negcurves.hpp"

namespace dpcyl {

namespace {

struct PulledBack {
  std::vector<Rational> multiplicity;  // of the pulled-back seed at p_i
  std::vector<Rational> discrepancy;   // a_i
};

// Both recursions run over the loci of each point; curve coefficients enter
// only the multiplicity.
PulledBack pull_back(const std::map<std::string, Rational>& coefficients, const std::vector<PointDecl>& points) {
  PulledBack out;
  for (const auto& p : points) {
    Rational mult = 0;
    Rational disc = 1;
    for (const auto& id : p.loci()) {
      if (const auto j = parse_exceptional_id(id)) {
        mult += out.multiplicity.at(static_cast<std::size_t>(*j - 1));
        disc += out.discrepancy.at(static_cast<std::size_t>(*j - 1));
      } else {
        const auto it = coefficients.find(id);
        if (it != coefficients.end()) mult += it->second;
      }
    }
    out.multiplicity.push_back(mult);
    out.discrepancy.push_back(disc);
  }
  return out;
}

SurfaceModel build_or_invalid(const std::vector<CurveDecl>& curves, const std::vector<PointDecl>& points) {
  try {
    return build_model(curves, points);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
}

CheckResult result(const char* name, bool pass, std::string detail) { return {name, pass, std::move(detail)}; }

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

std::string to_string(SeedForm form) {
  switch (form) {
    case SeedForm::TripleLine: return "TripleLine";
    case SeedForm::TwoLines: return "TwoLines";
    case SeedForm::LinePlusTangentConic: return "LinePlusTangentConic";
    case SeedForm::ThreeConcurrentLines: return "ThreeConcurrentLines";
  }
  return "?";
}

std::string to_string(ComplementShape shape) {
  switch (shape) {
    case ComplementShape::A2: return "A2";
    case ComplementShape::A1xA1minus1pt: return "A1xA1minus1pt";
    case ComplementShape::A1xA1minus2pts: return "A1xA1minus2pts";
  }
  return "?";
}

SeedForm parse_seed_form(const std::string& text) {
  for (SeedForm f : {SeedForm::TripleLine, SeedForm::TwoLines, SeedForm::LinePlusTangentConic,
                     SeedForm::ThreeConcurrentLines}) {
    if (to_string(f) == text) return f;
  }
  throw Error(ErrorKind::InvalidInput, "unknown seed form '" + text + "'");
}

ComplementShape parse_complement(const std::string& text) {
  for (ComplementShape s : {ComplementShape::A2, ComplementShape::A1xA1minus1pt, ComplementShape::A1xA1minus2pts}) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorKind::InvalidInput, "unknown complement shape '" + text + "'");
}

ComplementShape complement_for(SeedForm form) {
  switch (form) {
    case SeedForm::TripleLine: return ComplementShape::A2;
    case SeedForm::TwoLines:
    case SeedForm::LinePlusTangentConic: return ComplementShape::A1xA1minus1pt;
    case SeedForm::ThreeConcurrentLines: return ComplementShape::A1xA1minus2pts;
  }
  return ComplementShape::A2;
}

void validate_seed(const PlaneSeed& seed, const std::vector<CurveDecl>& curves) {
  int lines = 0;
  int conics = 0;
  Rational total = 0;
  for (const auto& [id, c] : seed.coefficients) {
    const auto it = std::find_if(curves.begin(), curves.end(), [&](const CurveDecl& d) { return d.id == id; });
    if (it == curves.end()) throw Error(ErrorKind::InvalidInput, "seed names undeclared curve '" + id + "'");
    if (c <= 0) throw Error(ErrorKind::InvalidInput, "seed coefficient on " + id + " is not positive");
    (it->kind == CurveKind::Line ? lines : conics) += 1;
    total += it->degree() * c;
  }
  if (seed.coefficients.size() != curves.size()) {
    throw Error(ErrorKind::InvalidInput, "every declared plane curve must carry a seed coefficient");
  }
  bool shape_ok = false;
  switch (seed.form) {
    case SeedForm::TripleLine: shape_ok = lines == 1 && conics == 0 && seed.coefficients.begin()->second == 3; break;
    case SeedForm::TwoLines: shape_ok = lines == 2 && conics == 0; break;
    case SeedForm::LinePlusTangentConic: shape_ok = lines == 1 && conics == 1; break;
    case SeedForm::ThreeConcurrentLines: shape_ok = lines == 3 && conics == 0; break;
  }
  if (!shape_ok) throw Error(ErrorKind::InvalidInput, "curves do not match seed form " + to_string(seed.form));
  if (total != 3) {
    throw Error(ErrorKind::InvalidInput, "seed has degree " + to_string(total) + ", an anticanonical divisor has degree 3");
  }
}

QDivisor derive_tiger(const PlaneSeed& seed, const std::vector<CurveDecl>& curves, const std::vector<PointDecl>& points) {
  build_model(curves, points);
  validate_seed(seed, curves);
  const PulledBack pb = pull_back(seed.coefficients, points);
  QDivisor tiger;
  for (const auto& [id, c] : seed.coefficients) tiger.set(id, c);
  for (std::size_t i = 0; i < points.size(); ++i) {
    tiger.set(exceptional_id(static_cast<int>(i + 1)), pb.multiplicity[i] - pb.discrepancy[i]);
  }
  return tiger;
}

bool VerificationReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
  if (it == checks.end()) throw Error(ErrorKind::InvalidArgument, "no check named " + name);
  return *it;
}

CheckResult rank_cl_check(const ConstructionEntry& entry, const SurfaceModel& contracted) {
  std::vector<std::string> survivors;
  for (const auto& id : entry.tiger.support()) {
    if (contracted.contains(id) && self_intersection(contracted, id) != -2) survivors.push_back(id);
  }
  const int minus2 = static_cast<int>(simple_roots(contracted).size());
  const int cl_rank = contracted.picard_rank() - minus2;
  const bool pass = static_cast<int>(survivors.size()) >= cl_rank;
  std::ostringstream os;
  os << survivors.size() << " surviving component(s) {" << join(survivors) << "} vs class group rank "
     << contracted.picard_rank() << " - " << minus2 << " = " << cl_rank;
  return result("rank_cl", pass, os.str());
}

VerificationReport verify_entry(const ConstructionEntry& entry, PrimeRule rule) {
  try {
    validate_seed(entry.seed, entry.curves);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidInput, entry.name + ": " + e.what());
  }
  const SurfaceModel model = build_or_invalid(entry.curves, entry.points);
  const int expected_degree = 9 - (model.n() - static_cast<int>(entry.contraction.size()));
  if (entry.degree != expected_degree) {
    throw Error(ErrorKind::InvalidInput, entry.name + ": degree " + std::to_string(entry.degree) + " but " +
                                             std::to_string(model.n()) + " blow-ups and " +
                                             std::to_string(entry.contraction.size()) + " contractions give " +
                                             std::to_string(expected_degree));
  }
  if (entry.expected_type.degree != entry.degree) {
    throw Error(ErrorKind::InvalidInput, entry.name + ": expected type carries a different degree");
  }
  for (const auto& id : entry.tiger.support()) {
    if (!model.contains(id)) throw Error(ErrorKind::InvalidInput, entry.name + ": tiger names unknown curve '" + id + "'");
  }

  VerificationReport report;
  report.entry = entry.name;
  const DivisorClass anti = -model.canonical();

  // (e) first: later checks run on the contracted model.
  std::optional<SurfaceModel> contracted;
  CheckResult contraction_check;
  try {
    contracted = contract(model, entry.contraction);
    contraction_check = result("contraction_valid", true,
                               entry.contraction.empty() ? "no contraction" : "contracted " + join(entry.contraction));
  } catch (const Error& e) {
    contraction_check = result("contraction_valid", false, e.what());
  }

  {
    const DivisorClass residual = anti - entry.tiger.class_in(model.classes(), model.n());
    std::string detail;
    bool pass = residual.is_zero();
    if (!pass) {
      detail = "sum differs from -K; residual -K - D = " + residual.to_string();
    } else if (contracted) {
      QDivisor pushed;
      for (const auto& [id, c] : entry.tiger.terms()) {
        if (contracted->contains(id)) pushed.set(id, c);
      }
      const DivisorClass after = -contracted->canonical() - pushed.class_in(contracted->classes(), model.n());
      pass = after.is_zero();
      detail = pass ? "D = -K before and after contraction"
                    : "pushed-forward divisor differs from -K; residual " + after.to_string();
    } else {
      detail = "D = -K";
    }
    report.checks.push_back(result("class_identity", pass, detail));
  }

  {
    std::vector<std::string> bad;
    for (const auto& [id, c] : entry.tiger.terms()) {
      if (c <= 0) bad.push_back(id + "=" + to_string(c));
    }
    const bool pass = !entry.tiger.empty() && bad.empty();
    report.checks.push_back(result("effectivity", pass, pass ? "all coefficients positive" : "non-positive: " + join(bad)));
  }

  {
    std::vector<std::string> missing;
    for (int i = 1; i <= model.n(); ++i) {
      if (entry.tiger.coefficient(exceptional_id(i)) <= 0) missing.push_back(exceptional_id(i));
    }
    report.checks.push_back(result("support_h", missing.empty(),
                                   missing.empty() ? "contains all exceptional curves of h"
                                                   : "missing: " + join(missing)));
  }

  {
    std::vector<std::string> missing;
    for (const auto& id : entry.contraction) {
      if (entry.tiger.coefficient(id) <= 0) missing.push_back(id);
    }
    if (contracted) {
      for (const auto& id : simple_roots(*contracted)) {
        if (entry.tiger.coefficient(id) <= 0) missing.push_back(id + " (-2)");
      }
    }
    report.checks.push_back(result("support_g", missing.empty(),
                                   missing.empty() ? "contains all g-contracted and (-2)-curves"
                                                   : "missing: " + join(missing)));
  }

  report.checks.push_back(contraction_check);

  if (contracted) {
    try {
      const NegCurveGraph graph = neg_curve_graph(*contracted);
      const AdeType ade = classify_ade(graph.minus2_adjacency());
      const SingularityType computed = refine(ade, graph, entry.degree, rule);
      report.computed_type = computed;
      const bool pass = computed == entry.expected_type;
      report.checks.push_back(result("type_match", pass,
                                     "computed " + computed.to_string() + ", expected " +
                                         entry.expected_type.to_string()));
    } catch (const Error& e) {
      report.checks.push_back(result("type_match", false, e.what()));
    }
    const bool nef = anticanonical_check(*contracted);
    report.checks.push_back(result("nef_check", nef, nef ? "-K nef and big" : "-K is not nef and big"));
    report.checks.push_back(rank_cl_check(entry, *contracted));
  } else {
    for (const char* name : {"type_match", "nef_check", "rank_cl"}) {
      report.checks.push_back(result(name, false, "skipped: contraction failed"));
    }
  }

  {
    const ComplementShape shape = complement_for(entry.seed.form);
    const bool pass = shape == entry.complement;
    report.checks.push_back(result("complement", pass,
                                   "seed " + to_string(entry.seed.form) + " gives " + to_string(shape) +
                                       ", entry declares " + to_string(entry.complement)));
  }

  {
    const QDivisor derived = derive_tiger(entry.seed, entry.curves, entry.points);
    std::vector<std::string> diffs;
    std::set<std::string> ids = derived.support();
    for (const auto& id : entry.tiger.support()) ids.insert(id);
    for (const auto& id : ids) {
      if (derived.coefficient(id) != entry.tiger.coefficient(id)) {
        diffs.push_back(id + ": derived " + to_string(derived.coefficient(id)) + ", declared " +
                        to_string(entry.tiger.coefficient(id)));
      }
    }
    report.checks.push_back(result("tiger_derivation", diffs.empty(),
                                   diffs.empty() ? "matches derived coefficients" : join(diffs)));
  }
  return report;
}

bool OpenInterval::contains(const Rational& x) const {
  if (empty) return false;
  if (lower && !(x > *lower)) return false;
  if (upper && !(x < *upper)) return false;
  return true;
}

std::string OpenInterval::to_string() const {
  if (empty) return "empty";
  return "(" + (lower ? dpcyl::to_string(*lower) : std::string("-inf")) + ", " +
         (upper ? dpcyl::to_string(*upper) : std::string("+inf")) + ")";
}

OpenInterval sweep_epsilon(const ConstructionEntry& entry, const SeedFamily& family) {
  build_or_invalid(entry.curves, entry.points);
  std::map<std::string, Rational> constants;
  std::map<std::string, Rational> slopes;
  Rational degree_const = 0;
  Rational degree_slope = 0;
  for (const auto& curve : entry.curves) {
    const auto it = family.find(curve.id);
    if (it == family.end()) throw Error(ErrorKind::InvalidInput, "family has no coefficient for " + curve.id);
    constants[curve.id] = it->second.constant;
    slopes[curve.id] = it->second.slope;
    degree_const += curve.degree() * it->second.constant;
    degree_slope += curve.degree() * it->second.slope;
  }
  if (family.size() != entry.curves.size()) {
    throw Error(ErrorKind::InvalidInput, "family names curves outside the entry");
  }
  if (degree_const != 3 || degree_slope != 0) {
    throw Error(ErrorKind::InvalidInput, "family is not anticanonical for every eps");
  }

  // Every coefficient is constant + slope * eps and must be positive.
  std::vector<AffineRational> constraints;
  for (const auto& curve : entry.curves) constraints.push_back(family.at(curve.id));
  const PulledBack at_const = pull_back(constants, entry.points);
  const PulledBack at_slope = pull_back(slopes, entry.points);
  for (std::size_t i = 0; i < entry.points.size(); ++i) {
    constraints.push_back({at_const.multiplicity[i] - at_const.discrepancy[i], at_slope.multiplicity[i]});
  }

  OpenInterval out;
  for (const auto& c : constraints) {
    if (c.slope == 0) {
      if (c.constant <= 0) return OpenInterval{true, std::nullopt, std::nullopt};
      continue;
    }
    const Rational root = -c.constant / c.slope;
    if (c.slope > 0) {
      if (!out.lower || root > *out.lower) out.lower = root;
    } else {
      if (!out.upper || root < *out.upper) out.upper = root;
    }
  }
  if (out.lower && out.upper && *out.lower >= *out.upper) return OpenInterval{true, std::nullopt, std::nullopt};
  return out;
}

}  // namespace dpcyl
