#pragma once

// Cylinder constructions: an anticanonical Q-divisor on the plane (the seed), a
// sequence of blow-ups h, the divisor
//   D = h^*(seed) - sum a_i E_i   (a_i the discrepancies, so [D] = -K),
// a contraction g of curves in Supp(D), and the resulting weak del Pezzo
// surface. If D is effective and its support contains every h-exceptional and
// every g-contracted curve, the complement of Supp(D) is unchanged along the
// way and stays a cylinder of the shape fixed by the seed.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpcyl/blowup.hpp"
#include "dpcyl/dynkin.hpp"

namespace dpcyl {

enum class SeedForm { TripleLine, TwoLines, LinePlusTangentConic, ThreeConcurrentLines };

enum class ComplementShape { A2, A1xA1minus1pt, A1xA1minus2pts };

std::string to_string(SeedForm form);
std::string to_string(ComplementShape shape);
SeedForm parse_seed_form(const std::string& text);
ComplementShape parse_complement(const std::string& text);

// A^2 for a triple line, A^1 x (A^1 minus a point) for two lines or a line
// tangent to a conic, A^1 x (A^1 minus two points) for three concurrent lines.
ComplementShape complement_for(SeedForm form);

struct PlaneSeed {
  SeedForm form = SeedForm::TripleLine;
  // Coefficient per plane curve id.
  std::map<std::string, Rational> coefficients;

  friend bool operator==(const PlaneSeed&, const PlaneSeed&) = default;
};

// Checks curve kinds and counts against the form, positivity, and
// sum(degree * coefficient) = 3. Throws InvalidInput.
void validate_seed(const PlaneSeed& seed, const std::vector<CurveDecl>& curves);

struct ConstructionEntry {
  std::string name;
  int degree = 0;
  SingularityType expected_type;
  PlaneSeed seed;
  std::vector<CurveDecl> curves;
  std::vector<PointDecl> points;
  QDivisor tiger;
  std::vector<std::string> contraction;
  ComplementShape complement = ComplementShape::A2;

  friend bool operator==(const ConstructionEntry&, const ConstructionEntry&) = default;
};

// Coefficients of D on the blown-up surface. Discrepancies follow
// a_i = 1 + sum of a_j over exceptional curves E_j through p_i, and the
// multiplicity of the pulled-back seed at p_i is the sum of the coefficients of
// the curves and (recursively) exceptional curves through p_i.
QDivisor derive_tiger(const PlaneSeed& seed, const std::vector<CurveDecl>& curves, const std::vector<PointDecl>& points);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Check names, in report order.
inline constexpr const char* kCheckNames[] = {
    "class_identity", "effectivity", "support_h",       "support_g", "contraction_valid",
    "type_match",     "nef_check",   "rank_cl",         "complement", "tiger_derivation",
};

struct VerificationReport {
  std::string entry;
  std::vector<CheckResult> checks;
  // Contracted model's type, when it could be computed.
  std::optional<SingularityType> computed_type;

  bool passed() const;
  const CheckResult& check(const std::string& name) const;
};

// Runs every check. Failures are recorded in the report; an entry that cannot
// even be modelled (bad references, broken seed, wrong degree) throws InvalidInput.
VerificationReport verify_entry(const ConstructionEntry& entry, PrimeRule rule = PrimeRule::Loose);

// Counts the components of D that survive on the singular surface (not
// contracted by g, not a (-2)-curve) and compares with the rank of its class
// group, rank Pic - #(-2)-curves. `contracted` is the model after g.
CheckResult rank_cl_check(const ConstructionEntry& entry, const SurfaceModel& contracted);

struct AffineRational {
  Rational constant;
  Rational slope;

  Rational at(const Rational& eps) const { return constant + slope * eps; }
};

// Seed coefficients as functions of eps, per curve id.
using SeedFamily = std::map<std::string, AffineRational>;

// Open interval (lower, upper); a missing bound is infinite.
struct OpenInterval {
  bool empty = false;
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  bool contains(const Rational& x) const;
  std::string to_string() const;
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

// Exact set of eps for which the seed family stays positive and the derived
// divisor keeps every coefficient positive (effective, containing all h- and
// g-exceptional curves). InvalidInput if the family does not match the entry's
// seed curves or leaves the anticanonical class.
OpenInterval sweep_epsilon(const ConstructionEntry& entry, const SeedFamily& family);

}  // namespace dpcyl
