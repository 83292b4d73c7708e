#pragma once

// Coordinate-free blow-up calculus. A configuration is a list of plane curves
// (lines and conics) plus an ordered list of points p_1..p_n, each either a
// point of the plane or an infinitely near point on the exceptional curve of an
// earlier blow-up, together with the declared curves / earlier exceptional
// curves whose current proper transforms pass through it. Points are otherwise
// assumed general (the genericity contract): no incidences hold beyond the
// declared ones.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpcyl/lattice.hpp"

namespace dpcyl {

enum class CurveKind { Line, Conic };

struct CurveDecl {
  std::string id;
  CurveKind kind = CurveKind::Line;

  int degree() const { return kind == CurveKind::Line ? 1 : 2; }
  friend bool operator==(const CurveDecl&, const CurveDecl&) = default;
};

struct PointDecl {
  int ordinal = 0;
  // Ordinal j of the exceptional curve E_j this point is infinitely near to.
  std::optional<int> parent;
  // Ids of declared curves and earlier exceptional curves ("E<j>") through the
  // point, excluding the parent's exceptional curve.
  std::vector<std::string> on;

  // `on` plus the parent's exceptional id.
  std::vector<std::string> loci() const;
  friend bool operator==(const PointDecl&, const PointDecl&) = default;
};

// "E<i>" for the exceptional curve of the i-th blow-up.
std::string exceptional_id(int ordinal);
std::optional<int> parse_exceptional_id(const std::string& id);

class SurfaceModel {
 public:
  // Ambient blow-up count; classes live in the rank n+1 lattice even after contraction.
  int n() const { return canonical_.n(); }
  int picard_rank() const { return n() + 1 - static_cast<int>(contracted_.size()); }
  // K^2 of the (possibly contracted) surface.
  Rational degree() const { return intersect(canonical_, canonical_); }

  // Canonical class, pulled back to the ambient lattice after contractions.
  const DivisorClass& canonical() const { return canonical_; }

  // Surviving ids in declaration order: curves first, then E1..En.
  const std::vector<std::string>& ids() const { return ids_; }
  bool contains(const std::string& id) const { return classes_.count(id) > 0; }
  // Throws InvalidReference for unknown or contracted ids.
  const DivisorClass& class_of(const std::string& id) const;
  const std::map<std::string, DivisorClass>& classes() const { return classes_; }

  // Declared plane curves (surviving or not) with their degrees.
  const std::map<std::string, int>& curve_degrees() const { return curve_degrees_; }

  const std::vector<std::string>& contracted() const { return contracted_; }
  // Class of each contracted curve at the moment it was contracted; pairwise
  // orthogonal (-1)-classes spanning the complement of the surviving lattice.
  const std::vector<DivisorClass>& contracted_classes() const { return contracted_classes_; }

  bool genericity() const { return genericity_; }

 private:
  friend SurfaceModel build_model(std::span<const CurveDecl>, std::span<const PointDecl>);
  friend SurfaceModel contract(const SurfaceModel&, std::span<const std::string>);

  DivisorClass canonical_;
  std::vector<std::string> ids_;
  std::map<std::string, DivisorClass> classes_;
  std::map<std::string, int> curve_degrees_;
  std::vector<std::string> contracted_;
  std::vector<DivisorClass> contracted_classes_;
  bool genericity_ = true;
};

// Errors: InvalidReference for dangling ids or misnumbered points,
// InconsistentConfiguration when two loci through a point no longer meet
// (their current intersection number is zero).
SurfaceModel build_model(std::span<const CurveDecl> curves, std::span<const PointDecl> points);

Rational self_intersection(const SurfaceModel& model, const std::string& id);

// Contracts the listed curves in order. Each must be a (-1)-curve at its turn;
// NotContractible otherwise, naming the curve and its square.
SurfaceModel contract(const SurfaceModel& model, std::span<const std::string> sequence);

// -K nef and big on the modelled surface: (-K)^2 > 0 and -K.C >= 0 for every
// surviving curve. Also runs the (-1)-class self-test when the surface is in
// the del Pezzo range.
bool anticanonical_check(const SurfaceModel& model);

}  // namespace dpcyl
