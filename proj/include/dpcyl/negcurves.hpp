#pragma once

// Negative curves on a weak del Pezzo model.
//
// Two working assumptions, both checked against every shipped construction:
//  * Under the genericity contract the irreducible (-2)-curves are exactly the
//    declared curves and exceptional transforms of square -2.
//  * A (-1)-class C is represented by an irreducible curve iff C.r >= 0 for every
//    (-2)-curve r.

#include <string>
#include <vector>

#include "dpcyl/blowup.hpp"

namespace dpcyl {

using WeightMatrix = std::vector<std::vector<int>>;

// Ids of surviving curves with square -2.
std::vector<std::string> simple_roots(const SurfaceModel& model);

// Positive roots of the subsystem spanned by the simple roots, sorted.
// InvalidConfiguration if two (-2)-curves meet with multiplicity other than 0 or 1.
std::vector<DivisorClass> effective_roots(const SurfaceModel& model);

// All (-1)-classes of the surface (ambient-lattice representatives), sorted.
// InvalidState outside the del Pezzo range.
std::vector<DivisorClass> minus1_classes(const SurfaceModel& model);

// (-1)-classes meeting every (-2)-curve non-negatively. InvalidState unless
// -K is nef and big and the surface is in the del Pezzo range.
std::vector<DivisorClass> irreducible_minus1(const SurfaceModel& model);

enum class VertexKind { Minus2, Minus1 };

struct NegCurveVertex {
  // Curve id when the class belongs to a surviving declared curve, otherwise
  // the compact class string.
  std::string label;
  VertexKind kind = VertexKind::Minus2;
  DivisorClass cls;
};

struct NegCurveGraph {
  // Minus2 vertices first, each group sorted by class.
  std::vector<NegCurveVertex> vertices;
  // Symmetric intersection numbers; the diagonal holds self-intersections.
  WeightMatrix weights;

  std::vector<int> minus2_indices() const;
  std::vector<int> minus1_indices() const;
  // Weights restricted to Minus2 vertices, in minus2_indices() order, with a zero diagonal.
  WeightMatrix minus2_adjacency() const;
};

NegCurveGraph neg_curve_graph(const SurfaceModel& model);

}  // namespace dpcyl
