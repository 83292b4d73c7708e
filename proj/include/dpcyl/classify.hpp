#pragma once

// Cylinder verdict for a du Val del Pezzo surface from its degree and
// singularity type. The surfaces without an anticanonical polar cylinder are
//   (1) d = 1, every singular point of type A1, A2, A3 or D4 (if any);
//   (2) d = 2, every singular point of type A1 (if any);
//   (3) d = 3, smooth.
// Every other surface has one.

#include <span>
#include <string>

#include "dpcyl/constructions.hpp"
#include "dpcyl/dynkin.hpp"

namespace dpcyl {

enum class Answer { HasCylinder, NoCylinder };

std::string to_string(Answer answer);

struct Verdict {
  Answer answer = Answer::HasCylinder;
  // "Theorem I.(k)" for the listed exceptions, otherwise "Theorem II" or the
  // name of a construction that witnesses the cylinder.
  std::string basis;

  std::string to_string() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// InvalidArgument when the degree is outside 1..9, the type's degree differs,
// or the type has more than 9 - degree vertices.
Verdict decide_cylinder(int degree, const SingularityType& type);

// Same verdict; a HasCylinder basis names the first matching construction.
Verdict decide_cylinder(int degree, const SingularityType& type, std::span<const ConstructionEntry> witnesses);

// True iff every entry's (degree, type) has a cylinder. Vacuously true when empty.
bool verdict_consistency(std::span<const ConstructionEntry> entries);

}  // namespace dpcyl
