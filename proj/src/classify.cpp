#include "dpcyl/classify.hpp"

#include <algorithm>

#include "dpcyl/error.hpp"

namespace dpcyl {

namespace {

bool all_components(const AdeType& ade, bool (*allowed)(const AdeComponent&)) {
  return std::all_of(ade.components().begin(), ade.components().end(), allowed);
}

bool degree_one_allowed(const AdeComponent& c) {
  return (c.family == AdeFamily::A && c.rank <= 3) || (c.family == AdeFamily::D && c.rank == 4);
}

bool a1_only(const AdeComponent& c) { return c.family == AdeFamily::A && c.rank == 1; }

}  // namespace

std::string to_string(Answer answer) { return answer == Answer::HasCylinder ? "HasCylinder" : "NoCylinder"; }

std::string Verdict::to_string() const { return dpcyl::to_string(answer) + " (basis: " + basis + ")"; }

Verdict decide_cylinder(int degree, const SingularityType& type) {
  if (degree < 1 || degree > 9) {
    throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(degree) + " is outside 1..9");
  }
  if (type.degree != degree) {
    throw Error(ErrorKind::InvalidArgument, "type was read for degree " + std::to_string(type.degree) +
                                                " but degree " + std::to_string(degree) + " was requested");
  }
  if (type.ade.rank() > 9 - degree) {
    throw Error(ErrorKind::InvalidArgument, type.ade.to_string() + " has " + std::to_string(type.ade.rank()) +
                                                " vertices; degree " + std::to_string(degree) + " allows at most " +
                                                std::to_string(9 - degree));
  }
  if (degree == 1 && all_components(type.ade, degree_one_allowed)) return {Answer::NoCylinder, "Theorem I.(1)"};
  if (degree == 2 && all_components(type.ade, a1_only)) return {Answer::NoCylinder, "Theorem I.(2)"};
  if (degree == 3 && type.ade.is_smooth()) return {Answer::NoCylinder, "Theorem I.(3)"};
  return {Answer::HasCylinder, "Theorem II"};
}

Verdict decide_cylinder(int degree, const SingularityType& type, std::span<const ConstructionEntry> witnesses) {
  Verdict v = decide_cylinder(degree, type);
  if (v.answer == Answer::HasCylinder) {
    const auto it = std::find_if(witnesses.begin(), witnesses.end(), [&](const ConstructionEntry& e) {
      return e.degree == degree && e.expected_type == type;
    });
    if (it != witnesses.end()) v.basis = it->name;
  }
  return v;
}

bool verdict_consistency(std::span<const ConstructionEntry> entries) {
  return std::all_of(entries.begin(), entries.end(), [](const ConstructionEntry& e) {
    return decide_cylinder(e.degree, e.expected_type).answer == Answer::HasCylinder;
  });
}

}  // namespace dpcyl
