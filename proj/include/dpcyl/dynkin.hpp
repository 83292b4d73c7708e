#pragma once

// ADE classification of (-2)-curve configurations and the prime / double-prime
// refinement that separates singularity types sharing an ADE multiset.
//
// Text syntax: components sorted E before D before A, higher rank first,
// joined by '+', repeated components written with a multiplicity prefix, and an
// optional trailing ' or '' for the mark. The empty type is "smooth".
// Examples: "E6+A2", "D4+3A1", "A5+A1'", "2A1''".

#include <string>
#include <string_view>
#include <vector>

#include "dpcyl/negcurves.hpp"

namespace dpcyl {

enum class AdeFamily { A, D, E };

struct AdeComponent {
  AdeFamily family = AdeFamily::A;
  int rank = 1;

  friend bool operator==(const AdeComponent&, const AdeComponent&) = default;
};

inline constexpr int kMaxAdeRank = 8;

class AdeType {
 public:
  AdeType() = default;
  // Validates each component (A_n n>=1, D_n n>=4, E_6..E_8) and total rank <= 8.
  explicit AdeType(std::vector<AdeComponent> components);

  static AdeType parse(std::string_view text);

  const std::vector<AdeComponent>& components() const { return components_; }
  int rank() const;
  bool is_smooth() const { return components_.empty(); }
  int count(AdeFamily family, int rank) const;
  int positive_root_count() const;

  std::string to_string() const;
  friend bool operator==(const AdeType&, const AdeType&) = default;

 private:
  std::vector<AdeComponent> components_;
};

enum class PrimeMark { None, Prime, DoublePrime };

struct SingularityType {
  AdeType ade;
  PrimeMark mark = PrimeMark::None;
  int degree = 0;

  std::string to_string() const;
  friend bool operator==(const SingularityType&, const SingularityType&) = default;
};

// True for the (degree, ADE) pairs that carry two singularity types.
bool is_ambiguous(int degree, const AdeType& ade);

// Parses "A5+A1'" style text; a mark is only accepted for ambiguous pairs.
SingularityType parse_singularity_type(std::string_view text, int degree);

struct DynkinComponent {
  AdeComponent type;
  // Vertex indices into the classified adjacency; path order for A_n.
  std::vector<int> vertices;
};

// NotDuVal on cycles, weights other than 0/1, several branch vertices or a
// non-ADE branch profile.
std::vector<DynkinComponent> dynkin_components(const WeightMatrix& adjacency);
AdeType classify_ade(const WeightMatrix& adjacency);

// Middle vertex of an A_{2k+1} path; InvalidArgument for anything else.
int central_vertex(const DynkinComponent& component);

// How "(-1)-curves meeting the central vertex and the vertex of A1" is read for
// the combined types A5+A1 (d=1), A3+A1 and A3+2A1 (d=2):
//   Loose  - some (-1)-curve meets the central vertex and some (-1)-curve meets an A1 vertex;
//   Strict - a single (-1)-curve meets both.
enum class PrimeRule { Loose, Strict };

SingularityType refine(const AdeType& ade, const NegCurveGraph& graph, int degree,
                       PrimeRule rule = PrimeRule::Loose);

}  // namespace dpcyl
