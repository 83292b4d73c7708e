#include "dpcyl/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>

#include "dpcyl/error.hpp"

namespace dpcyl {

namespace {

int family_order(AdeFamily f) {
  switch (f) {
    case AdeFamily::E: return 0;
    case AdeFamily::D: return 1;
    case AdeFamily::A: return 2;
  }
  return 3;
}

char family_letter(AdeFamily f) {
  switch (f) {
    case AdeFamily::A: return 'A';
    case AdeFamily::D: return 'D';
    case AdeFamily::E: return 'E';
  }
  return '?';
}

bool canonical_before(const AdeComponent& x, const AdeComponent& y) {
  if (x.family != y.family) return family_order(x.family) < family_order(y.family);
  return x.rank > y.rank;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_type(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::InvalidArgument, "cannot parse singularity type '" + std::string(text) + "': " + why);
}

int parse_int(std::string_view digits, std::string_view text) {
  if (digits.empty() || digits.size() > 3) bad_type(text, "expected a number");
  int v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) bad_type(text, "expected a number");
    v = v * 10 + (c - '0');
  }
  return v;
}

struct Pair {
  int degree;
  const char* ade;
};

constexpr Pair kAmbiguous[] = {
    {1, "A7"}, {1, "A5+A1"}, {1, "2A3"}, {1, "A3+2A1"}, {1, "4A1"},
    {2, "A5+A1"}, {2, "A5"}, {2, "A3+2A1"}, {2, "A3+A1"}, {2, "4A1"}, {2, "3A1"},
    {4, "A3"}, {4, "2A1"},
    {6, "A1"},
};

// (-1)-curves meeting the central vertex only.
constexpr Pair kCentralRule[] = {{1, "A7"}, {2, "A5"}, {2, "A5+A1"}, {4, "A3"}};
// Central vertex together with an A1 vertex.
constexpr Pair kCombinedRule[] = {{1, "A5+A1"}, {2, "A3+A1"}, {2, "A3+2A1"}};

template <std::size_t N>
bool listed(const Pair (&table)[N], int degree, const AdeType& ade) {
  const std::string text = ade.to_string();
  return std::any_of(std::begin(table), std::end(table),
                     [&](const Pair& p) { return p.degree == degree && text == p.ade; });
}

}  // namespace

AdeType::AdeType(std::vector<AdeComponent> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    const bool ok = (c.family == AdeFamily::A && c.rank >= 1) || (c.family == AdeFamily::D && c.rank >= 4) ||
                    (c.family == AdeFamily::E && c.rank >= 6 && c.rank <= 8);
    if (!ok) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("no root system ") + family_letter(c.family) + std::to_string(c.rank));
    }
  }
  if (rank() > kMaxAdeRank) {
    throw Error(ErrorKind::InvalidArgument, "total rank " + std::to_string(rank()) + " exceeds 8");
  }
  std::stable_sort(components_.begin(), components_.end(), canonical_before);
}

AdeType AdeType::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty() || body == "smooth") return AdeType{};
  std::vector<AdeComponent> comps;
  while (true) {
    const auto plus = body.find('+');
    std::string_view term = trim(body.substr(0, plus));
    std::size_t k = 0;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    const int mult = k == 0 ? 1 : parse_int(term.substr(0, k), text);
    if (mult < 1) bad_type(text, "zero multiplicity");
    if (k >= term.size()) bad_type(text, "missing family letter");
    AdeFamily family{};
    switch (term[k]) {
      case 'A': family = AdeFamily::A; break;
      case 'D': family = AdeFamily::D; break;
      case 'E': family = AdeFamily::E; break;
      default: bad_type(text, std::string("unknown family '") + term[k] + "'");
    }
    const int rank = parse_int(term.substr(k + 1), text);
    for (int i = 0; i < mult && comps.size() <= static_cast<std::size_t>(kMaxAdeRank); ++i) {
      comps.push_back({family, rank});
    }
    if (plus == std::string_view::npos) break;
    body = body.substr(plus + 1);
  }
  return AdeType(std::move(comps));
}

int AdeType::rank() const {
  return std::accumulate(components_.begin(), components_.end(), 0,
                         [](int acc, const AdeComponent& c) { return acc + c.rank; });
}

int AdeType::count(AdeFamily family, int rank) const {
  return static_cast<int>(std::count(components_.begin(), components_.end(), AdeComponent{family, rank}));
}

int AdeType::positive_root_count() const {
  int total = 0;
  for (const auto& c : components_) {
    switch (c.family) {
      case AdeFamily::A: total += c.rank * (c.rank + 1) / 2; break;
      case AdeFamily::D: total += c.rank * (c.rank - 1); break;
      case AdeFamily::E: total += c.rank == 6 ? 36 : c.rank == 7 ? 63 : 120; break;
    }
  }
  return total;
}

std::string AdeType::to_string() const {
  if (components_.empty()) return "smooth";
  std::string out;
  for (std::size_t i = 0; i < components_.size();) {
    std::size_t j = i;
    while (j < components_.size() && components_[j] == components_[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += family_letter(components_[i].family);
    out += std::to_string(components_[i].rank);
    i = j;
  }
  return out;
}

std::string SingularityType::to_string() const {
  std::string out = ade.to_string();
  if (mark == PrimeMark::Prime) out += "'";
  if (mark == PrimeMark::DoublePrime) out += "''";
  return out;
}

bool is_ambiguous(int degree, const AdeType& ade) { return listed(kAmbiguous, degree, ade); }

SingularityType parse_singularity_type(std::string_view text, int degree) {
  if (degree < 1 || degree > 9) {
    throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(degree) + " outside [1, 9]");
  }
  std::string_view body = trim(text);
  PrimeMark mark = PrimeMark::None;
  if (body.size() >= 2 && body.substr(body.size() - 2) == "''") {
    mark = PrimeMark::DoublePrime;
    body.remove_suffix(2);
  } else if (!body.empty() && body.back() == '\'') {
    mark = PrimeMark::Prime;
    body.remove_suffix(1);
  }
  body = trim(body);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  SingularityType type{AdeType::parse(body), mark, degree};
  if (mark != PrimeMark::None && !is_ambiguous(degree, type.ade)) {
    throw Error(ErrorKind::InvalidArgument,
                "type " + type.ade.to_string() + " in degree " + std::to_string(degree) + " carries no prime mark");
  }
  return type;
}

std::vector<DynkinComponent> dynkin_components(const WeightMatrix& adjacency) {
  const int v = static_cast<int>(adjacency.size());
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) {
    if (adjacency[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(v)) {
      throw Error(ErrorKind::InvalidArgument, "adjacency matrix is not square");
    }
    for (int j = 0; j < v; ++j) {
      if (i == j) continue;
      const int w = adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (w != adjacency[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw Error(ErrorKind::InvalidArgument, "adjacency matrix is not symmetric");
      }
      if (w < 0 || w > 1) {
        throw Error(ErrorKind::NotDuVal, "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                             " meet with weight " + std::to_string(w));
      }
      if (w == 1) nbrs[static_cast<std::size_t>(i)].push_back(j);
    }
  }

  std::vector<DynkinComponent> out;
  std::vector<bool> seen(static_cast<std::size_t>(v), false);
  for (int start = 0; start < v; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> members;
    std::queue<int> todo;
    todo.push(start);
    seen[static_cast<std::size_t>(start)] = true;
    std::size_t degree_sum = 0;
    while (!todo.empty()) {
      const int x = todo.front();
      todo.pop();
      members.push_back(x);
      degree_sum += nbrs[static_cast<std::size_t>(x)].size();
      for (int y : nbrs[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          todo.push(y);
        }
      }
    }
    if (degree_sum / 2 != members.size() - 1) {
      throw Error(ErrorKind::NotDuVal, "component containing vertex " + std::to_string(start) + " has a cycle");
    }

    std::vector<int> branch;
    for (int x : members) {
      const std::size_t deg = nbrs[static_cast<std::size_t>(x)].size();
      if (deg > 3) throw Error(ErrorKind::NotDuVal, "vertex " + std::to_string(x) + " has degree " + std::to_string(deg));
      if (deg == 3) branch.push_back(x);
    }
    if (branch.size() > 1) throw Error(ErrorKind::NotDuVal, "component has more than one branch vertex");

    DynkinComponent comp;
    const int size = static_cast<int>(members.size());
    if (branch.empty()) {
      // Walk the path from an endpoint.
      int end = members.front();
      for (int x : members) {
        if (nbrs[static_cast<std::size_t>(x)].size() <= 1) {
          end = x;
          break;
        }
      }
      int prev = -1;
      int cur = end;
      while (cur != -1) {
        comp.vertices.push_back(cur);
        int next = -1;
        for (int y : nbrs[static_cast<std::size_t>(cur)]) {
          if (y != prev) next = y;
        }
        prev = cur;
        cur = next;
      }
      comp.type = {AdeFamily::A, size};
    } else {
      const int center = branch.front();
      std::vector<int> arms;
      for (int first : nbrs[static_cast<std::size_t>(center)]) {
        int len = 0;
        int prev = center;
        int cur = first;
        while (cur != -1) {
          ++len;
          int next = -1;
          for (int y : nbrs[static_cast<std::size_t>(cur)]) {
            if (y != prev) next = y;
          }
          prev = cur;
          cur = next;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        comp.type = {AdeFamily::D, size};
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        comp.type = {AdeFamily::E, size};
      } else {
        throw Error(ErrorKind::NotDuVal, "branch lengths (" + std::to_string(arms[0]) + "," + std::to_string(arms[1]) +
                                             "," + std::to_string(arms[2]) + ") are not of type D or E");
      }
      comp.vertices = members;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

AdeType classify_ade(const WeightMatrix& adjacency) {
  std::vector<AdeComponent> comps;
  for (const auto& c : dynkin_components(adjacency)) comps.push_back(c.type);
  return AdeType(std::move(comps));
}

int central_vertex(const DynkinComponent& component) {
  if (component.type.family != AdeFamily::A || component.type.rank % 2 == 0 ||
      component.vertices.size() != static_cast<std::size_t>(component.type.rank)) {
    throw Error(ErrorKind::InvalidArgument, "central vertex is defined only for A_{2k+1} components");
  }
  return component.vertices[component.vertices.size() / 2];
}

SingularityType refine(const AdeType& ade, const NegCurveGraph& graph, int degree, PrimeRule rule) {
  if (degree < 1 || degree > 9 || ade.rank() > 9 - degree) {
    throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(degree) + " is inconsistent with " +
                                                std::to_string(ade.rank()) + " (-2)-curves");
  }
  const std::vector<int> m2 = graph.minus2_indices();
  const std::vector<int> m1 = graph.minus1_indices();
  const std::vector<DynkinComponent> comps = dynkin_components(graph.minus2_adjacency());
  {
    std::vector<AdeComponent> types;
    for (const auto& c : comps) types.push_back(c.type);
    if (!(AdeType(types) == ade)) {
      throw Error(ErrorKind::InvalidArgument, "graph classifies to " + AdeType(types).to_string() + ", not " +
                                                  ade.to_string());
    }
  }

  SingularityType out{ade, PrimeMark::None, degree};
  auto meets = [&](int minus1, int local_minus2) {
    return graph.weights[static_cast<std::size_t>(minus1)][static_cast<std::size_t>(m2[static_cast<std::size_t>(local_minus2)])] > 0;
  };
  auto mark_if = [&](bool prime) { out.mark = prime ? PrimeMark::Prime : PrimeMark::DoublePrime; };

  // Central vertex of the largest odd A component (A7, A5 or A3 in the listed types).
  auto central = [&]() {
    const DynkinComponent* best = nullptr;
    for (const auto& c : comps) {
      if (c.type.family == AdeFamily::A && c.type.rank >= 3 && (!best || c.type.rank > best->type.rank)) best = &c;
    }
    return central_vertex(*best);
  };

  if (listed(kCentralRule, degree, ade)) {
    const int v = central();
    mark_if(std::any_of(m1.begin(), m1.end(), [&](int c) { return meets(c, v); }));
  } else if (listed(kCombinedRule, degree, ade)) {
    const int v = central();
    std::vector<int> a1;
    for (const auto& c : comps) {
      if (c.type == AdeComponent{AdeFamily::A, 1}) a1.push_back(c.vertices.front());
    }
    auto meets_a1 = [&](int c) { return std::any_of(a1.begin(), a1.end(), [&](int u) { return meets(c, u); }); };
    if (rule == PrimeRule::Strict) {
      mark_if(std::any_of(m1.begin(), m1.end(), [&](int c) { return meets(c, v) && meets_a1(c); }));
    } else {
      mark_if(std::any_of(m1.begin(), m1.end(), [&](int c) { return meets(c, v); }) &&
              std::any_of(m1.begin(), m1.end(), meets_a1));
    }
  } else if (degree == 4 && ade.to_string() == "2A1") {
    mark_if(std::any_of(m1.begin(), m1.end(), [&](int c) { return meets(c, 0) && meets(c, 1); }));
  } else if (degree == 6 && ade.to_string() == "A1") {
    const auto incident = std::count_if(m1.begin(), m1.end(), [&](int c) { return meets(c, 0); });
    if (incident == 2) {
      out.mark = PrimeMark::Prime;
    } else if (incident == 3) {
      out.mark = PrimeMark::DoublePrime;
    } else {
      throw Error(ErrorKind::InvalidArgument, "a degree-6 A1 surface must have 2 or 3 (-1)-curves through the "
                                              "(-2)-curve, found " + std::to_string(incident));
    }
  }
  return out;
}

}  // namespace dpcyl
