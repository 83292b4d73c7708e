#include "dpcyl/negcurves.hpp"

#include <algorithm>
#include <set>

#include "dpcyl/error.hpp"

namespace dpcyl {

namespace {

std::vector<DivisorClass> simple_root_classes(const SurfaceModel& model) {
  std::vector<DivisorClass> roots;
  for (const auto& id : simple_roots(model)) roots.push_back(model.class_of(id));
  return roots;
}

void require_del_pezzo_range(const SurfaceModel& model) {
  if (model.picard_rank() - 1 > kMaxEnumerationBlowups) {
    throw Error(ErrorKind::InvalidState, "Picard rank " + std::to_string(model.picard_rank()) +
                                             " is outside the del Pezzo range");
  }
}

int to_int(const Rational& r) {
  if (!is_integer(r)) throw Error(ErrorKind::InvalidState, "non-integral intersection number " + to_string(r));
  return static_cast<int>(r.get_num().get_si());
}

}  // namespace

std::vector<std::string> simple_roots(const SurfaceModel& model) {
  std::vector<std::string> out;
  for (const auto& id : model.ids()) {
    const DivisorClass& c = model.class_of(id);
    if (intersect(c, c) == -2) {
      if (intersect(c, model.canonical()) != 0) {
        throw Error(ErrorKind::InvalidState, "curve '" + id + "' has square -2 but K.C != 0");
      }
      out.push_back(id);
    }
  }
  return out;
}

std::vector<DivisorClass> effective_roots(const SurfaceModel& model) {
  const std::vector<DivisorClass> simple = simple_root_classes(model);
  for (std::size_t i = 0; i < simple.size(); ++i) {
    for (std::size_t j = i + 1; j < simple.size(); ++j) {
      const Rational w = intersect(simple[i], simple[j]);
      if (w != 0 && w != 1) {
        throw Error(ErrorKind::InvalidConfiguration,
                    "(-2)-curves " + simple[i].to_string() + " and " + simple[j].to_string() + " meet with multiplicity " +
                        to_string(w));
      }
    }
  }
  // r + s is a root exactly when r.s = 1.
  std::set<DivisorClass> closure(simple.begin(), simple.end());
  std::vector<DivisorClass> frontier(simple.begin(), simple.end());
  while (!frontier.empty()) {
    std::vector<DivisorClass> next;
    const std::vector<DivisorClass> current(closure.begin(), closure.end());
    for (const auto& r : frontier) {
      for (const auto& s : current) {
        if (intersect(r, s) != 1) continue;
        DivisorClass sum = r + s;
        if (closure.insert(sum).second) next.push_back(std::move(sum));
      }
    }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

std::vector<DivisorClass> minus1_classes(const SurfaceModel& model) {
  require_del_pezzo_range(model);
  if (model.contracted().empty()) return enumerate_minus1(model.n());
  return enumerate_orthogonal(model.canonical(), model.contracted_classes(), NegativeKind::Minus1);
}

std::vector<DivisorClass> irreducible_minus1(const SurfaceModel& model) {
  require_del_pezzo_range(model);
  if (!anticanonical_check(model)) {
    throw Error(ErrorKind::InvalidState, "-K is not nef and big on this model");
  }
  const std::vector<DivisorClass> simple = simple_root_classes(model);
  std::vector<DivisorClass> out;
  for (const auto& c : minus1_classes(model)) {
    const bool irreducible =
        std::all_of(simple.begin(), simple.end(), [&](const DivisorClass& r) { return intersect(c, r) >= 0; });
    if (irreducible) out.push_back(c);
  }
  return out;
}

std::vector<int> NegCurveGraph::minus2_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].kind == VertexKind::Minus2) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> NegCurveGraph::minus1_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].kind == VertexKind::Minus1) out.push_back(static_cast<int>(i));
  }
  return out;
}

WeightMatrix NegCurveGraph::minus2_adjacency() const {
  const std::vector<int> idx = minus2_indices();
  WeightMatrix adj(idx.size(), std::vector<int>(idx.size(), 0));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (i != j) adj[i][j] = weights[static_cast<std::size_t>(idx[i])][static_cast<std::size_t>(idx[j])];
    }
  }
  return adj;
}

NegCurveGraph neg_curve_graph(const SurfaceModel& model) {
  // Validates the (-2)-configuration before anything else.
  effective_roots(model);

  std::map<DivisorClass, std::string> labels;
  for (const auto& [id, cls] : model.classes()) labels.emplace(cls, id);
  auto label_of = [&](const DivisorClass& c) {
    const auto it = labels.find(c);
    return it == labels.end() ? c.to_string() : it->second;
  };

  NegCurveGraph graph;
  std::vector<DivisorClass> minus2 = simple_root_classes(model);
  std::sort(minus2.begin(), minus2.end());
  for (const auto& c : minus2) graph.vertices.push_back({label_of(c), VertexKind::Minus2, c});
  for (const auto& c : irreducible_minus1(model)) graph.vertices.push_back({label_of(c), VertexKind::Minus1, c});

  const std::size_t v = graph.vertices.size();
  graph.weights.assign(v, std::vector<int>(v, 0));
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      graph.weights[i][j] = to_int(intersect(graph.vertices[i].cls, graph.vertices[j].cls));
    }
  }
  return graph;
}

}  // namespace dpcyl
