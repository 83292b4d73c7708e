#include "dpcyl/blowup.hpp"

#include <algorithm>
#include <set>

#include "dpcyl/error.hpp"

namespace dpcyl {

std::vector<std::string> PointDecl::loci() const {
  std::vector<std::string> all;
  if (parent) all.push_back(exceptional_id(*parent));
  for (const auto& id : on) {
    if (std::find(all.begin(), all.end(), id) == all.end()) all.push_back(id);
  }
  return all;
}

std::string exceptional_id(int ordinal) { return "E" + std::to_string(ordinal); }

std::optional<int> parse_exceptional_id(const std::string& id) {
  if (id.size() < 2 || id[0] != 'E' || id[1] == '0') return std::nullopt;
  int value = 0;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9' || value > 1000) return std::nullopt;
    value = value * 10 + (id[i] - '0');
  }
  return value;
}

const DivisorClass& SurfaceModel::class_of(const std::string& id) const {
  const auto it = classes_.find(id);
  if (it == classes_.end()) {
    const bool was_contracted = std::find(contracted_.begin(), contracted_.end(), id) != contracted_.end();
    throw Error(ErrorKind::InvalidReference,
                was_contracted ? "curve '" + id + "' has been contracted" : "unknown curve '" + id + "'");
  }
  return it->second;
}

SurfaceModel build_model(std::span<const CurveDecl> curves, std::span<const PointDecl> points) {
  const int n = static_cast<int>(points.size());
  if (n > kMaxBlowups) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(n) + " blow-ups exceed the supported maximum of " +
                                                std::to_string(kMaxBlowups));
  }

  SurfaceModel model;
  model.canonical_ = canonical_class(n);

  for (const auto& curve : curves) {
    if (curve.id.empty() || parse_exceptional_id(curve.id) || model.classes_.count(curve.id)) {
      throw Error(ErrorKind::InvalidReference, "curve id '" + curve.id + "' is empty, duplicated or reserved");
    }
    DivisorClass c = DivisorClass::zero(n);
    c += Rational(curve.degree()) * DivisorClass::hyperplane(n);
    model.classes_.emplace(curve.id, std::move(c));
    model.curve_degrees_.emplace(curve.id, curve.degree());
    model.ids_.push_back(curve.id);
  }

  for (int i = 1; i <= n; ++i) {
    const PointDecl& p = points[static_cast<std::size_t>(i - 1)];
    const std::string here = "point " + std::to_string(i);
    if (p.ordinal != i) {
      throw Error(ErrorKind::InvalidReference,
                  "points must be numbered 1..n in blow-up order; found " + std::to_string(p.ordinal) + " at position " +
                      std::to_string(i));
    }
    if (p.parent && (*p.parent < 1 || *p.parent >= i)) {
      throw Error(ErrorKind::InvalidReference, here + " has parent E" + std::to_string(*p.parent) +
                                                   " which is not an earlier exceptional curve");
    }
    const std::vector<std::string> loci = p.loci();
    for (const auto& id : loci) {
      const auto e = parse_exceptional_id(id);
      const bool known = e ? (*e >= 1 && *e < i) : model.curve_degrees_.count(id) > 0;
      if (!known) throw Error(ErrorKind::InvalidReference, here + " lies on unknown or later curve '" + id + "'");
    }
    // Incidence budget: two loci through the point must still meet.
    for (std::size_t a = 0; a < loci.size(); ++a) {
      for (std::size_t b = a + 1; b < loci.size(); ++b) {
        const Rational meet = intersect(model.classes_.at(loci[a]), model.classes_.at(loci[b]));
        if (meet <= 0) {
          throw Error(ErrorKind::InconsistentConfiguration,
                      here + ": proper transforms of " + loci[a] + " and " + loci[b] + " no longer meet (intersection " +
                          to_string(meet) + ")");
        }
      }
    }
    const DivisorClass ei = DivisorClass::exceptional(n, i);
    for (const auto& id : loci) model.classes_.at(id) -= ei;
    const std::string eid = exceptional_id(i);
    model.classes_.emplace(eid, ei);
    model.ids_.push_back(eid);
  }
  return model;
}

Rational self_intersection(const SurfaceModel& model, const std::string& id) {
  const DivisorClass& c = model.class_of(id);
  return intersect(c, c);
}

SurfaceModel contract(const SurfaceModel& model, std::span<const std::string> sequence) {
  SurfaceModel out = model;
  for (const auto& id : sequence) {
    const DivisorClass c = out.class_of(id);
    const Rational square = intersect(c, c);
    if (square != -1) {
      throw Error(ErrorKind::NotContractible,
                  "curve '" + id + "' has self-intersection " + to_string(square) + ", not -1");
    }
    out.classes_.erase(id);
    out.ids_.erase(std::find(out.ids_.begin(), out.ids_.end(), id));
    for (auto& [other, cls] : out.classes_) cls = pull_push(cls, c);
    out.canonical_ = pull_push(out.canonical_, c);
    out.contracted_.push_back(id);
    out.contracted_classes_.push_back(c);
  }
  return out;
}

bool anticanonical_check(const SurfaceModel& model) {
  const DivisorClass anti = -model.canonical();
  if (intersect(anti, anti) <= 0) return false;
  for (const auto& [id, cls] : model.classes()) {
    if (intersect(anti, cls) < 0) return false;
  }
  if (model.picard_rank() - 1 <= kMaxEnumerationBlowups) {
    const auto minus1 =
        enumerate_orthogonal(model.canonical(), model.contracted_classes(), NegativeKind::Minus1);
    for (const auto& c : minus1) {
      if (intersect(anti, c) < 0) return false;
    }
  }
  return true;
}

}  // namespace dpcyl
