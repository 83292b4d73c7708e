#include "dpcyl/logpair.hpp"

#include <optional>

#include "dpcyl/error.hpp"

namespace dpcyl {

namespace {

DivisorClass class_of(const CoeffMap& divisor, const std::map<std::string, DivisorClass>& classes) {
  if (classes.empty()) throw Error(ErrorKind::InvalidArgument, "no classes supplied");
  QDivisor q;
  for (const auto& [id, c] : divisor) q.set(id, c);
  try {
    return q.class_in(classes, classes.begin()->second.n());
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidArgument, e.what());
  }
}

void require_positive(const CoeffMap& divisor, const char* name) {
  for (const auto& [id, c] : divisor) {
    if (c <= 0) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string(name) + " has non-positive coefficient " + to_string(c) + " on " + id);
    }
  }
}

}  // namespace

ConvexityResult convexity_mu(const CoeffMap& d, const CoeffMap& t, const std::map<std::string, DivisorClass>& classes) {
  require_positive(d, "D");
  require_positive(t, "T");
  if (t == d) throw Error(ErrorKind::InvalidArgument, "T equals D");
  for (const auto& [id, c] : t) {
    if (!d.count(id)) throw Error(ErrorKind::InvalidArgument, "component " + id + " of T is not in the support of D");
  }
  if (!(class_of(d, classes) == class_of(t, classes))) {
    throw Error(ErrorKind::InvalidArgument, "T and D have different classes");
  }

  std::optional<Rational> mu;
  for (const auto& [id, dc] : d) {
    const auto it = t.find(id);
    const Rational tc = it == t.end() ? Rational(0) : it->second;
    if (tc > dc) {
      const Rational candidate = dc / (tc - dc);
      if (!mu || candidate < *mu) mu = candidate;
    }
  }
  if (!mu) {
    throw Error(ErrorKind::Contradiction, "no component of T exceeds D although T != D and [T] = [D]");
  }

  ConvexityResult out{*mu, {}, {}};
  for (const auto& [id, dc] : d) {
    const auto it = t.find(id);
    const Rational tc = it == t.end() ? Rational(0) : it->second;
    const Rational c = (1 + *mu) * dc - *mu * tc;
    if (c != 0) {
      out.d_mu.emplace(id, c);
    } else if (it != t.end()) {
      out.dropped.insert(id);
    }
  }
  return out;
}

bool d4_not_lc(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4) {
  for (const Rational* a : {&a1, &a2, &a3, &a4}) {
    if (*a < 0) throw Error(ErrorKind::InvalidArgument, "negative coefficient " + to_string(*a));
  }
  return a3 > 1;
}

}  // namespace dpcyl
