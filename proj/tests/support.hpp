#pragma once

// Shared helpers for the unit and acceptance tests: fixture access, seeded
// random generators and an independent enumeration oracle.

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dpcyl/blowup.hpp"
#include "dpcyl/dynkin.hpp"
#include "dpcyl/entry_io.hpp"
#include "dpcyl/error.hpp"
#include "dpcyl/logpair.hpp"

namespace dpcyl::testing {

inline std::filesystem::path fixtures_dir() { return DPCYL_FIXTURES_DIR; }

inline ConstructionEntry fixture(const std::string& file_stem) {
  return load_entry(fixtures_dir() / (file_stem + ".json"));
}

inline std::vector<ConstructionEntry> all_fixtures() { return load_fixture_dir(fixtures_dir()); }

inline const std::vector<std::string>& fixture_stems() {
  static const std::vector<std::string> stems = {
      "d2-A2",    "d5-2A1", "d5-A1",   "d5-A2+A1", "d5-A2",    "d5-A3", "d5-A4",
      "d6-2A1",   "d6-A1p", "d6-A1pp", "d6-A2+A1", "d6-A2",    "d7-A1",
  };
  return stems;
}

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, int max_num, int max_den) {
  return ratio(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
}

inline DivisorClass random_class(Rng& rng, int n, int bound, int max_den = 1) {
  std::vector<Rational> m;
  for (int i = 0; i < n; ++i) m.push_back(random_rational(rng, bound, max_den));
  DivisorClass c(random_rational(rng, bound, max_den), std::move(m));
  return c;
}

struct RandomConfig {
  std::vector<CurveDecl> curves;
  std::vector<PointDecl> points;
};

// Random blow-up configuration over up to three lines and a conic; may violate
// the incidence budget (callers filter with build_model).
inline RandomConfig random_config(Rng& rng, int n) {
  RandomConfig cfg;
  const int lines = uniform(rng, 0, 3);
  for (int i = 1; i <= lines; ++i) cfg.curves.push_back({"L" + std::to_string(i), CurveKind::Line});
  if (uniform(rng, 0, 3) == 0) cfg.curves.push_back({"Q", CurveKind::Conic});
  for (int i = 1; i <= n; ++i) {
    PointDecl p;
    p.ordinal = i;
    if (i > 1 && uniform(rng, 0, 2) == 0) p.parent = uniform(rng, 1, i - 1);
    for (const auto& c : cfg.curves) {
      if (uniform(rng, 0, 2) == 0) p.on.push_back(c.id);
    }
    if (i > 2 && uniform(rng, 0, 4) == 0) {
      const int j = uniform(rng, 1, i - 1);
      if (!p.parent || *p.parent != j) p.on.push_back(exceptional_id(j));
    }
    cfg.points.push_back(std::move(p));
  }
  return cfg;
}

inline WeightMatrix empty_graph(int v) {
  return WeightMatrix(static_cast<std::size_t>(v), std::vector<int>(static_cast<std::size_t>(v), 0));
}

inline void add_edge(WeightMatrix& g, int a, int b, int w = 1) {
  g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = w;
  g[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = w;
}

// Appends the Dynkin diagram of `c` to `g` on vertices base .. base + rank - 1.
inline void add_component(WeightMatrix& g, int base, const AdeComponent& c) {
  if (c.family == AdeFamily::A) {
    for (int i = 0; i + 1 < c.rank; ++i) add_edge(g, base + i, base + i + 1);
  } else if (c.family == AdeFamily::D) {
    // Path 0..rank-2 with an extra leaf on vertex rank-3.
    for (int i = 0; i + 2 < c.rank; ++i) add_edge(g, base + i, base + i + 1);
    add_edge(g, base + c.rank - 3, base + c.rank - 1);
  } else {
    // Path of rank-1 vertices with a leaf on the third vertex.
    for (int i = 0; i + 2 < c.rank; ++i) add_edge(g, base + i, base + i + 1);
    add_edge(g, base + 2, base + c.rank - 1);
  }
}

struct AdeForestCase {
  AdeType expected;
  WeightMatrix graph;
  WeightMatrix relabeled;
};

// Up to four random Dynkin components of total rank <= 8, laid out in order,
// plus the same forest under a random vertex permutation.
inline AdeForestCase random_ade_forest(Rng& rng) {
  static const std::vector<AdeComponent> menu = {{AdeFamily::A, 1}, {AdeFamily::A, 2}, {AdeFamily::A, 3},
                                                 {AdeFamily::A, 5}, {AdeFamily::D, 4}, {AdeFamily::D, 5},
                                                 {AdeFamily::E, 6}, {AdeFamily::E, 7}};
  std::vector<AdeComponent> comps;
  int rank = 0;
  for (int k = 0; k < 4; ++k) {
    const AdeComponent c = menu[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(menu.size()) - 1))];
    if (rank + c.rank <= kMaxAdeRank) {
      comps.push_back(c);
      rank += c.rank;
    }
  }
  AdeForestCase out{AdeType(comps), empty_graph(rank), empty_graph(rank)};
  int base = 0;
  for (const auto& c : comps) {
    add_component(out.graph, base, c);
    base += c.rank;
  }
  std::vector<std::size_t> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = 0; j < perm.size(); ++j) out.relabeled[perm[i]][perm[j]] = out.graph[i][j];
  }
  return out;
}

// Independent search for integral (a; m) with a^2 - |m|^2 = square and
// 3a - sum(m) = -k_dot, i.e. x.K = k_dot with K = (-3; -1, ..., -1).
// Scans |a| <= 12, |m_i| <= 6; the only pruning is that the unused squares
// budget stays non-negative and the remaining sum can still be reached
// (|s| <= sqrt(k * q) for k coordinates with square sum q).
class OracleSearch {
 public:
  static constexpr int kA = 12;
  static constexpr int kM = 6;

  OracleSearch(int n, int square, int k_dot) : n_(n), square_(square), k_dot_(k_dot) {}

  std::vector<std::vector<int>> run() {
    for (int a = -kA; a <= kA; ++a) {
      const int q = a * a - square_;  // required sum of m_i^2
      const int s = 3 * a + k_dot_;   // required sum of m_i
      if (q < 0) continue;
      current_.assign(1, a);
      recurse(n_, q, s);
    }
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  void recurse(int k, int q, int s) {
    if (k == 0) {
      if (q == 0 && s == 0) found_.push_back(current_);
      return;
    }
    if (static_cast<long>(s) * s > static_cast<long>(k) * q) return;
    for (int m = -kM; m <= kM; ++m) {
      if (m * m > q) continue;
      current_.push_back(m);
      recurse(k - 1, q - m * m, s - m);
      current_.pop_back();
    }
  }

  int n_;
  int square_;
  int k_dot_;
  std::vector<int> current_;
  std::vector<std::vector<int>> found_;
};

inline std::vector<std::vector<int>> oracle_minus1(int n) { return OracleSearch(n, -1, -1).run(); }
inline std::vector<std::vector<int>> oracle_roots(int n) { return OracleSearch(n, -2, 0).run(); }

inline std::vector<std::vector<int>> as_int_vectors(const std::vector<DivisorClass>& classes) {
  std::vector<std::vector<int>> out;
  for (const auto& c : classes) {
    std::vector<int> v{static_cast<int>(c.a().get_num().get_si())};
    for (const auto& m : c.ms()) v.push_back(static_cast<int>(m.get_num().get_si()));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ConvexityCase {
  CoeffMap d;
  CoeffMap t;
  std::map<std::string, DivisorClass> classes;
};

// D with positive coefficients on k components whose classes satisfy one
// integral relation sum w_i C_i = 0 (weights of both signs), and T = D + s*w
// for a non-zero s keeping T >= 0. Then [T] = [D] and Supp(T) lies in Supp(D).
inline ConvexityCase random_convexity_case(Rng& rng) {
  const int n = uniform(rng, 1, 6);
  const int k = uniform(rng, 2, 6);
  std::vector<int> w(static_cast<std::size_t>(k));
  do {
    for (auto& x : w) {
      x = uniform(rng, -3, 3);
      if (x == 0) x = 1;
    }
  } while (std::all_of(w.begin(), w.end(), [](int x) { return x > 0; }) ||
           std::all_of(w.begin(), w.end(), [](int x) { return x < 0; }));

  ConvexityCase out;
  DivisorClass partial = DivisorClass::zero(n);
  for (int i = 0; i + 1 < k; ++i) {
    const DivisorClass c = random_class(rng, n, 4);
    out.classes["C" + std::to_string(i)] = c;
    partial += Rational(w[static_cast<std::size_t>(i)]) * c;
  }
  out.classes["C" + std::to_string(k - 1)] = Rational(Rational(-1) / w.back()) * partial;

  for (int i = 0; i < k; ++i) out.d["C" + std::to_string(i)] = ratio(uniform(rng, 1, 12), uniform(rng, 1, 6));

  // Largest |s| in each direction keeping every coefficient of T >= 0.
  std::optional<Rational> up;
  std::optional<Rational> down;
  for (int i = 0; i < k; ++i) {
    const Rational di = out.d["C" + std::to_string(i)];
    const int wi = w[static_cast<std::size_t>(i)];
    const Rational limit = di / Rational(std::abs(wi));
    auto& bound = wi < 0 ? up : down;
    if (!bound || limit < *bound) bound = limit;
  }
  const bool positive = uniform(rng, 0, 1) == 1;
  const Rational cap = positive ? *up : *down;
  // Either hit the bound exactly or stop at a random fraction of it.
  Rational s = uniform(rng, 0, 2) == 0 ? cap : cap * ratio(uniform(rng, 1, 9), 10);
  if (!positive) s = -s;
  for (int i = 0; i < k; ++i) {
    const std::string id = "C" + std::to_string(i);
    const Rational ti = out.d[id] + s * w[static_cast<std::size_t>(i)];
    if (ti != 0) out.t[id] = ti;
  }
  return out;
}

inline DivisorClass coeff_class(const CoeffMap& m, const std::map<std::string, DivisorClass>& classes, int n) {
  DivisorClass out = DivisorClass::zero(n);
  for (const auto& [id, c] : m) out += c * classes.at(id);
  return out;
}

}  // namespace dpcyl::testing
