#pragma once

// Picard lattice of an n-fold blow-up of the projective plane.
//
// Basis: H (pullback of a line) and E_1..E_n (total transforms of the
// exceptional curves), with H^2 = 1, E_i^2 = -1 and all mixed products 0.
//
// Sign convention (read this before touching any coefficient):
//   a DivisorClass stores (a; m_1, ..., m_n) and represents a*H - sum m_i*E_i.
// The proper transform of a plane curve of degree d passing through p_i with
// multiplicity m_i is therefore (d; m_1, ..., m_n) with every m_i >= 0, while the
// exceptional class E_i itself has m_i = -1, and the canonical class is
// K = (-3; -1, ..., -1).

#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dpcyl/rational.hpp"

namespace dpcyl {

// Arithmetic accepts up to 10 blow-ups; enumeration of negative classes is
// restricted to the del Pezzo range n <= 8.
inline constexpr int kMaxBlowups = 10;
inline constexpr int kMaxEnumerationBlowups = 8;

class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(Rational a, std::vector<Rational> m);

  static DivisorClass zero(int n);
  static DivisorClass hyperplane(int n);
  // Total transform E_i, 1-based.
  static DivisorClass exceptional(int n, int i);

  int n() const { return static_cast<int>(m_.size()); }
  const Rational& a() const { return a_; }
  // 1-based, matching E_i.
  const Rational& m(int i) const { return m_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const Rational> ms() const { return m_; }

  bool is_integral() const;
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& scalar);

  friend DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) { return lhs += rhs; }
  friend DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs) { return lhs -= rhs; }
  friend DivisorClass operator*(const Rational& s, DivisorClass c) { return c *= s; }
  friend DivisorClass operator*(DivisorClass c, const Rational& s) { return c *= s; }
  DivisorClass operator-() const;

  friend bool operator==(const DivisorClass& lhs, const DivisorClass& rhs);
  // Deterministic total order: by a, then lexicographically by m.
  friend std::strong_ordering operator<=>(const DivisorClass& lhs, const DivisorClass& rhs);

  // Compact form, e.g. "3H-E1-E2", "E1-E2", "0".
  std::string to_string() const;
  // Coordinate listing "aH -m1E1 -m2E2 ...", every basis element present.
  std::string to_listing() const;

 private:
  Rational a_;
  std::vector<Rational> m_;
};

// Throws InvalidArgument on mismatched n.
Rational intersect(const DivisorClass& lhs, const DivisorClass& rhs);

// (-3; -1, ..., -1), self-intersection 9 - n.
DivisorClass canonical_class(int n);

// Pullback of the pushforward along the contraction of a (-1)-class c:
// D -> D + (D.c) c. The result is orthogonal to c.
DivisorClass pull_push(const DivisorClass& d, const DivisorClass& c);

// All integral classes with C^2 = -1 and C.K = -1, for 0 <= n <= 8.
//
// Completeness: write s = sum m_i and q = sum m_i^2. The two equations read
// s = 3a - 1 and q = a^2 + 1. Cauchy-Schwarz gives s^2 <= n q <= 8 q, i.e.
// (a - 7)(a + 1) <= 0, so -1 <= a <= 7, and a = 7 would force every m_i = 5/2.
// Applying the same inequality to the n - 1 coordinates other than m_i gives
// (3a - 1 - m_i)^2 <= 7 (a^2 + 1 - m_i^2); this quadratic in a has a real root
// only when (m_i - 3)(m_i + 1) <= 0. For roots (C^2 = -2, C.K = 0) the same
// steps give |a| <= 4 and |m_i| <= 2. Every solution therefore lies in the box
// |a| <= 6, |m_i| <= 3, which is what the search scans.
std::vector<DivisorClass> enumerate_minus1(int n);

// All integral classes with C^2 = -2 and C.K = 0, for 0 <= n <= 8. Closed
// under negation; cardinalities 0, 0, 2, 8, 20, 40, 72, 126, 240 for n = 0..8.
std::vector<DivisorClass> enumerate_roots(int n);

enum class NegativeKind { Minus1, Root };

// Enumerates integral classes x orthogonal to every class in `contracted` with
// x^2 = -1, x.K = -1 (Minus1) or x^2 = -2, x.K = 0 (Root).
//
// `contracted` must be pairwise orthogonal (-1)-classes, `canonical` must be
// orthogonal to each of them and satisfy K^2 > 0. The orthogonal complement is
// then the Picard lattice of the contracted surface, and the search runs a
// Fincke-Pohst enumeration of the positive definite form
//   F(x) = 2 (x.K)^2 / K^2 - x.x + 2 sum_j (x.c_j)^2.
// Throws InvalidState when K^2 <= 0.
std::vector<DivisorClass> enumerate_orthogonal(const DivisorClass& canonical,
                                               std::span<const DivisorClass> contracted,
                                               NegativeKind kind);

// A Q-divisor on named curves. Zero coefficients are never stored.
class QDivisor {
 public:
  QDivisor() = default;
  explicit QDivisor(const std::map<std::string, Rational>& terms);

  void set(const std::string& id, const Rational& coefficient);
  Rational coefficient(const std::string& id) const;
  const std::map<std::string, Rational>& terms() const { return terms_; }
  std::set<std::string> support() const;
  bool empty() const { return terms_.empty(); }
  bool is_effective() const;

  // Sum of coefficient * class over the support. Throws InvalidReference if a
  // support curve has no class.
  DivisorClass class_in(const std::map<std::string, DivisorClass>& classes, int n) const;

  friend bool operator==(const QDivisor&, const QDivisor&) = default;

  std::string to_string() const;

 private:
  std::map<std::string, Rational> terms_;
};

}  // namespace dpcyl
