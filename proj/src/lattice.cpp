#include "dpcyl/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dpcyl/error.hpp"

namespace dpcyl {

namespace {

void check_n(int n, int max_n) {
  if (n < 0 || n > max_n) {
    throw Error(ErrorKind::InvalidArgument,
                "blow-up count " + std::to_string(n) + " outside [0, " + std::to_string(max_n) + "]");
  }
}

void check_same_n(const DivisorClass& lhs, const DivisorClass& rhs) {
  if (lhs.n() != rhs.n()) {
    throw Error(ErrorKind::InvalidArgument, "classes live in lattices of different rank (n=" +
                                                std::to_string(lhs.n()) + " vs n=" + std::to_string(rhs.n()) + ")");
  }
}

// Writes "c*X" with sign handling into out; `first` tracks leading sign.
void append_term(std::string& out, const Rational& c, const std::string& symbol, bool& first) {
  if (c == 0) return;
  const bool neg = c < 0;
  const Rational mag = abs(c);
  if (neg) {
    out += "-";
  } else if (!first) {
    out += "+";
  }
  if (mag != 1) out += dpcyl::to_string(mag);
  out += symbol;
  first = false;
}

// Box search over |a| <= 6, |m_i| <= 3 for integral classes with
// sum m_i = 3a + dot_k and sum m_i^2 = a^2 - self.
class BoxSearch {
 public:
  BoxSearch(int n, int self, int dot_k) : n_(n), self_(self), dot_k_(dot_k), m_(static_cast<std::size_t>(n)) {}

  std::vector<DivisorClass> run() {
    for (int a = -kA; a <= kA; ++a) {
      const int sum = 3 * a + dot_k_;
      const int sq = a * a - self_;
      if (sq < 0) continue;
      a_ = a;
      recurse(0, sum, sq);
    }
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  static constexpr int kA = 6;
  static constexpr int kM = 3;

  void recurse(int i, int sum, int sq) {
    const int left = n_ - i;
    if (left == 0) {
      if (sum == 0 && sq == 0) {
        std::vector<Rational> m(m_.begin(), m_.end());
        found_.emplace_back(Rational(a_), std::move(m));
      }
      return;
    }
    if (std::abs(sum) > kM * left) return;
    if (static_cast<long>(sum) * sum > static_cast<long>(left) * sq) return;
    for (int v = -kM; v <= kM; ++v) {
      if (v * v > sq) continue;
      m_[static_cast<std::size_t>(i)] = v;
      recurse(i + 1, sum - v, sq - v * v);
    }
  }

  int n_;
  int self_;
  int dot_k_;
  int a_ = 0;
  std::vector<int> m_;
  std::vector<DivisorClass> found_;
};

// Coordinates y = (a, m_1, ..., m_n); the intersection form is
// <y, z> = y_0 z_0 - sum_{i>0} y_i z_i. For a class u, x.u = dot(y, w(u)) with
// w(u) = (u_a, -u_m1, ..., -u_mn).
std::vector<double> pairing_vector(const DivisorClass& u) {
  std::vector<double> w(static_cast<std::size_t>(u.n() + 1));
  w[0] = u.a().get_d();
  for (int i = 1; i <= u.n(); ++i) w[static_cast<std::size_t>(i)] = -u.m(i).get_d();
  return w;
}

class FinckePohst {
 public:
  FinckePohst(std::vector<std::vector<double>> gram, double bound)
      : dim_(gram.size()), q_(std::move(gram)), bound_(bound), x_(dim_, 0) {
    // In-place Cholesky: F(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
    for (std::size_t i = 0; i < dim_; ++i) {
      if (q_[i][i] <= 0) {
        throw Error(ErrorKind::InvalidState, "enumeration form is not positive definite");
      }
      for (std::size_t j = i + 1; j < dim_; ++j) {
        q_[j][i] = q_[i][j];
        q_[i][j] /= q_[i][i];
      }
      for (std::size_t k = i + 1; k < dim_; ++k) {
        for (std::size_t l = k; l < dim_; ++l) q_[k][l] -= q_[k][i] * q_[i][l];
      }
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    if (dim_ == 0) return;
    descend(dim_ - 1, bound_, visit);
  }

 private:
  template <typename Visit>
  void descend(std::size_t i, double budget, Visit& visit) {
    double center = 0;
    for (std::size_t j = i + 1; j < dim_; ++j) center += q_[i][j] * static_cast<double>(x_[j]);
    const double radius = std::sqrt(std::max(0.0, budget / q_[i][i])) + 1e-9;
    const auto lo = static_cast<long>(std::ceil(-radius - center));
    const auto hi = static_cast<long>(std::floor(radius - center));
    for (long v = lo; v <= hi; ++v) {
      x_[i] = v;
      const double t = static_cast<double>(v) + center;
      const double rest = budget - q_[i][i] * t * t;
      if (rest < -1e-9) continue;
      if (i == 0) {
        visit(x_);
      } else {
        descend(i - 1, rest, visit);
      }
    }
    x_[i] = 0;
  }

  std::size_t dim_;
  std::vector<std::vector<double>> q_;
  double bound_;
  std::vector<long> x_;
};

}  // namespace

DivisorClass::DivisorClass(Rational a, std::vector<Rational> m) : a_(std::move(a)), m_(std::move(m)) {
  check_n(n(), kMaxBlowups);
}

DivisorClass DivisorClass::zero(int n) {
  check_n(n, kMaxBlowups);
  return DivisorClass(Rational(0), std::vector<Rational>(static_cast<std::size_t>(n)));
}

DivisorClass DivisorClass::hyperplane(int n) {
  DivisorClass h = zero(n);
  h.a_ = 1;
  return h;
}

DivisorClass DivisorClass::exceptional(int n, int i) {
  DivisorClass e = zero(n);
  if (i < 1 || i > n) {
    throw Error(ErrorKind::InvalidArgument, "exceptional index " + std::to_string(i) + " outside [1, " +
                                                std::to_string(n) + "]");
  }
  e.m_[static_cast<std::size_t>(i - 1)] = -1;
  return e;
}

bool DivisorClass::is_integral() const {
  if (!is_integer(a_)) return false;
  return std::all_of(m_.begin(), m_.end(), [](const Rational& v) { return is_integer(v); });
}

bool DivisorClass::is_zero() const {
  return a_ == 0 && std::all_of(m_.begin(), m_.end(), [](const Rational& v) { return v == 0; });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  check_same_n(*this, other);
  a_ += other.a_;
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += other.m_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  check_same_n(*this, other);
  a_ -= other.a_;
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] -= other.m_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& scalar) {
  a_ *= scalar;
  for (auto& v : m_) v *= scalar;
  return *this;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass r = *this;
  r *= Rational(-1);
  return r;
}

bool operator==(const DivisorClass& lhs, const DivisorClass& rhs) {
  return lhs.a_ == rhs.a_ && lhs.m_ == rhs.m_;
}

std::strong_ordering operator<=>(const DivisorClass& lhs, const DivisorClass& rhs) {
  if (lhs.n() != rhs.n()) return lhs.n() <=> rhs.n();
  if (lhs.a_ != rhs.a_) return lhs.a_ < rhs.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < lhs.m_.size(); ++i) {
    if (lhs.m_[i] != rhs.m_[i]) {
      return lhs.m_[i] < rhs.m_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::string DivisorClass::to_string() const {
  std::string out;
  bool first = true;
  append_term(out, a_, "H", first);
  for (int i = 1; i <= n(); ++i) append_term(out, -m(i), "E" + std::to_string(i), first);
  return first ? "0" : out;
}

std::string DivisorClass::to_listing() const {
  std::ostringstream os;
  os << dpcyl::to_string(a_) << "H";
  for (int i = 1; i <= n(); ++i) {
    const Rational c = -m(i);
    os << ' ' << (c < 0 ? "-" : "+") << dpcyl::to_string(Rational(abs(c))) << 'E' << i;
  }
  return os.str();
}

Rational intersect(const DivisorClass& lhs, const DivisorClass& rhs) {
  check_same_n(lhs, rhs);
  Rational r = lhs.a() * rhs.a();
  for (int i = 1; i <= lhs.n(); ++i) r -= lhs.m(i) * rhs.m(i);
  return r;
}

DivisorClass canonical_class(int n) {
  check_n(n, kMaxBlowups);
  return DivisorClass(Rational(-3), std::vector<Rational>(static_cast<std::size_t>(n), Rational(-1)));
}

DivisorClass pull_push(const DivisorClass& d, const DivisorClass& c) {
  return d + intersect(d, c) * c;
}

std::vector<DivisorClass> enumerate_minus1(int n) {
  check_n(n, kMaxEnumerationBlowups);
  return BoxSearch(n, -1, -1).run();
}

std::vector<DivisorClass> enumerate_roots(int n) {
  check_n(n, kMaxEnumerationBlowups);
  return BoxSearch(n, -2, 0).run();
}

std::vector<DivisorClass> enumerate_orthogonal(const DivisorClass& canonical,
                                               std::span<const DivisorClass> contracted,
                                               NegativeKind kind) {
  const int n = canonical.n();
  const Rational degree = intersect(canonical, canonical);
  if (degree <= 0) {
    throw Error(ErrorKind::InvalidState, "anticanonical self-intersection " + dpcyl::to_string(degree) +
                                             " is not positive; negative classes are not finite in number");
  }
  for (const auto& c : contracted) {
    if (intersect(c, canonical) != 0) {
      throw Error(ErrorKind::InvalidState, "canonical class is not orthogonal to contracted class " + c.to_string());
    }
  }

  const std::size_t dim = static_cast<std::size_t>(n + 1);
  const double d = degree.get_d();
  const std::vector<double> wk = pairing_vector(canonical);
  std::vector<std::vector<double>> gram(dim, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) gram[i][j] = 2.0 * wk[i] * wk[j] / d;
    gram[i][i] += i == 0 ? -1.0 : 1.0;
  }
  for (const auto& c : contracted) {
    const std::vector<double> wc = pairing_vector(c);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) gram[i][j] += 2.0 * wc[i] * wc[j];
    }
  }

  // On targets F equals 1 + 2/K^2 (Minus1) or 2 (Root).
  const double bound = (kind == NegativeKind::Minus1 ? 1.0 + 2.0 / d : 2.0) + 1e-7;
  const Rational self = kind == NegativeKind::Minus1 ? -1 : -2;
  const Rational dot_k = kind == NegativeKind::Minus1 ? -1 : 0;

  std::vector<DivisorClass> found;
  FinckePohst search(std::move(gram), bound);
  search.run([&](const std::vector<long>& y) {
    std::vector<Rational> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) m[static_cast<std::size_t>(i - 1)] = Rational(y[static_cast<std::size_t>(i)]);
    DivisorClass x(Rational(y[0]), std::move(m));
    if (intersect(x, x) != self || intersect(x, canonical) != dot_k) return;
    for (const auto& c : contracted) {
      if (intersect(x, c) != 0) return;
    }
    found.push_back(std::move(x));
  });
  std::sort(found.begin(), found.end());
  return found;
}

QDivisor::QDivisor(const std::map<std::string, Rational>& terms) {
  for (const auto& [id, c] : terms) set(id, c);
}

void QDivisor::set(const std::string& id, const Rational& coefficient) {
  if (coefficient == 0) {
    terms_.erase(id);
  } else {
    terms_[id] = coefficient;
  }
}

Rational QDivisor::coefficient(const std::string& id) const {
  const auto it = terms_.find(id);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> QDivisor::support() const {
  std::set<std::string> s;
  for (const auto& [id, c] : terms_) s.insert(id);
  return s;
}

bool QDivisor::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

DivisorClass QDivisor::class_in(const std::map<std::string, DivisorClass>& classes, int n) const {
  DivisorClass total = DivisorClass::zero(n);
  for (const auto& [id, c] : terms_) {
    const auto it = classes.find(id);
    if (it == classes.end()) throw Error(ErrorKind::InvalidReference, "no class for curve '" + id + "'");
    total += c * it->second;
  }
  return total;
}

std::string QDivisor::to_string() const {
  std::string out;
  bool first = true;
  for (const auto& [id, c] : terms_) append_term(out, c, id, first);
  return first ? "0" : out;
}

}  // namespace dpcyl
