#pragma once

#include <map>
#include <set>
#include <string>

#include "dpcyl/lattice.hpp"

namespace dpcyl {

// A divisor sum a_i D_i over distinct prime divisors, a_i > 0.
using CoeffMap = std::map<std::string, Rational>;

struct ConvexityResult {
  Rational mu;
  CoeffMap d_mu;
  std::set<std::string> dropped;
};

// Given effective D and T with T != D, [T] = [D] and Supp(T) in Supp(D), returns
// the largest mu with D_mu = (1 + mu) D - mu T effective, D_mu itself, and the
// components of T missing from Supp(D_mu).
//
// InvalidArgument when a precondition fails (class mismatch, support, T = D,
// non-positive coefficient, missing class); Contradiction when no coefficient of
// T exceeds the matching one of D, which cannot happen for Q-linearly equivalent
// distinct divisors on a surface with ample -K.
ConvexityResult convexity_mu(const CoeffMap& d, const CoeffMap& t, const std::map<std::string, DivisorClass>& classes);

// A pair with a D4 point whose exceptional curves have discrepancy-type
// coefficients a1..a4 (a3 on the curve meeting the other three) fails to be log
// canonical there iff a3 > 1.
bool d4_not_lc(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4);

}  // namespace dpcyl
