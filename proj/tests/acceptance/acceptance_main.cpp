// One PASS/FAIL line per acceptance criterion. Exact arithmetic throughout;
// the only numeric tolerances are the wall-clock budgets below.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "dpcyl/classify.hpp"
#include "dpcyl/constructions.hpp"
#include "dpcyl/error.hpp"
#include "dpcyl/negcurves.hpp"
#include "support.hpp"

using namespace dpcyl;
using namespace dpcyl::testing;

namespace {

constexpr double kTableBudgetSeconds = 5.0;
constexpr double kEnumerationBudgetSeconds = 10.0;
constexpr int kPushforwardPairs = 1000;
constexpr int kConvexityPairs = 200;
constexpr int kForests = 100;

// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out << (i ? "; " : "") << failures_[i];
    if (failures_.size() > 5) out << "; ... " << failures_.size() - 5 << " more";
    return out.str();
  }

 private:
  std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

DivisorClass weighted_sum(const SurfaceModel& m, const QDivisor& d) { return d.class_in(m.classes(), m.n()); }

std::string table_verification(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto entries = all_fixtures();
  c.expect(entries.size() == 13, "expected 13 fixtures, found " + std::to_string(entries.size()));
  int degree567 = 0;
  for (const auto& e : entries) {
    degree567 += (e.degree >= 5 && e.degree <= 7) ? 1 : 0;
    const VerificationReport r = verify_entry(e);
    c.expect(r.checks.size() == std::size(kCheckNames), e.name + ": wrong number of checks");
    for (const auto& check : r.checks) c.expect(check.pass, e.name + ": " + check.name + " failed: " + check.detail);
  }
  c.expect(degree567 == 12, "expected 12 degree-5/6/7 rows");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < kTableBudgetSeconds, "runtime " + fmt_seconds(elapsed));

  const ConstructionEntry a4 = fixture("d5-A4");
  const DivisorClass sum_a4 = weighted_sum(build_model(a4.curves, a4.points), a4.tiger);
  c.expect(sum_a4 == DivisorClass(3, {1, 1, 1, 1}), "degree-5 A4 sum is " + sum_a4.to_string());
  c.expect(sum_a4 == -canonical_class(4), "degree-5 A4 sum differs from -K");

  const DivisorClass h = DivisorClass::hyperplane(2);
  const DivisorClass e1 = DivisorClass::exceptional(2, 1);
  const DivisorClass e2 = DivisorClass::exceptional(2, 2);
  const DivisorClass by_hand = Rational(2) * (e1 - e2) + Rational(4) * e2 + Rational(3) * (h - e1 - e2);
  c.expect(by_hand == DivisorClass(3, {1, 1}), "degree-7 A1 hand sum is " + by_hand.to_string());
  const ConstructionEntry a1 = fixture("d7-A1");
  const DivisorClass sum_a1 = weighted_sum(build_model(a1.curves, a1.points), a1.tiger);
  c.expect(sum_a1 == DivisorClass(3, {1, 1}), "degree-7 A1 entry sum is " + sum_a1.to_string());
  return std::to_string(entries.size()) + " entries, 10 checks each, " + fmt_seconds(elapsed);
}

std::string worked_example(Checker& c) {
  const ConstructionEntry e = fixture("d2-A2");
  const SurfaceModel m = build_model(e.curves, e.points);
  c.expect(self_intersection(m, "L2") == -5, "L2^2");
  c.expect(self_intersection(m, "E1") == -3, "E1^2");
  c.expect(self_intersection(m, "E2") == -2, "E2^2");
  c.expect(self_intersection(m, "E3") == -2, "E3^2");
  int minus1 = 0;
  for (const auto& id : m.ids()) minus1 += self_intersection(m, id) == -1 ? 1 : 0;
  c.expect(minus1 == 8, "expected eight (-1)-curves, found " + std::to_string(minus1));

  c.expect(e.contraction == std::vector<std::string>{"L1", "E2", "E3"}, "contraction sequence");
  SurfaceModel step = m;
  for (const auto& id : e.contraction) {
    c.expect(self_intersection(step, id) == -1, id + " is not a (-1)-curve when contracted");
    step = contract(step, std::vector<std::string>{id});
  }
  c.expect(step.degree() == 2, "contracted degree");
  c.expect(step.classes() == contract(m, e.contraction).classes(), "stepwise and batch contraction differ");

  const NegCurveGraph g = neg_curve_graph(step);
  const AdeType ade = classify_ade(g.minus2_adjacency());
  c.expect(ade.to_string() == "A2", "contracted type " + ade.to_string());
  const auto roots = g.minus2_indices();
  if (roots.size() == 2) {
    c.expect(g.weights[static_cast<std::size_t>(roots[0])][static_cast<std::size_t>(roots[1])] == 1,
             "the (-2)-curves do not meet once");
  } else {
    c.expect(false, "expected two (-2)-curves");
  }
  return "squares, stepwise contraction [L1, E2, E3], type " + ade.to_string();
}

std::string epsilon_interval(Checker& c) {
  const ConstructionEntry e = fixture("d2-A2");
  const SeedFamily family = {{"L1", {2, -1}}, {"L2", {1, 1}}};
  const OpenInterval i = sweep_epsilon(e, family);
  c.expect(i == OpenInterval{false, Rational(0), ratio(1, 3)}, "interval " + i.to_string());
  return "(2-eps)L1 + (1+eps)L2 -> " + i.to_string();
}

std::string enumeration_oracle(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::size_t> minus1_counts = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  const std::vector<std::size_t> root_counts = {0, 0, 2, 8, 20, 40, 72, 126, 240};
  for (int n = 0; n <= 8; ++n) {
    const auto minus1 = enumerate_minus1(n);
    const auto roots = enumerate_roots(n);
    const auto idx = static_cast<std::size_t>(n);
    c.expect(minus1.size() == minus1_counts[idx], "n=" + std::to_string(n) + " (-1)-count " + std::to_string(minus1.size()));
    c.expect(roots.size() == root_counts[idx], "n=" + std::to_string(n) + " root count " + std::to_string(roots.size()));
    c.expect(as_int_vectors(minus1) == oracle_minus1(n), "n=" + std::to_string(n) + " (-1)-classes differ from oracle");
    c.expect(as_int_vectors(roots) == oracle_roots(n), "n=" + std::to_string(n) + " roots differ from oracle");
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < kEnumerationBudgetSeconds, "runtime " + fmt_seconds(elapsed));
  return "n = 0..8 against box |a| <= " + std::to_string(OracleSearch::kA) + ", |m| <= " +
         std::to_string(OracleSearch::kM) + ", " + fmt_seconds(elapsed);
}

// All multisets over `menu` (components non-increasing by menu index) with rank <= max_rank.
void multisets(const std::vector<AdeComponent>& menu, std::size_t from, int max_rank, std::vector<AdeComponent>& current,
               const std::function<void(const std::vector<AdeComponent>&)>& visit) {
  visit(current);
  for (std::size_t i = from; i < menu.size(); ++i) {
    if (menu[i].rank > max_rank) continue;
    current.push_back(menu[i]);
    multisets(menu, i, max_rank - menu[i].rank, current, visit);
    current.pop_back();
  }
}

std::string theorem_table(Checker& c) {
  int no = 0;
  int has = 0;
  const auto decide_all = [&](int degree, const std::vector<AdeComponent>& comps, Answer expected) {
    const AdeType ade(comps);
    std::vector<PrimeMark> marks = {PrimeMark::None};
    if (is_ambiguous(degree, ade)) marks = {PrimeMark::None, PrimeMark::Prime, PrimeMark::DoublePrime};
    for (PrimeMark mark : marks) {
      const SingularityType t{ade, mark, degree};
      const Verdict v = decide_cylinder(degree, t);
      c.expect(v.answer == expected, "d=" + std::to_string(degree) + " " + t.to_string() + ": " + v.to_string());
      (expected == Answer::NoCylinder ? no : has) += 1;
    }
  };
  std::vector<AdeComponent> current;
  const std::vector<AdeComponent> d1_menu = {{AdeFamily::D, 4}, {AdeFamily::A, 3}, {AdeFamily::A, 2}, {AdeFamily::A, 1}};
  multisets(d1_menu, 0, 8, current, [&](const auto& comps) { decide_all(1, comps, Answer::NoCylinder); });
  for (int k = 0; k <= 7; ++k) decide_all(2, std::vector<AdeComponent>(static_cast<std::size_t>(k), {AdeFamily::A, 1}), Answer::NoCylinder);
  decide_all(3, {}, Answer::NoCylinder);

  const auto entries = all_fixtures();
  for (const auto& e : entries) {
    const Verdict v = decide_cylinder(e.degree, e.expected_type, entries);
    c.expect(v.answer == Answer::HasCylinder, e.name + ": " + v.to_string());
    c.expect(v.basis == e.name, e.name + ": basis " + v.basis);
    ++has;
  }
  c.expect(verdict_consistency(entries), "verdict consistency");

  const std::vector<AdeComponent> full_menu = {{AdeFamily::E, 8}, {AdeFamily::E, 7}, {AdeFamily::E, 6}, {AdeFamily::D, 5},
                                               {AdeFamily::D, 4}, {AdeFamily::A, 5}, {AdeFamily::A, 4}, {AdeFamily::A, 3},
                                               {AdeFamily::A, 2}, {AdeFamily::A, 1}};
  for (int d = 4; d <= 9; ++d) {
    multisets(full_menu, 0, 9 - d, current, [&](const auto& comps) { decide_all(d, comps, Answer::HasCylinder); });
  }
  return std::to_string(no) + " NoCylinder and " + std::to_string(has) + " HasCylinder inputs";
}

int incident_minus1(const NegCurveGraph& g, int vertex) {
  int count = 0;
  for (int v : g.minus1_indices()) count += g.weights[static_cast<std::size_t>(v)][static_cast<std::size_t>(vertex)] > 0 ? 1 : 0;
  return count;
}

std::string prime_refinement(Checker& c) {
  std::ostringstream detail;
  for (const auto& [stem, expected, type] :
       std::vector<std::tuple<std::string, int, std::string>>{{"d6-A1p", 2, "A1'"}, {"d6-A1pp", 3, "A1''"}}) {
    const ConstructionEntry e = fixture(stem);
    const SurfaceModel m = contract(build_model(e.curves, e.points), e.contraction);
    const NegCurveGraph g = neg_curve_graph(m);
    const auto roots = g.minus2_indices();
    if (roots.size() != 1) {
      c.expect(false, stem + ": expected one (-2)-curve");
      continue;
    }
    const int count = incident_minus1(g, roots[0]);
    c.expect(count == expected, stem + ": " + std::to_string(count) + " incident (-1)-curves");
    const SingularityType t = refine(classify_ade(g.minus2_adjacency()), g, e.degree);
    c.expect(t.to_string() == type, stem + ": refined to " + t.to_string());
    detail << t.to_string() << " " << count << ", ";
  }

  // Points p1 > p2 and p3 > p4 infinitely near, p5 general.
  const std::vector<PointDecl> pts = {PointDecl{1, std::nullopt, {}}, PointDecl{2, 1, {}}, PointDecl{3, std::nullopt, {}},
                                      PointDecl{4, 3, {}}, PointDecl{5, std::nullopt, {}}};
  const SurfaceModel m = build_model(std::vector<CurveDecl>{}, pts);
  const NegCurveGraph g = neg_curve_graph(m);
  const SingularityType t = refine(classify_ade(g.minus2_adjacency()), g, 4);
  c.expect(m.degree() == 4, "constructed model degree");
  c.expect(t.to_string() == "2A1'", "constructed model refined to " + t.to_string());
  detail << "constructed degree-4 model " << t.to_string();
  return detail.str();
}

std::string property_suites(Checker& c) {
  Rng rng(20261016);
  for (int trial = 0; trial < kPushforwardPairs; ++trial) {
    const int n = uniform(rng, 1, 8);
    const auto minus1 = enumerate_minus1(n);
    const DivisorClass& e = minus1[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(minus1.size()) - 1))];
    const DivisorClass d = random_class(rng, n, 8, 4);
    const DivisorClass d2 = random_class(rng, n, 8, 4);
    const Rational lhs = intersect(pull_push(d, e), pull_push(d2, e));
    const Rational rhs = intersect(d, d2) + intersect(d, e) * intersect(d2, e);
    c.expect(lhs == rhs, "pushforward identity failed for " + d.to_string() + ", " + d2.to_string());
  }

  int convexity = 0;
  while (convexity < kConvexityPairs) {
    const ConvexityCase cc = random_convexity_case(rng);
    if (cc.t == cc.d) continue;
    ++convexity;
    const int n = cc.classes.begin()->second.n();
    const ConvexityResult r = convexity_mu(cc.d, cc.t, cc.classes);
    c.expect(r.mu > 0, "mu not positive");
    c.expect(coeff_class(r.d_mu, cc.classes, n) == coeff_class(cc.d, cc.classes, n), "class not preserved");
    c.expect(!r.dropped.empty(), "no component dropped");
    for (const auto& id : r.dropped) c.expect(r.d_mu.count(id) == 0 && cc.t.count(id) == 1, "bad dropped component " + id);
    for (const auto& [id, v] : r.d_mu) c.expect(v > 0, "non-positive coefficient on " + id);
    const Rational past = r.mu + ratio(1, 1000);
    bool negative = false;
    for (const auto& [id, dv] : cc.d) {
      const Rational tv = cc.t.count(id) ? cc.t.at(id) : Rational(0);
      negative = negative || (1 + past) * dv - past * tv < 0;
    }
    c.expect(negative, "not tight at mu + 1/1000");
  }

  for (int trial = 0; trial < kForests; ++trial) {
    const AdeForestCase f = random_ade_forest(rng);
    c.expect(classify_ade(f.graph) == f.expected, "forest " + f.expected.to_string());
    c.expect(classify_ade(f.relabeled) == f.expected, "relabeled forest " + f.expected.to_string());
  }

  int rank_cl = 0;
  for (const auto& e : all_fixtures()) {
    const CheckResult r = rank_cl_check(e, contract(build_model(e.curves, e.points), e.contraction));
    c.expect(r.pass, e.name + ": " + r.detail);
    ++rank_cl;
  }
  return std::to_string(kPushforwardPairs) + " pushforward pairs, " + std::to_string(convexity) + " convexity pairs, " +
         std::to_string(kForests) + " forests, " + std::to_string(rank_cl) + " rank checks";
}

ErrorKind error_kind(const std::function<void()>& f, std::string& message) {
  try {
    f();
  } catch (const Error& e) {
    message = e.what();
    return e.kind();
  }
  throw std::runtime_error("no error raised");
}

std::string negative_tests(Checker& c) {
  ConstructionEntry tampered = fixture("d5-A4");
  tampered.tiger.set("E4", 4);
  const VerificationReport r = verify_entry(tampered);
  const CheckResult& identity = r.check("class_identity");
  c.expect(!identity.pass, "tampered entry passes class_identity");
  c.expect(identity.detail.find("residual -K - D = E4") != std::string::npos, "residual not named: " + identity.detail);

  const ConstructionEntry e = fixture("d2-A2");
  std::string message;
  const ErrorKind contract_kind =
      error_kind([&] { contract(build_model(e.curves, e.points), std::vector<std::string>{"E2"}); }, message);
  c.expect(contract_kind == ErrorKind::NotContractible, "contracting E2 gave " + message);

  WeightMatrix cycle = empty_graph(4);
  for (int i = 0; i < 4; ++i) add_edge(cycle, i, (i + 1) % 4);
  const ErrorKind cycle_kind = error_kind([&] { classify_ade(cycle); }, message);
  c.expect(cycle_kind == ErrorKind::NotDuVal, "4-cycle gave " + message);
  return "tamper residual E4, not-contractible, not-du-val";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string(Checker&)>>> criteria = {
      {"table verification", table_verification},
      {"worked degree-2 example", worked_example},
      {"epsilon interval", epsilon_interval},
      {"enumeration oracle equivalence", enumeration_oracle},
      {"theorem table consistency", theorem_table},
      {"prime refinement", prime_refinement},
      {"property suites", property_suites},
      {"negative tests", negative_tests},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    std::string detail;
    try {
      detail = criteria[i].second(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const bool ok = c.ok();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": "
              << (ok ? detail : c.summary()) << "\n";
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
