#include <gtest/gtest.h>

#include <algorithm>

#include "vnumlab/input.hpp"
#include "vnumlab/lab.hpp"

using namespace vnl;

namespace {

const char* kTorsion =
    "ring X Y Z\n"
    "ideal I = (X*Y, Z)\n"
    "module M += [0] / (X^3, Y, X*Z)\n";

const char* kSubquotient =
    "ring X Y Z\n"
    "ideal I = (X, Y^2, Z^3)\n"
    "module M += [0] / (X^3, X*Y^4)\n"
    "submodule N += (X^3, X*Y)\n";

LabOptions opts(unsigned n_max, unsigned window) {
  LabOptions o;
  o.n_max = n_max;
  o.window = window;
  return o;
}

std::vector<ExtDegree> degrees(std::initializer_list<Degree> values) {
  return {values.begin(), values.end()};
}

const Verdict* find(const std::vector<Verdict>& vs, const std::string& id,
                    const std::string& prime = "") {
  for (const auto& v : vs)
    if (v.id == id && (prime.empty() || v.prime == prime)) return &v;
  return nullptr;
}

}  // namespace

TEST(Fit, LinearTail) {
  std::vector<ExtDegree> v;
  for (Degree n = 3; n <= 10; ++n) v.push_back(3 * n - 2);
  auto f = fit_tail(v, 3, 4);
  EXPECT_EQ(f.kind, FitKind::Linear);
  EXPECT_EQ(f.a, 3);
  EXPECT_EQ(f.b, -2);
  EXPECT_EQ(f.onset, 3u);
  EXPECT_EQ(render_fit("v_q", f), "v_q = 3n - 2 (n ≥ 3, window 4)");
}

TEST(Fit, ConstantTail) {
  auto f = fit_tail(degrees({4, 4, 4, 4, 4}), 1, 5);
  EXPECT_EQ(f.kind, FitKind::Constant);
  EXPECT_EQ(f.b, 4);
  EXPECT_EQ(render_fit("v_p", f), "v_p = 4 (n ≥ 1, window 5)");

  f = fit_tail(degrees({2, 1, 2, 2, 2, 2, 2, 2, 2, 2}), 1, 5);
  EXPECT_EQ(f.kind, FitKind::Constant);
  EXPECT_EQ(f.b, 2);
  EXPECT_EQ(f.onset, 3u);
}

TEST(Fit, Undetermined) {
  EXPECT_EQ(fit_tail(degrees({1, 5, 2, 8, 3}), 1, 3).kind, FitKind::Undetermined);
  EXPECT_EQ(fit_tail(degrees({5, 4, 3, 2, 1}), 1, 3).kind, FitKind::Undetermined);
  EXPECT_EQ(fit_tail(degrees({1, 2}), 1, 3).kind, FitKind::Undetermined);
  std::vector<ExtDegree> inf(6, ExtDegree::infinity());
  EXPECT_EQ(fit_tail(inf, 1, 3).kind, FitKind::Undetermined);
  EXPECT_THROW(fit_tail(degrees({1, 2, 3}), 1, 2), Error);
  EXPECT_EQ(render_fit("v", fit_tail(degrees({1, 5, 2}), 1, 3)), "v undetermined (window 3)");
}

TEST(Fit, NegativeIntercept) {
  auto f = fit_tail(degrees({1, 3, 5, 7}), 1, 3);
  EXPECT_EQ(render_fit("v", f), "v = 2n - 1 (n ≥ 1, window 3)");
  f = fit_tail(degrees({2, 3, 4, 5}), 1, 3);
  EXPECT_EQ(render_fit("v", f), "v = n + 1 (n ≥ 1, window 3)");
}

TEST(Stabilization, Detect) {
  auto r = make_ring({"X", "Y"});
  const PrimeSet a{MonomialPrime(r, {0})}, b{MonomialPrime(r, {0, 1})};
  auto s = detect_stabilization({a, a, a, a}, 1, 3);
  EXPECT_TRUE(s.determined);
  EXPECT_EQ(s.onset, 1u);
  s = detect_stabilization({a, b, a, b, a, b}, 1, 3);
  EXPECT_FALSE(s.determined);
  s = detect_stabilization({b, a, a, a, a}, 1, 4);
  EXPECT_TRUE(s.determined);
  EXPECT_EQ(s.onset, 2u);
  EXPECT_EQ(s.set, a);
}

TEST(Evaluate, TorsionFamily) {
  auto eval = evaluate_family(parse_input(kTorsion), opts(10, 5));
  ASSERT_EQ(eval.records.size(), 11u);
  EXPECT_FALSE(eval.truncated);
  EXPECT_EQ(eval.statics.colon.v.global, ExtDegree(2));
  for (unsigned n = 1; n <= 10; ++n) {
    const auto& rec = eval.records[n];
    EXPECT_EQ(render(rec.quotient.v.ass()), "{(X,Y,Z)}");
    EXPECT_EQ(render(rec.layer->v.ass()), "{(X,Y,Z)}");
    EXPECT_EQ(rec.quotient.v.global, ExtDegree(n == 2 ? 1 : 2));
    EXPECT_EQ(rec.layer->v.global, ExtDegree(n == 1 ? 2 : Degree(n - 1)));
  }
  auto sq = detect_stabilization(ass_series(eval, Series::Quotient), 1, 4);
  EXPECT_TRUE(sq.determined);
  EXPECT_EQ(sq.onset, 1u);
  auto fits = fit_all(eval, 5);
  auto global = std::find_if(fits.begin(), fits.end(), [](const FitRecord& f) {
    return f.module == "quotient" && !f.prime;
  });
  ASSERT_NE(global, fits.end());
  EXPECT_EQ(global->fit.kind, FitKind::Constant);
  EXPECT_EQ(global->fit.b, 2);
  EXPECT_EQ(global->fit.onset, 3u);
}

TEST(Evaluate, SubquotientFamily) {
  auto eval = evaluate_family(parse_input(kSubquotient), opts(10, 4));
  auto sq = detect_stabilization(ass_series(eval, Series::Quotient), 1, 4);
  EXPECT_TRUE(sq.determined);
  EXPECT_LE(sq.onset, 3u);
  EXPECT_EQ(render(sq.set), "{(X),(X,Y),(X,Y,Z)}");
  const auto r = eval.spec.ring();
  auto vq = fit_tail(local_series(eval, Series::Quotient, MonomialPrime(r, {0, 1})), 1, 4);
  EXPECT_EQ(vq.kind, FitKind::Linear);
  EXPECT_EQ(vq.a, 3);
  EXPECT_EQ(vq.b, -1);
  auto vm = fit_tail(local_series(eval, Series::Quotient, MonomialPrime::maximal(r)), 1, 4);
  EXPECT_EQ(vm.a, 3);
  EXPECT_EQ(vm.b, -2);
}

TEST(Evaluate, TrivialFamily) {
  auto eval = evaluate_family(parse_input("ring X\nideal I = (X)\nmodule M += [0]\n"), opts(1, 3));
  EXPECT_EQ(render(eval.records[1].quotient.v.ass()), "{(X)}");
  EXPECT_EQ(eval.records[1].quotient.v.global, ExtDegree(0));
}

TEST(Evaluate, TruncatesAtGeneratorLimit) {
  auto spec = parse_input("ring X Y Z W\nideal I = (X*Y, Y*Z, Z*W, X*W, X^2)\nmodule M += [0]\n");
  LabOptions o = opts(30, 4);
  o.generator_limit = 40;
  auto eval = evaluate_family(spec, o);
  EXPECT_TRUE(eval.truncated.has_value());
  EXPECT_LT(eval.records.size(), 31u);
  EXPECT_GE(eval.records.size(), 2u);
}

TEST(Evaluate, ThreadCountDoesNotMatter) {
  auto spec = parse_input(kSubquotient);
  LabOptions a = opts(8, 4), b = opts(8, 4);
  a.threads = 1;
  b.threads = 4;
  auto ea = evaluate_family(spec, a), eb = evaluate_family(spec, b);
  ASSERT_EQ(ea.records.size(), eb.records.size());
  for (std::size_t n = 0; n < ea.records.size(); ++n) {
    EXPECT_EQ(ea.records[n].quotient.v.global, eb.records[n].quotient.v.global);
    EXPECT_EQ(ea.records[n].relations, eb.records[n].relations);
  }
}

TEST(Verify, TorsionFamily) {
  auto eval = evaluate_family(parse_input(kTorsion), opts(10, 5));
  auto vs = verify(eval, opts(10, 5));
  for (const auto& v : vs) EXPECT_NE(v.status, VerdictStatus::Fail) << v.id << ": " << v.detail;
  ASSERT_TRUE(find(vs, "ass-torsion-split"));
  EXPECT_EQ(find(vs, "ass-torsion-split")->status, VerdictStatus::Pass);
  ASSERT_TRUE(find(vs, "global-colon"));
  EXPECT_EQ(find(vs, "global-colon")->status, VerdictStatus::Pass);
  ASSERT_TRUE(find(vs, "constant-branch", "(X,Y,Z)"));
  EXPECT_EQ(find(vs, "constant-branch", "(X,Y,Z)")->status, VerdictStatus::Pass);
}

TEST(Verify, SubquotientFamily) {
  auto eval = evaluate_family(parse_input(kSubquotient), opts(10, 5));
  auto vs = verify(eval, opts(10, 5));
  for (const auto& v : vs) EXPECT_NE(v.status, VerdictStatus::Fail) << v.id << ": " << v.detail;
  EXPECT_EQ(find(vs, "global-layer")->status, VerdictStatus::NotApplicable);
  const auto* slope = find(vs, "outside-slope-bound", "(X,Y)");
  ASSERT_TRUE(slope);
  EXPECT_EQ(slope->status, VerdictStatus::Pass);
  EXPECT_NE(slope->detail.find("3n"), std::string::npos);
}

TEST(Random, Deterministic) {
  RandomParams p;
  p.vars = 4;
  p.components = 2;
  EXPECT_EQ(echo(random_instance(42, p)), echo(random_instance(42, p)));
  EXPECT_NE(echo(random_instance(42, p)), echo(random_instance(43, p)));
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
}

TEST(Random, RejectsBadParams) {
  RandomParams p;
  p.gens = 0;
  EXPECT_THROW(random_instance(1, p), Error);
  p = RandomParams{};
  p.vars = 6;
  EXPECT_THROW(random_instance(1, p), Error);
  p = RandomParams{};
  p.components = 0;
  EXPECT_THROW(random_instance(1, p), Error);
}

TEST(Explore, NoFlagsOnSmallRun) {
  RandomParams p;
  auto report = explore_q45(11, 40, p, opts(12, 4));
  EXPECT_EQ(report.trials.size(), 40u);
  EXPECT_EQ(report.flagged(), 0u);
}

TEST(Parallel, RunsEveryIndexAndRethrows) {
  std::vector<int> hit(100, 0);
  parallel_for(hit.size(), 4, [&](std::size_t i) { hit[i] = 1; });
  EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), 100);
  EXPECT_THROW(parallel_for(10, 3,
                            [](std::size_t i) {
                              if (i == 7) fail(ErrorKind::Domain, "boom");
                            }),
               Error);
}
