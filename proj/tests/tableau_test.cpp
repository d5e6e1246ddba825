#include <gtest/gtest.h>

#include <algorithm>

#include "houe/error.hpp"
#include "houe/parser.hpp"
#include "houe/tableau.hpp"
#include "test_util.hpp"

namespace houe {
namespace {

using testing::make_sig;
using testing::nf;

Signature pq_sig() {
  return make_sig("a : e; b : e; c : e; s : e; j : e; p : e -> t; q : e -> e -> t; "
                  "w : e -> t; wrh : e -> t; like : e -> e -> t",
                  "Y : e");
}

std::vector<std::string> lines_starting(const std::vector<std::string>& trace,
                                        const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& l : trace) {
    if (l.rfind(prefix, 0) == 0) out.push_back(l);
  }
  return out;
}

std::string dump(const std::vector<std::string>& trace) {
  std::string out;
  for (const auto& l : trace) out += l + "\n";
  return out;
}

Branch branch_of(const Signature& sig, const std::vector<std::string>& fs) {
  Branch b;
  for (const auto& f : fs) {
    b.formulas.push_back(nf(sig, f));
    b.expanded.push_back(false);
  }
  return b;
}

TEST(InitRefutation, RootHoldsAxiomsAndNegatedTheorem) {
  Signature sig = pq_sig();
  Tableau t = init_refutation(nf(sig, "p(a) | p(b) => (exists x:e. p(x))"), {});
  ASSERT_EQ(t.root().formulas.size(), 1u);
  Branch b = t.expand_alpha(t.root(), t.root().formulas[0]);
  ASSERT_EQ(b.formulas.size(), 3u);
  EXPECT_EQ(pretty_print(b.formulas[1]), "p(a) | p(b)");
  EXPECT_EQ(pretty_print(b.formulas[2]), "~(exists x:e. p(x))");

  Tableau t2 = init_refutation(nf(sig, "p(a)"), {nf(sig, "p(a)")});
  EXPECT_TRUE(t2.try_close(t2.root()));

  EXPECT_THROW(init_refutation(nf(sig, "a"), {}), Error);
}

TEST(ExpandAlpha, NestedConjunction) {
  Signature sig = pq_sig();
  Tableau t;
  Branch b = branch_of(sig, {"(p(a) & p(b)) & p(c)"});
  b = t.expand_alpha(b, b.formulas[0]);
  b = t.expand_alpha(b, b.formulas[1]);
  std::vector<std::string> got;
  for (std::size_t i = 2; i < b.formulas.size(); ++i) got.push_back(pretty_print(b.formulas[i]));
  EXPECT_EQ(got, (std::vector<std::string>{"p(c)", "p(a)", "p(b)"}));
}

TEST(ExpandBeta, DisjunctsGoLeftToRight) {
  Signature sig = pq_sig();
  Tableau t;
  Branch b = branch_of(sig, {"p(a) | p(b)"});
  auto [l, r] = t.expand_beta(b, b.formulas[0]);
  EXPECT_EQ(pretty_print(l.formulas.back()), "p(a)");
  EXPECT_EQ(pretty_print(r.formulas.back()), "p(b)");
  EXPECT_EQ(l.id, "0.1");
  EXPECT_EQ(r.id, "0.2");

  Branch n = branch_of(sig, {"~(p(a) & p(b))"});
  auto [nl, nr] = t.expand_beta(n, n.formulas[0]);
  EXPECT_EQ(pretty_print(nl.formulas.back()), "~p(a)");
  EXPECT_EQ(pretty_print(nr.formulas.back()), "~p(b)");
}

TEST(ExpandGamma, FreshVariablesAndMultiplicity) {
  Signature sig = pq_sig();
  SearchBounds bounds;
  bounds.gamma_multiplicity = 2;
  Tableau t(bounds);
  Branch b = branch_of(sig, {"forall x:e. ~p(x)"});
  b = t.expand_gamma(b, b.formulas[0]);
  b = t.expand_gamma(b, b.formulas[0]);
  EXPECT_EQ(pretty_print(b.formulas[1]), "~p(X1)");
  EXPECT_EQ(pretty_print(b.formulas[2]), "~p(X2)");
  try {
    t.expand_gamma(b, b.formulas[0]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MultiplicityExceeded);
  }
  // ~exists is a universal too.
  Branch n = branch_of(sig, {"~(exists x:e. p(x))"});
  EXPECT_EQ(pretty_print(t.expand_gamma(n, n.formulas[0]).formulas.back()), "~p(X3)");
}

TEST(ExpandDelta, SkolemTermsCarryFreeMetavariables) {
  Signature sig = pq_sig();
  Tableau t;
  Branch b = branch_of(sig, {"exists x:e. p(x)", "exists x:e. q(x, Y)"});
  b = t.expand_delta(b, b.formulas[0]);
  EXPECT_EQ(pretty_print(b.formulas.back()), "p($sk1)");
  b = t.expand_delta(b, b.formulas[1]);
  EXPECT_EQ(pretty_print(b.formulas.back()), "q($sk2(Y), Y)");
  // Same formula, same witness.
  Branch again = t.expand_delta(b, b.formulas[0]);
  EXPECT_EQ(pretty_print(again.formulas.back()), "p($sk1)");

  Branch sarah = branch_of(sig, {"exists x:e. w(x) & wrh(x) & like(j, x)"});
  Tableau t2;
  sarah = t2.expand_delta(sarah, sarah.formulas[0]);
  EXPECT_EQ(pretty_print(sarah.formulas.back()), "w($sk1) & wrh($sk1) & like(j, $sk1)");
}

TEST(TryClose, ComplementaryPairs) {
  Signature sig = make_sig("a : e; b : e; c : e; p : e -> t", "X1 : e; Z : e");
  Tableau t;
  auto s1 = t.try_close(branch_of(sig, {"p(a)", "~p(X1)"}));
  ASSERT_TRUE(s1);
  EXPECT_EQ(pretty_print(*s1), "{X1 := a}");
  auto s2 = t.try_close(branch_of(sig, {"p(b)", "~p(Z)"}));
  ASSERT_TRUE(s2);
  EXPECT_EQ(pretty_print(*s2), "{Z := b}");
  auto s3 = t.try_close(branch_of(sig, {"~(c = c)"}));
  ASSERT_TRUE(s3);
  EXPECT_TRUE(s3->empty());
  EXPECT_FALSE(t.try_close(branch_of(sig, {"p(a)", "~p(b)"})));
}

TEST(TryClose, EquationBetweenComplementaryAtoms) {
  Signature sig = pq_sig();
  Tableau t;
  auto s = t.try_close(branch_of(sig, {"~like(j, s)", "like(j, c)", "c = s"}));
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->empty());
}

TEST(RewriteWithEquation, AddsRewrittenLiterals) {
  Signature sig = pq_sig();
  Tableau t;
  Branch b = branch_of(sig, {"c = s", "~like(j, s)", "like(j, c)"});
  Branch r = t.rewrite_with_equation(b, b.formulas[0]);
  EXPECT_TRUE(r.find(nf(sig, "like(j, s)")));
  EXPECT_TRUE(t.try_close(r));

  Branch self = branch_of(sig, {"a = a", "p(a)"});
  EXPECT_EQ(t.rewrite_with_equation(self, self.formulas[0]).formulas.size(), 2u);

  Branch wc = branch_of(sig, {"c = s", "w(c)"});
  Branch out = t.rewrite_with_equation(wc, wc.formulas[0]);
  ASSERT_EQ(out.formulas.size(), 3u);
  EXPECT_EQ(pretty_print(out.formulas[2]), "w(s)");
}

TEST(Prove, DisjunctionTheorem) {
  Signature sig = pq_sig();
  ProofResult r = prove(nf(sig, "p(a) | p(b) => (exists x:e. p(x))"), {});
  ASSERT_TRUE(r.proved()) << dump(r.trace);
  EXPECT_EQ(lines_starting(r.trace, "RULE beta").size(), 1u) << dump(r.trace);
  EXPECT_EQ(lines_starting(r.trace, "RULE gamma").size(), 2u) << dump(r.trace);
  EXPECT_EQ(lines_starting(r.trace, "CLOSE"),
            (std::vector<std::string>{"CLOSE 0.1 [X1=a]", "CLOSE 0.2 [X2=b]"}))
      << dump(r.trace);
}

TEST(Prove, TrivialAndUnprovable) {
  Signature sig = pq_sig();
  ProofResult r = prove(nf(sig, "p(a) => p(a)"), {});
  ASSERT_TRUE(r.proved());
  EXPECT_EQ(lines_starting(r.trace, "CLOSE").size(), 1u);

  ProofResult no = prove(nf(sig, "p(a) => p(b)"), {});
  EXPECT_FALSE(no.proved());
  EXPECT_EQ(no.reason, ProofResult::Reason::OpenBranch);
}

TEST(Prove, ConsistentSubstitutionAcrossBranches) {
  Signature sig = pq_sig();
  // One shared variable cannot be both a and b.
  Tableau t;
  bool ok = t.refute({{"0.1", {nf(sig, "~p(Y)")}}, {"0.2", {nf(sig, "~p(Y)")}}},
                     {}, {}, [](const Substitution&) { return true; });
  EXPECT_FALSE(ok);
  Tableau t2;
  Substitution got;
  ok = t2.refute({{"0.1", {nf(sig, "p(a)"), nf(sig, "~p(Y)")}},
                  {"0.2", {nf(sig, "p(b)"), nf(sig, "p(a)"), nf(sig, "~p(Y)")}}},
                 {}, {}, [&](const Substitution& s) {
                   got = s;
                   return true;
                 });
  ASSERT_TRUE(ok);
  EXPECT_EQ(pretty_print(got), "{Y := a}");
}

TEST(Prove, UniquenessAndEquality) {
  Signature sig = pq_sig();
  std::vector<Term> hyps = {nf(sig, "forall z:e. w(z) & wrh(z) <=> z = s"), nf(sig, "w(s)"),
                            nf(sig, "wrh(s)")};
  Term source = nf(sig,
      "exists x:e. w(x) & wrh(x) & (forall z:e. w(z) & wrh(z) <=> z = x) & like(j, x)");
  Term target = nf(sig, "like(j, s)");
  ProofResult r = prove(logic::iff(target, source), hyps);
  ASSERT_TRUE(r.proved()) << dump(r.trace);
  EXPECT_FALSE(prove(logic::iff(target, source), {}).proved());
}

TEST(Prove, SkolemsNeverEscapeIntoOuterMetavariables) {
  Signature sig = pq_sig();
  Tableau t;
  // exists x. p(x) gives p($sk1); Y may not become $sk1.
  bool ok = t.refute({{"0", {nf(sig, "exists x:e. p(x)"), nf(sig, "~p(Y)")}}}, {}, {},
                     [](const Substitution&) { return true; });
  EXPECT_FALSE(ok);
}

TEST(Prove, BudgetExhaustion) {
  Signature sig = pq_sig();
  SearchBounds b;
  b.node_budget = 2;
  ProofResult r = prove(nf(sig, "(forall x:e. p(x)) => p(a) & p(b) & p(c)"), {}, b);
  EXPECT_FALSE(r.proved());
  EXPECT_EQ(r.reason, ProofResult::Reason::Exhausted);
}

TEST(Prove, Determinism) {
  Signature sig = pq_sig();
  Term th = nf(sig, "p(a) | p(b) => (exists x:e. p(x))");
  EXPECT_EQ(prove(th, {}).trace, prove(th, {}).trace);
}

}  // namespace
}  // namespace houe
