#include <gtest/gtest.h>

#include "houe/error.hpp"
#include "houe/lambda.hpp"
#include "houe/parser.hpp"
#include "test_util.hpp"

namespace houe {
namespace {

using testing::dialog_sig;
using testing::nf;
using testing::TermGen;
using testing::tm;

const Type e = Type::ind();
const Type t = Type::prop();

TEST(TypeOf, FullAndPartialApplication) {
  Signature sig = dialog_sig();
  EXPECT_EQ(type_of(tm(sig, "like(j, m)"), sig), t);
  EXPECT_EQ(type_of(tm(sig, "lam x:e. like(x, m)"), sig), Type::arrow(e, t));
  EXPECT_EQ(type_of(tm(sig, "like(j)"), sig), Type::arrow(e, t));
}

TEST(TypeOf, ReportsMismatchAndUnknownNames) {
  Signature sig = dialog_sig();
  Term bad = Term::app(sig.make_constant("j"), sig.make_constant("m"));
  try {
    type_of(bad);
    FAIL() << "expected IllTyped";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::IllTyped);
  }
  Term stranger = Term::constant("nobody", e);
  try {
    type_of(stranger, sig);
    FAIL() << "expected UnknownName";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::UnknownName);
  }
}

TEST(Normalize, BetaReducesAnaphorApplication) {
  Signature sig = dialog_sig();
  EXPECT_TRUE(alpha_equal(nf(sig, "(lam x:e. like(x, m))(j)"), tm(sig, "like(j, m)")));
}

TEST(Normalize, EtaExpandsPartialApplication) {
  Signature sig = dialog_sig();
  EXPECT_TRUE(alpha_equal(nf(sig, "like(j)"), tm(sig, "lam x:e. like(j, x)")));
  // Quantifier arguments become abstractions.
  EXPECT_TRUE(alpha_equal(nf(sig, "forall(w)"), tm(sig, "forall x:e. w(x)")));
}

TEST(Normalize, CaptureAvoidingSubstitution) {
  Signature sig = dialog_sig();
  Substitution s;
  s.bind("F", tm(sig, "lam x:e. x"));
  Term t0 = tm(sig, "lam x:e. F(x)");
  EXPECT_TRUE(alpha_equal(s.apply(t0), tm(sig, "lam x:e. x")));

  // A binding mentioning a free name never gets captured by a binder that
  // happens to share its printed name.
  Substitution s2;
  s2.bind("X", tm(sig, "j"));
  EXPECT_TRUE(alpha_equal(s2.apply(tm(sig, "lam j2:e. like(j2, X)")),
                          tm(sig, "lam y:e. like(y, j)")));
}

TEST(Substitute, AnaphorValuesFromTheDialogs) {
  Signature sig = dialog_sig();
  Substitution s;
  s.bind("An", tm(sig, "lam y:e. love(y, wof(y))"));
  EXPECT_TRUE(alpha_equal(s.apply(tm(sig, "An(p)")), tm(sig, "love(p, wof(p))")));

  Substitution s2;
  s2.bind("X", tm(sig, "s"));
  EXPECT_TRUE(alpha_equal(s2.apply(tm(sig, "love(p, X)")), tm(sig, "love(p, s)")));

  Term u = tm(sig, "like(j, m)");
  EXPECT_TRUE(alpha_equal(Substitution{}.apply(u), u));
}

TEST(Substitution, StaysIdempotentUnderComposition) {
  Signature sig = dialog_sig();
  Substitution s;
  s.bind("An", tm(sig, "lam y:e. love(y, X)"));
  s.bind("X", tm(sig, "wof(j)"));
  EXPECT_TRUE(alpha_equal(*s.find("An"), nf(sig, "lam y:e. love(y, wof(j))")));
  for (const auto& [name, value] : s.bindings()) {
    for (const auto& [other, unused] : s.bindings()) {
      EXPECT_FALSE(contains_meta(value, other)) << name;
    }
  }
}

TEST(AlphaEqual, BinderNamesAndColoursAreInvisible) {
  Signature sig = dialog_sig();
  EXPECT_TRUE(alpha_equal(tm(sig, "lam x:e. w(x)"), tm(sig, "lam y:e. w(y)")));
  EXPECT_FALSE(alpha_equal(tm(sig, "lam x:e. like(x, m)"), tm(sig, "lam x:e. like(j, m)")));
  Term plain = tm(sig, "like(j, m)");
  Term coloured = mark_primary(plain, {1});
  EXPECT_TRUE(has_primary(coloured));
  EXPECT_TRUE(alpha_equal(plain, coloured));
  EXPECT_FALSE(identical(plain, coloured));
}

TEST(FreeMetavars, CollectsExactlyTheMetavariables) {
  Signature sig = dialog_sig();
  EXPECT_EQ(free_metavars(tm(sig, "love(p, X)")), std::set<std::string>{"X"});
  EXPECT_TRUE(free_metavars(tm(sig, "like(j, m)")).empty());
  EXPECT_EQ(free_metavars(tm(sig, "exists x:e. P(x) & love(p, x)")),
            std::set<std::string>{"P"});
}

TEST(OccurrencesAt, DeweyPaths) {
  Signature sig = dialog_sig();
  Term t0 = tm(sig, "love(j, wof(j))");
  EXPECT_TRUE(alpha_equal(occurrences_at(t0, {1}), tm(sig, "j")));
  EXPECT_TRUE(alpha_equal(occurrences_at(t0, {}), t0));
  EXPECT_TRUE(alpha_equal(occurrences_at(t0, {2, 1}), tm(sig, "j")));
  try {
    occurrences_at(t0, {3});
    FAIL() << "expected InvalidPath";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::InvalidPath);
  }
}

TEST(MarkPrimary, OnlyConstantsCanBeMarked) {
  Signature sig = dialog_sig();
  Term t0 = tm(sig, "love(j, wof(j))");
  Term marked = mark_primary(t0, {1});
  EXPECT_TRUE(occurrences_at(marked, {1}).primary());
  EXPECT_FALSE(occurrences_at(marked, {2, 1}).primary());
  try {
    mark_primary(t0, {2});
    FAIL() << "expected BadMark";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::BadMark);
  }
}

// Property suites over random well-typed terms.

TEST(NormalizeProperty, IdempotentAndTypePreserving) {
  TermGen gen(1234);
  for (int i = 0; i < 500; ++i) {
    Term t0 = gen.any(4);
    Term n1 = normalize(t0);
    Term n2 = normalize(n1);
    ASSERT_TRUE(alpha_equal(n1, n2)) << pretty_print(t0);
    ASSERT_EQ(type_of(n1), type_of(t0)) << pretty_print(t0);
  }
}

TEST(NormalizeProperty, ColourTransparency) {
  TermGen gen(99);
  for (int i = 0; i < 300; ++i) {
    Term t0 = gen.closed(Type::prop(), 4);
    Term n = normalize(t0);
    // Colour every constant reachable by a path, then compare.
    Term coloured = n;
    Spine sp = spine(strip_lambdas(n));
    for (std::size_t k = 1; k <= sp.args.size(); ++k) {
      if (occurrences_at(coloured, {k}).is_const()) {
        coloured = mark_primary(coloured, {k});
      }
    }
    ASSERT_TRUE(alpha_equal(normalize(coloured), n));
  }
}

TEST(SubstituteProperty, PreservesTypes) {
  TermGen gen(7);
  TermGen ground(8, testing::make_sig("j : e; m : e; wof : e -> e; like : e -> e -> t; q : t"));
  for (int i = 0; i < 200; ++i) {
    Substitution s;
    s.bind("F", normalize(ground.closed(Type::arrow(Type::ind(), Type::ind()), 3)));
    s.bind("X", normalize(ground.closed(Type::ind(), 2)));
    Term t0 = gen.any(4);
    ASSERT_EQ(type_of(s.apply(t0)), type_of(t0));
  }
}

}  // namespace
}  // namespace houe
