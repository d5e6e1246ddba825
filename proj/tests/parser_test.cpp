#include <gtest/gtest.h>

#include <filesystem>

#include "houe/error.hpp"
#include "houe/parser.hpp"
#include "test_util.hpp"

namespace houe {
namespace {

using testing::dialog_sig;
using testing::TermGen;
using testing::tm;

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Io;
}

TEST(ParseType, RightAssociativeArrows) {
  Type ty = parse_type("e -> e -> t");
  EXPECT_EQ(ty, Type::arrow(Type::ind(), Type::arrow(Type::ind(), Type::prop())));
  EXPECT_EQ(parse_type("(e -> t) -> t").domain(), Type::arrow(Type::ind(), Type::prop()));
  EXPECT_EQ(parse_type("(e -> t) -> t").str(), "(e -> t) -> t");
}

TEST(ParseTerm, Abstraction) {
  Signature sig = dialog_sig();
  Term t0 = tm(sig, "lam x:e. like(x,m)");
  ASSERT_TRUE(t0.is_lam());
  EXPECT_EQ(t0.type(), Type::ind());
  EXPECT_TRUE(alpha_equal(t0.body(), Term::apply(sig.make_constant("like"),
                                                 {Term::bound(0), sig.make_constant("m")})));
}

TEST(ParseTerm, QuantifierSugar) {
  Signature sig = dialog_sig();
  Term t0 = tm(sig, "forall x:e. ~w(x)");
  EXPECT_TRUE(logic::is_app_of(t0, logic::kForall, 1));
  EXPECT_TRUE(t0.arg().is_lam());
  EXPECT_TRUE(logic::is_app_of(t0.arg().body(), logic::kNot, 1));
}

TEST(ParseTerm, ConnectivePrecedence) {
  Signature sig = dialog_sig();
  // ~ binds tighter than &, & tighter than |, | tighter than =>, => than <=>.
  Term t0 = tm(sig, "~q & q | q => q <=> q");
  EXPECT_TRUE(logic::is_app_of(t0, logic::kIff, 2));
  Spine iff = spine(t0);
  EXPECT_TRUE(logic::is_app_of(iff.args[0], logic::kImp, 2));
  Spine imp = spine(iff.args[0]);
  EXPECT_TRUE(logic::is_app_of(imp.args[0], logic::kOr, 2));
  Spine orr = spine(imp.args[0]);
  EXPECT_TRUE(logic::is_app_of(orr.args[0], logic::kAnd, 2));
  EXPECT_TRUE(logic::is_app_of(spine(orr.args[0]).args[0], logic::kNot, 1));
  // Quantifier bodies extend as far right as possible.
  Term q = tm(sig, "exists x:e. w(x) & wrh(x)");
  EXPECT_TRUE(logic::is_app_of(q, logic::kExists, 1));
}

TEST(ParseTerm, UniqueMacroExpandsAgainstRestrictor) {
  Signature sig = dialog_sig();
  ParseOptions opts;
  opts.unique_restrictor = tm(sig, "lam y:e. w(y) & wrh(y)");
  Term got = normalize(parse_term(
      "exists x:e. w(x) & wrh(x) & unique(x) & like(j,x)", sig, opts));
  Term want = normalize(tm(sig,
      "exists x:e. w(x) & wrh(x) & (forall z:e. (w(z) & wrh(z) <=> z = x)) & like(j,x)"));
  EXPECT_TRUE(alpha_equal(got, want)) << pretty_print(got);

  EXPECT_EQ(error_of([&] { parse_term("unique(j)", sig); }), ErrorCode::UnknownName);
}

TEST(ParseTerm, ErrorsCarryPositions) {
  Signature sig = dialog_sig();
  try {
    parse_term("like(j,\n  nobody)", sig);
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_EQ(err.code(), ErrorCode::UnknownName);
    EXPECT_EQ(err.line(), 2u);
    EXPECT_EQ(err.column(), 3u);
  }
  EXPECT_EQ(error_of([&] { parse_term("like(j, m", sig); }), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of([&] { parse_term("like(j, q)", sig); }), ErrorCode::IllTyped);
  EXPECT_EQ(error_of([&] { parse_term("like(j, $sk1)", sig); }), ErrorCode::SyntaxError);
}

TEST(PrettyPrint, CanonicalForms) {
  Signature sig = dialog_sig();
  EXPECT_EQ(pretty_print(tm(sig, "lam x:e. like(x,m)")), "lam x:e. like(x, m)");
  EXPECT_EQ(pretty_print(normalize(tm(sig, "like(j)"))), "lam x:e. like(j, x)");
  EXPECT_EQ(pretty_print(Term::constant("$sk1", Type::ind())), "$sk1");
  EXPECT_EQ(pretty_print(tm(sig, "~(q & q) | (forall x:e. w(x)) & q")),
            "~(q & q) | (forall x:e. w(x)) & q");
  EXPECT_EQ(pretty_print(tm(sig, "lam x:e. lam x:e. like(x, x)")),
            "lam x:e. lam x1:e. like(x1, x1)");
}

TEST(PrettyPrint, RoundTripsRandomTerms) {
  Signature sig = dialog_sig();
  TermGen gen(2024);
  for (int i = 0; i < 500; ++i) {
    Term t0 = gen.any(4);
    std::string text = pretty_print(t0);
    Term back = parse_term(text, sig);
    ASSERT_TRUE(alpha_equal(back, t0)) << text;
    Term n = normalize(t0);
    ASSERT_TRUE(alpha_equal(parse_term(pretty_print(n), sig), n)) << pretty_print(n);
  }
}

TEST(ParseProblem, CorrectionFile) {
  ProblemFile pf = parse_problem(R"(
# Jon likes Mary. / No, PETER likes Mary.
kind correction
const j : e
const m : e
const p : e
const like : e -> e -> t
meta An : e -> t
eq An(j) = like(j, m)
eq An(p) = like(p, m)
parallel j ~ p
primary 1 rhs 1
primary 2 rhs 1
)");
  EXPECT_EQ(pf.kind, ProblemKind::Correction);
  ASSERT_EQ(pf.equations.size(), 2u);
  EXPECT_EQ(pretty_print(pf.equations[0].lhs), "An(j)");
  EXPECT_EQ(pretty_print(pf.equations[1].rhs), "like(p, m)");
  EXPECT_TRUE(occurrences_at(pf.equations[0].rhs, {1}).primary());
  ASSERT_EQ(pf.parallel.size(), 1u);
}

TEST(ParseProblem, UniqueDeclarationsApplyToLaterLines) {
  ProblemFile pf = parse_problem(R"(
kind houe
const j : e
const s : e
const w : e -> t
const wrh : e -> t
const like : e -> e -> t
meta An : e -> t
unique of lam y:e. w(y) & wrh(y)
axiom unique(s)
axiom w(s)
axiom wrh(s)
eq An(j) = exists x:e. w(x) & wrh(x) & unique(x) & like(j, x)
)");
  ASSERT_EQ(pf.axioms.size(), 3u);
  EXPECT_EQ(pretty_print(pf.axioms[0]), "forall z:e. w(z) & wrh(z) <=> z = s");
}

TEST(ParseProblem, Errors) {
  EXPECT_EQ(error_of([] { parse_problem("kind unify\nconst j : e\n"); }),
            ErrorCode::MissingEquations);
  EXPECT_EQ(error_of([] { parse_problem("const j : e\nconst j : e\n"); }),
            ErrorCode::DuplicateDeclaration);
  EXPECT_EQ(error_of([] { parse_problem("const and : e\n"); }),
            ErrorCode::DuplicateDeclaration);
  EXPECT_EQ(error_of([] {
              parse_problem("const j : e\nconst w : e -> t\nmeta X : e\neq w(X) = w(j)\nprimary 1 rhs 2\n");
            }),
            ErrorCode::BadMark);
  EXPECT_EQ(error_of([] {
              parse_problem("const j : e\nconst w : e -> t\neq w(j) = j\n");
            }),
            ErrorCode::IllTyped);
  EXPECT_EQ(error_of([] { parse_problem("const $sk1 : e\n"); }), ErrorCode::SyntaxError);
}

TEST(ParseProblem, EveryFixtureParses) {
  namespace fs = std::filesystem;
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(HOUE_FIXTURE_DIR)) {
    if (entry.path().extension() != ".houe") continue;
    ++count;
    ProblemFile pf;
    ASSERT_NO_THROW(pf = load_problem(entry.path())) << entry.path();
    for (const auto& eq : pf.equations) {
      EXPECT_EQ(type_of(eq.lhs, pf.signature), type_of(eq.rhs, pf.signature));
    }
  }
  EXPECT_GE(count, 20u);
}

}  // namespace
}  // namespace houe
