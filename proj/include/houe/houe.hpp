#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "houe/bounds.hpp"
#include "houe/lambda.hpp"

namespace houe {

struct HoueProblem {
  std::vector<Equation> equations;
  std::vector<Term> hypotheses;
  SearchBounds bounds;
  /// Vocabulary for grounding leftover metavariables.
  std::vector<Term> constants;
  /// Metavariables reported and grounded in every solution. Empty means
  /// all metavariables of the equations, by first occurrence.
  std::vector<std::string> metas;
  /// Optional admissibility test on candidate unifiers (e.g. the primary
  /// occurrence restriction); rejected candidates are never proved.
  std::function<bool(const Substitution&)> filter;
};

struct Justification {
  enum class Kind { Syntactic, Equivalence };
  Kind kind = Kind::Syntactic;
  std::vector<std::string> trace;
};

struct HoueSolution {
  Substitution subst;
  /// One entry per problem equation.
  std::vector<Justification> justification;
};

struct HoueResult {
  std::vector<HoueSolution> solutions;
  bool exhausted = false;
};

/// The two branch seeds {A, ~B} and {B, ~A} for a formula equation A = B.
/// Throws Error(NotProp) unless both sides are formulas.
std::pair<std::vector<Term>, std::vector<Term>> split_equation(const Equation& eq);

/// Closed eta-long terms of type `ty` over `constants` with application
/// nesting at most `depth`, in a fixed order.
std::vector<Term> ground_terms(const Type& ty, const std::vector<Term>& constants, int depth);

/// Syntactic unification of all equations first; if that yields nothing,
/// each formula equation in turn (smallest first) anchors a unifier under
/// which the remaining formula equations are proved equivalent.
HoueResult solve(const HoueProblem& p, NodeBudget* budget = nullptr);

}  // namespace houe
