#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "houe/bounds.hpp"
#include "houe/lambda.hpp"

namespace houe {

/// Prefix of metavariables introduced by the search.
inline constexpr const char* kHouMetaPrefix = "_H";

struct UnifProblem {
  std::vector<Equation> equations;
  /// Bindings already in force; equations are read under it.
  Substitution subst;
};

/// A pre-unifier: `subst` restricted to the metavariables of the problem
/// (and of the incoming substitution), plus the postponed flex-flex pairs.
struct UnifSolution {
  Substitution subst;
  std::vector<Equation> flex_flex;
};

enum class UnifStatus { Solved, Failed, Exhausted };

struct UnifResult {
  std::vector<UnifSolution> solutions;
  bool exhausted = false;

  UnifStatus status() const {
    if (!solutions.empty()) return UnifStatus::Solved;
    return exhausted ? UnifStatus::Exhausted : UnifStatus::Failed;
  }
};

/// Applies the substitution, normalises, drops trivial pairs and decomposes
/// rigid-rigid pairs. Remaining pairs are flex-rigid (oriented flex on the
/// left) or flex-flex. nullopt on a head clash.
std::optional<UnifProblem> simplify(const UnifProblem& p);

/// Huet bindings for a metavariable of type `mv_type` against `rigid_head`
/// (a constant or a bound variable): the imitation for constants, then one
/// projection per argument whose result type matches. `fresh` names the
/// argument metavariables.
std::vector<Term> general_bindings(const Type& mv_type, const Term& rigid_head,
                                   const std::function<std::string()>& fresh);

/// Called once per new solution; return false to stop the search.
using UnifSink = std::function<bool(const UnifSolution&)>;

/// Iterative-deepening pre-unification. Solutions are deduplicated across
/// depths and capped at bounds.max_solutions. Returns Exhausted when the
/// node budget ran out, Solved if anything was emitted, Failed otherwise.
UnifStatus unify_each(const UnifProblem& p, const SearchBounds& bounds,
                      NodeBudget& budget, const UnifSink& sink);

UnifResult unify(const UnifProblem& p, const SearchBounds& bounds,
                 NodeBudget* budget = nullptr);

/// Renames `_H` metavariables by order of first occurrence, so that
/// solutions found along different search paths compare equal.
std::string solution_key(const UnifSolution& sol);

}  // namespace houe
