#pragma once

#include <map>
#include <string>
#include <vector>

#include "houe/bounds.hpp"
#include "houe/houe.hpp"
#include "houe/lambda.hpp"
#include "houe/parser.hpp"

namespace houe {

/// A source utterance and its correction. SSem and TSem are formulas; the
/// parallel pairs line up the contrasted source and target elements.
struct CorrectionProblem {
  Term ssem;
  Term tsem;
  std::vector<ParallelPair> parallel;
  /// Primary occurrences, as paths into SSem and TSem.
  std::vector<PositionPath> source_marks;
  std::vector<PositionPath> target_marks;
  std::vector<Term> axioms;
  /// Pronoun and property metavariables, in reporting order.
  std::vector<std::string> pronouns;
  /// Vocabulary for grounding unresolved pronouns.
  std::vector<Term> constants;
  SearchBounds bounds;
  /// Name of the anaphor metavariable.
  std::string anaphor = "An";
};

enum class Classification { Strict, Sloppy, Neutral };

std::string_view to_string(Classification c);

struct Reading {
  Term anaphor;
  std::map<std::string, Term> pronouns;
  Classification classification = Classification::Neutral;
  std::vector<Justification> justification;
};

struct Verdict {
  enum class Kind { WellFormed, IllFormed, ResourceLimit };
  Kind kind = Kind::IllFormed;
  std::vector<Reading> readings;
};

std::string_view to_string(Verdict::Kind k);

/// An(SP..) = SSem and An(TP..) = TSem with primary occurrences coloured.
/// Throws Error(ArityMismatch) when there are no parallel pairs or a pair
/// has mismatched types.
HoueProblem build_equations(const CorrectionProblem& p);

/// lam Q. exists x. P(x) & unique(x) & Q(x), uniqueness taken against the
/// fresh property metavariable `property` of type e -> t.
Term paycheck_target(const std::string& property);

/// True when the anaphor's value carries no primary occurrence.
bool por_filter(const Substitution& candidate, const std::string& anaphor);

/// Strict when every pronoun mentions a source parallel element, Sloppy
/// when one mentions a target element, Neutral otherwise.
Classification classify(const Reading& reading, const CorrectionProblem& p);

Verdict analyze(const CorrectionProblem& p);

/// The problem described by a correction file: SSem and TSem are the
/// right-hand sides of its two equations, the anaphor the head of the left.
CorrectionProblem correction_problem(const ProblemFile& file, const SearchBounds& bounds = {});

}  // namespace houe
