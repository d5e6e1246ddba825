#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "houe/lambda.hpp"
#include "houe/signature.hpp"
#include "houe/term.hpp"

namespace houe {

struct ParseOptions {
  /// Restrictor R for the `unique(x)` macro, expanded to
  /// `forall z:e. R(z) <=> z = x`. Without one `unique` is an unknown name.
  std::optional<Term> unique_restrictor;
  /// Line/column of the first character, for error positions.
  std::size_t line = 1;
  std::size_t column = 1;
};

Type parse_type(std::string_view text);

/// Parses a term against `sig`. The result is type-checked but not
/// normalised. Throws ParseError (SyntaxError, UnknownName, IllTyped).
Term parse_term(std::string_view text, const Signature& sig,
                const ParseOptions& options = {});

/// Canonical concrete syntax; parse_term(pretty_print(t)) is alpha-equal to
/// `t` for well-typed terms over a declared signature.
std::string pretty_print(const Term& term);

/// `{X := a, Y := b}` with keys in name order.
std::string pretty_print(const Substitution& subst);

enum class ProblemKind { Unify, Prove, Houe, Correction };
enum class Side { Lhs, Rhs };

std::string_view to_string(ProblemKind kind);

struct PrimaryMark {
  std::size_t equation;  // 1-based, as written in the file
  Side side;
  PositionPath path;
};

struct ParallelPair {
  Term source;
  Term target;
};

/// A validated problem file. Equations and axioms are stored in
/// beta-normal eta-long form with primary marks already applied.
struct ProblemFile {
  ProblemKind kind = ProblemKind::Unify;
  Signature signature;
  std::vector<Term> axioms;
  std::vector<Term> goals;
  std::vector<Equation> equations;
  std::vector<PrimaryMark> marks;
  std::vector<ParallelPair> parallel;
};

ProblemFile parse_problem(std::string_view text);

/// Reads and parses a problem file. Throws Error(Io) if unreadable.
ProblemFile load_problem(const std::filesystem::path& path);

}  // namespace houe
