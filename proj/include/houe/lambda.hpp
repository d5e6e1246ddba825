#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "houe/signature.hpp"
#include "houe/term.hpp"
#include "houe/type.hpp"

namespace houe {

/// Binder context: `ctx.back()` is the type of de Bruijn index 0.
using Context = std::vector<Type>;

/// 1-based argument path into the eta-long form. Abstractions are
/// transparent: a step always selects an argument of the application spine
/// under any leading binders.
using PositionPath = std::vector<std::size_t>;

/// A unification or equivalence constraint `lhs = rhs`.
struct Equation {
  Term lhs;
  Term rhs;
};

/// Type of a term under a binder context. Throws Error(IllTyped) on
/// application mismatches and on out-of-range bound variables.
Type type_of(const Term& term, const Context& ctx = {});

/// As above, additionally checking that every constant and metavariable is
/// declared in `sig` with the type it carries (Error(UnknownName) /
/// Error(IllTyped)). Skolem constants are exempt.
Type type_of(const Term& term, const Signature& sig);

/// Shifts loose bound variables at or above `cutoff` by `delta`.
Term shift(const Term& term, long delta, std::size_t cutoff = 0);

/// Beta-contracts `(lam. body) arg`.
Term instantiate(const Term& body, const Term& arg);

Term beta_normalize(const Term& term);

/// Canonical beta-normal eta-long form. Idempotent and type preserving.
Term normalize(const Term& term, const Context& ctx = {});

/// Identity up to bound-variable renaming; colour marks are ignored.
bool alpha_equal(const Term& a, const Term& b);

/// Identity that also compares colour marks.
bool identical(const Term& a, const Term& b);

std::set<std::string> free_metavars(const Term& term);
/// Metavariable names in order of first (left-to-right) occurrence.
std::vector<std::string> metavars_in_order(const Term& term);
std::map<std::string, Type> metavar_types(const Term& term);

bool contains_meta(const Term& term, const std::string& name);
bool has_metas(const Term& term);
bool contains_constant(const Term& term, const std::string& name);
bool contains_skolem(const Term& term);
/// True if some de Bruijn index reaches past `depth` enclosing binders.
bool has_loose_bound(const Term& term, std::size_t depth = 0);
bool has_primary(const Term& term);
Term strip_colors(const Term& term);
std::size_t term_size(const Term& term);

/// Subterm at `path` (see PositionPath). Throws Error(InvalidPath).
Term occurrences_at(const Term& term, const PositionPath& path);
/// Colours the constant at `path` as primary. Throws Error(InvalidPath) or
/// Error(BadMark) when the addressed subterm is not a constant.
Term mark_primary(const Term& term, const PositionPath& path);

/// Finite map from metavariable names to closed terms, kept idempotent:
/// no range term mentions a domain metavariable.
class Substitution {
 public:
  Substitution() = default;

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  bool contains(const std::string& name) const { return map_.count(name) > 0; }
  const Term* find(const std::string& name) const;
  const std::map<std::string, Term>& bindings() const { return map_; }

  /// Adds `name := value`, composing so the result stays idempotent.
  /// `value` must not contain `name`.
  void bind(const std::string& name, const Term& value);

  /// Replaces bound metavariables without normalising.
  Term substitute(const Term& term) const;
  /// substitute() followed by normalize() under `ctx`.
  Term apply(const Term& term, const Context& ctx = {}) const;

  /// Keeps only the listed names.
  Substitution restricted(const std::set<std::string>& names) const;

  friend bool operator==(const Substitution& a, const Substitution& b);

 private:
  std::map<std::string, Term> map_;
};

/// Free-function form of Substitution::substitute.
Term substitute(const Substitution& s, const Term& term);

}  // namespace houe
