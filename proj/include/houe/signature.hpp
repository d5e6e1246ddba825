#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "houe/term.hpp"
#include "houe/type.hpp"

namespace houe {

// Object-level logical constants. They are ordinary constants of the
// term language; only the tableau and the oracle give them meaning.
namespace logic {

inline constexpr const char* kNot = "not";
inline constexpr const char* kAnd = "and";
inline constexpr const char* kOr = "or";
inline constexpr const char* kImp = "imp";
inline constexpr const char* kIff = "iff";
inline constexpr const char* kEq = "eq";
inline constexpr const char* kForall = "forall";
inline constexpr const char* kExists = "exists";

bool is_logical(const std::string& name);
/// Type of a logical constant; the name must satisfy is_logical.
Type logical_type(const std::string& name);

Term not_(Term a);
Term and_(Term a, Term b);
Term or_(Term a, Term b);
Term imp(Term a, Term b);
Term iff(Term a, Term b);
Term eq(Term a, Term b);
/// `forall x:ty. body`, with `body` already in de Bruijn form.
Term forall(std::string hint, Type ty, Term body);
Term exists(std::string hint, Type ty, Term body);

/// True when `term` is `name` applied to exactly `arity` arguments.
bool is_app_of(const Term& term, const char* name, std::size_t arity);

}  // namespace logic

/// Names beginning with this prefix are reserved for Skolem terms.
inline constexpr const char* kSkolemPrefix = "$sk";

bool is_skolem_name(const std::string& name);

/// Declared constants and metavariables. Logical constants are pre-seeded
/// and cannot be redeclared; names are unique across both maps.
class Signature {
 public:
  Signature() = default;

  void add_constant(const std::string& name, const Type& type);
  void add_meta(const std::string& name, const Type& type);

  bool has(const std::string& name) const;
  bool is_constant(const std::string& name) const;
  bool is_meta(const std::string& name) const;

  std::optional<Type> constant_type(const std::string& name) const;
  std::optional<Type> meta_type(const std::string& name) const;

  /// User-declared constants in declaration order (logical ones excluded).
  const std::vector<std::pair<std::string, Type>>& constants() const {
    return const_order_;
  }
  const std::vector<std::pair<std::string, Type>>& metas() const {
    return meta_order_;
  }

  Term make_constant(const std::string& name) const;
  Term make_meta(const std::string& name) const;

 private:
  std::map<std::string, Type> consts_;
  std::map<std::string, Type> metas_;
  std::vector<std::pair<std::string, Type>> const_order_;
  std::vector<std::pair<std::string, Type>> meta_order_;
};

}  // namespace houe
