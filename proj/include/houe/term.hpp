#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "houe/type.hpp"

namespace houe {

/// Immutable simply-typed lambda term. Bound variables are de Bruijn
/// indices, so structural equality of two terms (ignoring binder hints and
/// colour marks) is alpha-equivalence. Copies share structure.
class Term {
 public:
  enum class Kind { Const, Meta, Bound, Lam, App };

  /// `primary` is the colour mark used by the primary occurrence
  /// restriction; it never affects typing or normalisation.
  static Term constant(std::string name, Type type, bool primary = false);
  static Term meta(std::string name, Type type);
  static Term bound(std::size_t index);
  /// `hint` is only a printing preference for the binder name.
  static Term lam(std::string hint, Type binder, Term body);
  static Term app(Term fn, Term arg);
  static Term apply(Term head, const std::vector<Term>& args);

  Kind kind() const { return node_->kind; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_meta() const { return kind() == Kind::Meta; }
  bool is_bound() const { return kind() == Kind::Bound; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_app() const { return kind() == Kind::App; }

  /// Constant or metavariable name; binder hint for abstractions.
  const std::string& name() const { return node_->name; }
  /// Constant or metavariable type; binder type for abstractions.
  const Type& type() const { return node_->type; }
  std::size_t index() const { return node_->index; }
  bool primary() const { return node_->primary; }

  const Term& body() const { return node_->children[0]; }
  const Term& fn() const { return node_->children[0]; }
  const Term& arg() const { return node_->children[1]; }

  /// Same constant with a different colour mark.
  Term with_primary(bool primary) const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    Type type;
    std::size_t index = 0;
    bool primary = false;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Head and arguments of an application spine `h(a1, ..., an)`.
struct Spine {
  Term head;
  std::vector<Term> args;
};

Spine spine(const Term& term);

/// Strips leading abstractions. `binders` receives the binder types
/// outermost first, `hints` the matching binder names.
Term strip_lambdas(const Term& term, std::vector<Type>* binders = nullptr,
                   std::vector<std::string>* hints = nullptr);

/// Re-wraps `body` under the given binders (outermost first).
Term wrap_lambdas(const std::vector<Type>& binders,
                  const std::vector<std::string>& hints, Term body);

}  // namespace houe
