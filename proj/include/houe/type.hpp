#pragma once

#include <memory>
#include <string>
#include <vector>

namespace houe {

/// Simple type: a base type (`e` individuals, `t` truth values) or a
/// right-associated function type.
class Type {
 public:
  enum class Kind { Ind, Prop, Arrow };

  static Type ind();
  static Type prop();
  static Type arrow(Type domain, Type codomain);
  /// Builds `args[0] -> ... -> args[n-1] -> result`.
  static Type curried(const std::vector<Type>& args, Type result);

  Kind kind() const { return node_->kind; }
  bool is_base() const { return node_->kind != Kind::Arrow; }
  bool is_prop() const { return node_->kind == Kind::Prop; }
  bool is_arrow() const { return node_->kind == Kind::Arrow; }

  // Only valid on arrow types.
  const Type& domain() const { return node_->domain[0]; }
  const Type& codomain() const { return node_->domain[1]; }

  /// Domain spine: for a -> b -> c returns {a, b}.
  std::vector<Type> args() const;
  /// Final base type of the spine.
  Type result() const;
  std::size_t arity() const;

  std::string str() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::vector<Type> domain;  // empty for base types, {dom, cod} for arrows
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace houe
