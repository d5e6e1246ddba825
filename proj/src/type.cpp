#include "houe/type.hpp"

#include "houe/error.hpp"

namespace houe {

Type Type::ind() {
  static const Type t{std::make_shared<const Node>(Node{Kind::Ind, {}})};
  return t;
}

Type Type::prop() {
  static const Type t{std::make_shared<const Node>(Node{Kind::Prop, {}})};
  return t;
}

Type Type::arrow(Type domain, Type codomain) {
  return Type{std::make_shared<const Node>(
      Node{Kind::Arrow, {std::move(domain), std::move(codomain)}})};
}

Type Type::curried(const std::vector<Type>& args, Type result) {
  Type out = std::move(result);
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    out = arrow(*it, out);
  }
  return out;
}

std::vector<Type> Type::args() const {
  std::vector<Type> out;
  const Type* cur = this;
  while (cur->is_arrow()) {
    out.push_back(cur->domain());
    cur = &cur->codomain();
  }
  return out;
}

Type Type::result() const {
  const Type* cur = this;
  while (cur->is_arrow()) cur = &cur->codomain();
  return *cur;
}

std::size_t Type::arity() const {
  std::size_t n = 0;
  const Type* cur = this;
  while (cur->is_arrow()) {
    ++n;
    cur = &cur->codomain();
  }
  return n;
}

std::string Type::str() const {
  switch (kind()) {
    case Kind::Ind:
      return "e";
    case Kind::Prop:
      return "t";
    case Kind::Arrow: {
      std::string dom = domain().str();
      if (domain().is_arrow()) dom = "(" + dom + ")";
      return dom + " -> " + codomain().str();
    }
  }
  return "?";
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_base()) return true;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::IllTyped: return "IllTyped";
    case ErrorCode::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::BadMark: return "BadMark";
    case ErrorCode::MissingEquations: return "MissingEquations";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::NotProp: return "NotProp";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::MultiplicityExceeded: return "MultiplicityExceeded";
    case ErrorCode::SignatureTooLarge: return "SignatureTooLarge";
    case ErrorCode::UninterpretedConstant: return "UninterpretedConstant";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace houe
