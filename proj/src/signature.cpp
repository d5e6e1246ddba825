#include "houe/signature.hpp"

#include <array>

#include "houe/error.hpp"

namespace houe {
namespace logic {
namespace {

const std::array<const char*, 8> kNames = {kNot, kAnd, kOr,     kImp,
                                           kIff, kEq,  kForall, kExists};

Term connective(const char* name) {
  return Term::constant(name, logical_type(name));
}

}  // namespace

bool is_logical(const std::string& name) {
  for (const char* n : kNames) {
    if (name == n) return true;
  }
  return false;
}

Type logical_type(const std::string& name) {
  const Type e = Type::ind();
  const Type t = Type::prop();
  if (name == kNot) return Type::arrow(t, t);
  if (name == kEq) return Type::curried({e, e}, t);
  if (name == kForall || name == kExists) {
    return Type::arrow(Type::arrow(e, t), t);
  }
  return Type::curried({t, t}, t);
}

Term not_(Term a) { return Term::app(connective(kNot), std::move(a)); }
Term and_(Term a, Term b) {
  return Term::apply(connective(kAnd), {std::move(a), std::move(b)});
}
Term or_(Term a, Term b) {
  return Term::apply(connective(kOr), {std::move(a), std::move(b)});
}
Term imp(Term a, Term b) {
  return Term::apply(connective(kImp), {std::move(a), std::move(b)});
}
Term iff(Term a, Term b) {
  return Term::apply(connective(kIff), {std::move(a), std::move(b)});
}
Term eq(Term a, Term b) {
  return Term::apply(connective(kEq), {std::move(a), std::move(b)});
}

Term forall(std::string hint, Type ty, Term body) {
  return Term::app(connective(kForall),
                   Term::lam(std::move(hint), std::move(ty), std::move(body)));
}

Term exists(std::string hint, Type ty, Term body) {
  return Term::app(connective(kExists),
                   Term::lam(std::move(hint), std::move(ty), std::move(body)));
}

bool is_app_of(const Term& term, const char* name, std::size_t arity) {
  const Term* cur = &term;
  for (std::size_t i = 0; i < arity; ++i) {
    if (!cur->is_app()) return false;
    cur = &cur->fn();
  }
  return cur->is_const() && cur->name() == name;
}

}  // namespace logic

bool is_skolem_name(const std::string& name) {
  return name.rfind(kSkolemPrefix, 0) == 0;
}

void Signature::add_constant(const std::string& name, const Type& type) {
  if (has(name) || logic::is_logical(name)) {
    throw Error(ErrorCode::DuplicateDeclaration,
                "duplicate declaration of '" + name + "'");
  }
  consts_.emplace(name, type);
  const_order_.emplace_back(name, type);
}

void Signature::add_meta(const std::string& name, const Type& type) {
  if (has(name) || logic::is_logical(name)) {
    throw Error(ErrorCode::DuplicateDeclaration,
                "duplicate declaration of '" + name + "'");
  }
  metas_.emplace(name, type);
  meta_order_.emplace_back(name, type);
}

bool Signature::has(const std::string& name) const {
  return consts_.count(name) > 0 || metas_.count(name) > 0;
}

bool Signature::is_constant(const std::string& name) const {
  return consts_.count(name) > 0 || logic::is_logical(name);
}

bool Signature::is_meta(const std::string& name) const {
  return metas_.count(name) > 0;
}

std::optional<Type> Signature::constant_type(const std::string& name) const {
  if (logic::is_logical(name)) return logic::logical_type(name);
  auto it = consts_.find(name);
  if (it == consts_.end()) return std::nullopt;
  return it->second;
}

std::optional<Type> Signature::meta_type(const std::string& name) const {
  auto it = metas_.find(name);
  if (it == metas_.end()) return std::nullopt;
  return it->second;
}

Term Signature::make_constant(const std::string& name) const {
  auto ty = constant_type(name);
  if (!ty) throw Error(ErrorCode::UnknownName, "unknown constant '" + name + "'");
  return Term::constant(name, *ty);
}

Term Signature::make_meta(const std::string& name) const {
  auto ty = meta_type(name);
  if (!ty) {
    throw Error(ErrorCode::UnknownName, "unknown metavariable '" + name + "'");
  }
  return Term::meta(name, *ty);
}

}  // namespace houe
