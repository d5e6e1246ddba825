#include "houe/term.hpp"

namespace houe {

Term Term::constant(std::string name, Type type, bool primary) {
  return Term{std::make_shared<const Node>(
      Node{Kind::Const, std::move(name), std::move(type), 0, primary, {}})};
}

Term Term::meta(std::string name, Type type) {
  return Term{std::make_shared<const Node>(
      Node{Kind::Meta, std::move(name), std::move(type), 0, false, {}})};
}

Term Term::bound(std::size_t index) {
  return Term{std::make_shared<const Node>(
      Node{Kind::Bound, {}, Type::ind(), index, false, {}})};
}

Term Term::lam(std::string hint, Type binder, Term body) {
  return Term{std::make_shared<const Node>(Node{
      Kind::Lam, std::move(hint), std::move(binder), 0, false, {std::move(body)}})};
}

Term Term::app(Term fn, Term arg) {
  return Term{std::make_shared<const Node>(Node{
      Kind::App, {}, Type::ind(), 0, false, {std::move(fn), std::move(arg)}})};
}

Term Term::apply(Term head, const std::vector<Term>& args) {
  for (const auto& a : args) head = app(std::move(head), a);
  return head;
}

Term Term::with_primary(bool primary) const {
  if (!is_const() || node_->primary == primary) return *this;
  return constant(name(), type(), primary);
}

Spine spine(const Term& term) {
  std::vector<Term> rev;
  const Term* cur = &term;
  while (cur->is_app()) {
    rev.push_back(cur->arg());
    cur = &cur->fn();
  }
  return Spine{*cur, std::vector<Term>(rev.rbegin(), rev.rend())};
}

Term strip_lambdas(const Term& term, std::vector<Type>* binders,
                   std::vector<std::string>* hints) {
  const Term* cur = &term;
  while (cur->is_lam()) {
    if (binders) binders->push_back(cur->type());
    if (hints) hints->push_back(cur->name());
    cur = &cur->body();
  }
  return *cur;
}

Term wrap_lambdas(const std::vector<Type>& binders,
                  const std::vector<std::string>& hints, Term body) {
  for (std::size_t i = binders.size(); i-- > 0;) {
    std::string hint = i < hints.size() ? hints[i] : std::string("x");
    body = Term::lam(std::move(hint), binders[i], std::move(body));
  }
  return body;
}

}  // namespace houe
