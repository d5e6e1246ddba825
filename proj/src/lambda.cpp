#include "houe/lambda.hpp"

#include <algorithm>

#include "houe/error.hpp"

namespace houe {

namespace {

const Type& lookup_bound(const Context& ctx, std::size_t index) {
  if (index >= ctx.size()) {
    throw Error(ErrorCode::IllTyped,
                "loose bound variable #" + std::to_string(index));
  }
  return ctx[ctx.size() - 1 - index];
}

Type type_in(const Term& term, Context& ctx) {
  switch (term.kind()) {
    case Term::Kind::Const:
    case Term::Kind::Meta:
      return term.type();
    case Term::Kind::Bound:
      return lookup_bound(ctx, term.index());
    case Term::Kind::Lam: {
      ctx.push_back(term.type());
      Type body = type_in(term.body(), ctx);
      ctx.pop_back();
      return Type::arrow(term.type(), body);
    }
    case Term::Kind::App: {
      Type fn = type_in(term.fn(), ctx);
      Type arg = type_in(term.arg(), ctx);
      if (!fn.is_arrow()) {
        throw Error(ErrorCode::IllTyped,
                    "applying a term of non-function type " + fn.str());
      }
      if (fn.domain() != arg) {
        throw Error(ErrorCode::IllTyped, "argument type mismatch: expected " +
                                             fn.domain().str() + ", found " +
                                             arg.str());
      }
      return fn.codomain();
    }
  }
  return Type::prop();
}

void check_names(const Term& term, const Signature& sig) {
  switch (term.kind()) {
    case Term::Kind::Const: {
      if (is_skolem_name(term.name())) return;
      auto ty = sig.constant_type(term.name());
      if (!ty) {
        throw Error(ErrorCode::UnknownName,
                    "unknown constant '" + term.name() + "'");
      }
      if (*ty != term.type()) {
        throw Error(ErrorCode::IllTyped, "constant '" + term.name() +
                                             "' used at type " +
                                             term.type().str());
      }
      return;
    }
    case Term::Kind::Meta: {
      auto ty = sig.meta_type(term.name());
      if (!ty) {
        throw Error(ErrorCode::UnknownName,
                    "unknown metavariable '" + term.name() + "'");
      }
      if (*ty != term.type()) {
        throw Error(ErrorCode::IllTyped, "metavariable '" + term.name() +
                                             "' used at type " +
                                             term.type().str());
      }
      return;
    }
    case Term::Kind::Bound:
      return;
    case Term::Kind::Lam:
      check_names(term.body(), sig);
      return;
    case Term::Kind::App:
      check_names(term.fn(), sig);
      check_names(term.arg(), sig);
      return;
  }
}

Term shift_rec(const Term& term, long delta, std::size_t cutoff) {
  switch (term.kind()) {
    case Term::Kind::Bound:
      if (term.index() >= cutoff) {
        return Term::bound(static_cast<std::size_t>(
            static_cast<long>(term.index()) + delta));
      }
      return term;
    case Term::Kind::Lam: {
      Term body = shift_rec(term.body(), delta, cutoff + 1);
      if (body.same_node(term.body())) return term;
      return Term::lam(term.name(), term.type(), std::move(body));
    }
    case Term::Kind::App: {
      Term fn = shift_rec(term.fn(), delta, cutoff);
      Term arg = shift_rec(term.arg(), delta, cutoff);
      if (fn.same_node(term.fn()) && arg.same_node(term.arg())) return term;
      return Term::app(std::move(fn), std::move(arg));
    }
    default:
      return term;
  }
}

// Replaces index `depth` by `arg` (shifted under `depth` binders) and
// lowers the indices above it.
Term subst_rec(const Term& term, std::size_t depth, const Term& arg) {
  switch (term.kind()) {
    case Term::Kind::Bound:
      if (term.index() == depth) return shift(arg, static_cast<long>(depth));
      if (term.index() > depth) return Term::bound(term.index() - 1);
      return term;
    case Term::Kind::Lam:
      return Term::lam(term.name(), term.type(),
                       subst_rec(term.body(), depth + 1, arg));
    case Term::Kind::App:
      return Term::app(subst_rec(term.fn(), depth, arg),
                       subst_rec(term.arg(), depth, arg));
    default:
      return term;
  }
}

Term eta_long(const Term& term, const Type& type, Context& ctx) {
  if (type.is_arrow()) {
    if (term.is_lam()) {
      ctx.push_back(term.type());
      Term body = eta_long(term.body(), type.codomain(), ctx);
      ctx.pop_back();
      return Term::lam(term.name(), term.type(), std::move(body));
    }
    Term applied = Term::app(shift(term, 1), Term::bound(0));
    ctx.push_back(type.domain());
    Term body = eta_long(applied, type.codomain(), ctx);
    ctx.pop_back();
    return Term::lam("x", type.domain(), std::move(body));
  }
  Spine sp = spine(term);
  if (sp.args.empty()) return term;
  Type head_type = sp.head.is_bound() ? lookup_bound(ctx, sp.head.index())
                                      : sp.head.type();
  std::vector<Type> arg_types = head_type.args();
  if (arg_types.size() < sp.args.size()) {
    throw Error(ErrorCode::IllTyped, "over-applied head");
  }
  std::vector<Term> args;
  args.reserve(sp.args.size());
  for (std::size_t i = 0; i < sp.args.size(); ++i) {
    args.push_back(eta_long(sp.args[i], arg_types[i], ctx));
  }
  return Term::apply(sp.head, args);
}

template <typename F>
bool any_node(const Term& term, const F& pred) {
  if (pred(term)) return true;
  switch (term.kind()) {
    case Term::Kind::Lam:
      return any_node(term.body(), pred);
    case Term::Kind::App:
      return any_node(term.fn(), pred) || any_node(term.arg(), pred);
    default:
      return false;
  }
}

void collect_metas(const Term& term, std::vector<std::string>& out) {
  switch (term.kind()) {
    case Term::Kind::Meta:
      if (std::find(out.begin(), out.end(), term.name()) == out.end()) {
        out.push_back(term.name());
      }
      return;
    case Term::Kind::Lam:
      collect_metas(term.body(), out);
      return;
    case Term::Kind::App:
      collect_metas(term.fn(), out);
      collect_metas(term.arg(), out);
      return;
    default:
      return;
  }
}

bool equal_rec(const Term& a, const Term& b, bool colors) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Const:
      return a.name() == b.name() && (!colors || a.primary() == b.primary());
    case Term::Kind::Meta:
      return a.name() == b.name();
    case Term::Kind::Bound:
      return a.index() == b.index();
    case Term::Kind::Lam:
      return a.type() == b.type() && equal_rec(a.body(), b.body(), colors);
    case Term::Kind::App:
      return equal_rec(a.fn(), b.fn(), colors) &&
             equal_rec(a.arg(), b.arg(), colors);
  }
  return false;
}

Term mark_rec(const Term& term, const PositionPath& path, std::size_t i) {
  if (i == path.size()) {
    if (!term.is_const()) {
      throw Error(ErrorCode::BadMark, "mark does not address a constant");
    }
    return term.with_primary(true);
  }
  std::vector<Type> binders;
  std::vector<std::string> hints;
  Term body = strip_lambdas(term, &binders, &hints);
  Spine sp = spine(body);
  if (path[i] < 1 || path[i] > sp.args.size()) {
    throw Error(ErrorCode::InvalidPath, "path step " + std::to_string(path[i]) +
                                            " out of range");
  }
  sp.args[path[i] - 1] = mark_rec(sp.args[path[i] - 1], path, i + 1);
  return wrap_lambdas(binders, hints, Term::apply(sp.head, sp.args));
}

}  // namespace

Type type_of(const Term& term, const Context& ctx) {
  Context scratch = ctx;
  return type_in(term, scratch);
}

Type type_of(const Term& term, const Signature& sig) {
  check_names(term, sig);
  return type_of(term);
}

Term shift(const Term& term, long delta, std::size_t cutoff) {
  if (delta == 0) return term;
  return shift_rec(term, delta, cutoff);
}

Term instantiate(const Term& body, const Term& arg) {
  return subst_rec(body, 0, arg);
}

Term beta_normalize(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::Lam: {
      Term body = beta_normalize(term.body());
      if (body.same_node(term.body())) return term;
      return Term::lam(term.name(), term.type(), std::move(body));
    }
    case Term::Kind::App: {
      Term fn = beta_normalize(term.fn());
      Term arg = beta_normalize(term.arg());
      if (fn.is_lam()) return beta_normalize(instantiate(fn.body(), arg));
      if (fn.same_node(term.fn()) && arg.same_node(term.arg())) return term;
      return Term::app(std::move(fn), std::move(arg));
    }
    default:
      return term;
  }
}

Term normalize(const Term& term, const Context& ctx) {
  Type ty = type_of(term, ctx);
  Context scratch = ctx;
  return eta_long(beta_normalize(term), ty, scratch);
}

bool alpha_equal(const Term& a, const Term& b) { return equal_rec(a, b, false); }

bool identical(const Term& a, const Term& b) { return equal_rec(a, b, true); }

std::set<std::string> free_metavars(const Term& term) {
  std::vector<std::string> v;
  collect_metas(term, v);
  return {v.begin(), v.end()};
}

std::vector<std::string> metavars_in_order(const Term& term) {
  std::vector<std::string> v;
  collect_metas(term, v);
  return v;
}

std::map<std::string, Type> metavar_types(const Term& term) {
  std::map<std::string, Type> out;
  any_node(term, [&](const Term& t) {
    if (t.is_meta()) out.emplace(t.name(), t.type());
    return false;
  });
  return out;
}

bool contains_meta(const Term& term, const std::string& name) {
  return any_node(term,
                  [&](const Term& t) { return t.is_meta() && t.name() == name; });
}

bool has_metas(const Term& term) {
  return any_node(term, [](const Term& t) { return t.is_meta(); });
}

bool contains_constant(const Term& term, const std::string& name) {
  return any_node(
      term, [&](const Term& t) { return t.is_const() && t.name() == name; });
}

bool contains_skolem(const Term& term) {
  return any_node(term, [](const Term& t) {
    return t.is_const() && is_skolem_name(t.name());
  });
}

bool has_loose_bound(const Term& term, std::size_t depth) {
  switch (term.kind()) {
    case Term::Kind::Bound:
      return term.index() >= depth;
    case Term::Kind::Lam:
      return has_loose_bound(term.body(), depth + 1);
    case Term::Kind::App:
      return has_loose_bound(term.fn(), depth) ||
             has_loose_bound(term.arg(), depth);
    default:
      return false;
  }
}

bool has_primary(const Term& term) {
  return any_node(term,
                  [](const Term& t) { return t.is_const() && t.primary(); });
}

Term strip_colors(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::Const:
      return term.with_primary(false);
    case Term::Kind::Lam:
      return Term::lam(term.name(), term.type(), strip_colors(term.body()));
    case Term::Kind::App:
      return Term::app(strip_colors(term.fn()), strip_colors(term.arg()));
    default:
      return term;
  }
}

std::size_t term_size(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::Lam:
      return 1 + term_size(term.body());
    case Term::Kind::App:
      return term_size(term.fn()) + term_size(term.arg());
    default:
      return 1;
  }
}

Term occurrences_at(const Term& term, const PositionPath& path) {
  Term cur = term;
  for (std::size_t step : path) {
    Spine sp = spine(strip_lambdas(cur));
    if (step < 1 || step > sp.args.size()) {
      throw Error(ErrorCode::InvalidPath,
                  "path step " + std::to_string(step) + " out of range");
    }
    cur = sp.args[step - 1];
  }
  return cur;
}

Term mark_primary(const Term& term, const PositionPath& path) {
  return mark_rec(term, path, 0);
}

const Term* Substitution::find(const std::string& name) const {
  auto it = map_.find(name);
  return it == map_.end() ? nullptr : &it->second;
}

void Substitution::bind(const std::string& name, const Term& value) {
  Term resolved = normalize(substitute(value));
  Substitution single;
  single.map_.emplace(name, resolved);
  for (auto& [key, range] : map_) {
    if (contains_meta(range, name)) range = single.apply(range);
  }
  map_.insert_or_assign(name, std::move(resolved));
}

Term Substitution::substitute(const Term& term) const {
  if (map_.empty()) return term;
  switch (term.kind()) {
    case Term::Kind::Meta: {
      auto it = map_.find(term.name());
      return it == map_.end() ? term : it->second;
    }
    case Term::Kind::Lam: {
      Term body = substitute(term.body());
      if (body.same_node(term.body())) return term;
      return Term::lam(term.name(), term.type(), std::move(body));
    }
    case Term::Kind::App: {
      Term fn = substitute(term.fn());
      Term arg = substitute(term.arg());
      if (fn.same_node(term.fn()) && arg.same_node(term.arg())) return term;
      return Term::app(std::move(fn), std::move(arg));
    }
    default:
      return term;
  }
}

Term Substitution::apply(const Term& term, const Context& ctx) const {
  return normalize(substitute(term), ctx);
}

Substitution Substitution::restricted(const std::set<std::string>& names) const {
  Substitution out;
  for (const auto& [k, v] : map_) {
    if (names.count(k)) out.map_.emplace(k, v);
  }
  return out;
}

bool operator==(const Substitution& a, const Substitution& b) {
  if (a.map_.size() != b.map_.size()) return false;
  auto it = b.map_.begin();
  for (const auto& [k, v] : a.map_) {
    if (k != it->first || !alpha_equal(v, it->second)) return false;
    ++it;
  }
  return true;
}

Term substitute(const Substitution& s, const Term& term) {
  return s.substitute(term);
}

}  // namespace houe
