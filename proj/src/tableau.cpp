#include "houe/tableau.hpp"

#include <memory>

#include "houe/countermodel.hpp"
#include "houe/error.hpp"
#include "houe/hou.hpp"
#include "houe/parser.hpp"
#include "houe/signature.hpp"

namespace houe {
namespace {

using logic::is_app_of;

// Largest domain tried when looking for a model of a seed branch.
constexpr int kModelDomain = 3;

Term arg(const Term& t, std::size_t i) { return spine(t).args.at(i); }

Term neg(const Term& t) { return logic::not_(t); }

// (atom, positive?) for a literal.
std::pair<Term, bool> polarity(const Term& f) {
  if (is_app_of(f, logic::kNot, 1)) return {f.arg(), false};
  return {f, true};
}

bool rigid_atom(const Term& atom) {
  Term h = spine(atom).head;
  return h.is_const() && !logic::is_logical(h.name());
}

bool positive_equation(const Term& f) { return is_app_of(f, logic::kEq, 2); }

// Ground rewriting runs one way only: Skolem terms and larger terms are
// replaced; otherwise left to right.
std::pair<Term, Term> orient(const Term& l, const Term& r) {
  bool ls = contains_skolem(l), rs = contains_skolem(r);
  if (ls != rs) return ls ? std::pair{l, r} : std::pair{r, l};
  if (term_size(l) != term_size(r)) {
    return term_size(l) > term_size(r) ? std::pair{l, r} : std::pair{r, l};
  }
  return {l, r};
}

Term replace(const Term& t, const Term& from, const Term& to) {
  if (alpha_equal(t, from)) return to;
  switch (t.kind()) {
    case Term::Kind::Lam:
      return Term::lam(t.name(), t.type(), replace(t.body(), from, to));
    case Term::Kind::App:
      return Term::app(replace(t.fn(), from, to), replace(t.arg(), from, to));
    default:
      return t;
  }
}

bool occurs(const Term& t, const Term& sub) {
  if (alpha_equal(t, sub)) return true;
  switch (t.kind()) {
    case Term::Kind::Lam:
      return occurs(t.body(), sub);
    case Term::Kind::App:
      return occurs(t.fn(), sub) || occurs(t.arg(), sub);
    default:
      return false;
  }
}

void collect_names(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Const:
    case Term::Kind::Meta:
      out.insert(t.name());
      break;
    case Term::Kind::Lam:
      collect_names(t.body(), out);
      break;
    case Term::Kind::App:
      collect_names(t.fn(), out);
      collect_names(t.arg(), out);
      break;
    default:
      break;
  }
}

Term instance(const Decomposition& d, const Term& witness) {
  Term body = normalize(Term::app(*d.scope, witness));
  return d.negated ? neg(body) : body;
}

std::vector<Term> applied(const Branch& b, const Substitution& s) {
  std::vector<Term> out;
  out.reserve(b.formulas.size());
  for (const auto& f : b.formulas) out.push_back(s.apply(f));
  return out;
}

Term rename_metas(const Term& t, const std::set<std::string>& keep,
                  std::map<std::string, std::string>& names) {
  switch (t.kind()) {
    case Term::Kind::Meta: {
      if (keep.count(t.name())) return t;
      auto it = names.emplace(t.name(), "?" + std::to_string(names.size() + 1)).first;
      return Term::meta(it->second, t.type());
    }
    case Term::Kind::Lam:
      return Term::lam(t.name(), t.type(), rename_metas(t.body(), keep, names));
    case Term::Kind::App:
      return Term::app(rename_metas(t.fn(), keep, names), rename_metas(t.arg(), keep, names));
    default:
      return t;
  }
}

}  // namespace

Decomposition decompose(const Term& f) {
  Decomposition d;
  auto alpha = [&](std::vector<Term> parts) {
    d.rule = Rule::Alpha;
    d.left = std::move(parts);
  };
  auto beta = [&](std::vector<Term> l, std::vector<Term> r) {
    d.rule = Rule::Beta;
    d.left = std::move(l);
    d.right = std::move(r);
  };
  auto quant = [&](Rule rule, const Term& scope, bool negated) {
    d.rule = rule;
    d.scope = scope;
    d.negated = negated;
  };

  if (is_app_of(f, logic::kNot, 1)) {
    const Term& a = f.arg();
    if (is_app_of(a, logic::kNot, 1)) {
      alpha({a.arg()});
    } else if (is_app_of(a, logic::kOr, 2)) {
      alpha({neg(arg(a, 0)), neg(arg(a, 1))});
    } else if (is_app_of(a, logic::kImp, 2)) {
      Term l = arg(a, 0), r = arg(a, 1);
      alpha({l, neg(r)});
    } else if (is_app_of(a, logic::kAnd, 2)) {
      Term l = arg(a, 0), r = arg(a, 1);
      beta({neg(l)}, {neg(r)});
    } else if (is_app_of(a, logic::kIff, 2)) {
      Term l = arg(a, 0), r = arg(a, 1);
      beta({l, neg(r)}, {r, neg(l)});
    } else if (is_app_of(a, logic::kExists, 1)) {
      quant(Rule::Gamma, a.arg(), true);
    } else if (is_app_of(a, logic::kForall, 1)) {
      quant(Rule::Delta, a.arg(), true);
    }
    return d;
  }
  if (is_app_of(f, logic::kAnd, 2)) {
    Term l = arg(f, 0), r = arg(f, 1);
    alpha({l, r});
  } else if (is_app_of(f, logic::kOr, 2)) {
    Term l = arg(f, 0), r = arg(f, 1);
    beta({l}, {r});
  } else if (is_app_of(f, logic::kImp, 2)) {
    Term l = arg(f, 0), r = arg(f, 1);
    beta({neg(l)}, {r});
  } else if (is_app_of(f, logic::kIff, 2)) {
    Term l = arg(f, 0), r = arg(f, 1);
    beta({l, r}, {neg(l), neg(r)});
  } else if (is_app_of(f, logic::kForall, 1)) {
    quant(Rule::Gamma, f.arg(), false);
  } else if (is_app_of(f, logic::kExists, 1)) {
    quant(Rule::Delta, f.arg(), false);
  }
  return d;
}

std::optional<std::size_t> Branch::find(const Term& f) const {
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (alpha_equal(formulas[i], f)) return i;
  }
  return std::nullopt;
}

Tableau::Tableau(SearchBounds bounds, NodeBudget* budget)
    : bounds_(bounds), own_budget_(bounds.node_budget), external_(budget) {}

void Tableau::reset() {
  gamma_counter_ = 0;
  skolem_counter_ = 0;
  gamma_vars_.clear();
  skolems_.clear();
  trace_.clear();
}

void Tableau::note_names(const Term& t) { collect_names(t, names_); }

Term Tableau::fresh_gamma_var(const Type& ty) {
  std::string name;
  do {
    name = "X" + std::to_string(++gamma_counter_);
  } while (names_.count(name));
  gamma_vars_.insert(name);
  return Term::meta(name, ty);
}

Term Tableau::skolem_for(const Term& existential, const Type& ty) {
  std::string key = pretty_print(existential);
  auto it = skolems_.find(key);
  if (it != skolems_.end()) return it->second;
  auto types = metavar_types(existential);
  std::vector<Type> arg_types;
  std::vector<Term> args;
  for (const auto& [name, mty] : types) {
    arg_types.push_back(mty);
    args.push_back(Term::meta(name, mty));
  }
  Term head = Term::constant(kSkolemPrefix + std::to_string(++skolem_counter_),
                             Type::curried(arg_types, ty));
  Term sk = normalize(Term::apply(head, args));
  skolems_.emplace(key, sk);
  return sk;
}

Branch Tableau::expand_alpha(const Branch& b, const Term& conjunction) const {
  Decomposition d = decompose(conjunction);
  Branch out = b;
  if (d.rule != Rule::Alpha) return out;
  if (auto i = b.find(conjunction)) out.expanded[*i] = true;
  for (const auto& f : d.left) {
    out.formulas.push_back(f);
    out.expanded.push_back(false);
  }
  return out;
}

std::pair<Branch, Branch> Tableau::expand_beta(const Branch& b, const Term& disjunction) const {
  Decomposition d = decompose(disjunction);
  Branch l = b, r = b;
  if (d.rule != Rule::Beta) return {l, r};
  if (auto i = b.find(disjunction)) l.expanded[*i] = r.expanded[*i] = true;
  l.id = b.id + ".1";
  r.id = b.id + ".2";
  for (const auto& f : d.left) {
    l.formulas.push_back(f);
    l.expanded.push_back(false);
  }
  for (const auto& f : d.right) {
    r.formulas.push_back(f);
    r.expanded.push_back(false);
  }
  return {l, r};
}

Branch Tableau::expand_gamma(const Branch& b, const Term& universal) {
  Decomposition d = decompose(universal);
  Branch out = b;
  if (d.rule != Rule::Gamma) return out;
  note_names(universal);
  auto idx = b.find(universal);
  std::size_t key = idx ? *idx : b.formulas.size();
  int& uses = out.gamma_uses[key];
  if (uses >= bounds_.gamma_multiplicity) {
    throw Error(ErrorCode::MultiplicityExceeded,
                "universal used " + std::to_string(uses) + " times: " +
                    pretty_print(universal));
  }
  ++uses;
  out.formulas.push_back(instance(d, fresh_gamma_var(d.scope->type())));
  out.expanded.push_back(false);
  return out;
}

Branch Tableau::expand_delta(const Branch& b, const Term& existential) {
  Decomposition d = decompose(existential);
  Branch out = b;
  if (d.rule != Rule::Delta) return out;
  if (auto i = b.find(existential)) out.expanded[*i] = true;
  out.formulas.push_back(instance(d, skolem_for(existential, d.scope->type())));
  out.expanded.push_back(false);
  return out;
}

Branch Tableau::rewrite_with_equation(const Branch& b, const Term& equation) const {
  Branch out = b;
  if (!positive_equation(equation) || has_metas(equation)) return out;
  Term l = arg(equation, 0), r = arg(equation, 1);
  if (alpha_equal(l, r)) return out;
  if (auto i = b.find(equation)) out.rewritten.insert(*i);
  for (const auto& f : b.formulas) {
    if (alpha_equal(f, equation) || decompose(f).rule != Rule::Literal) continue;
    auto [from, to] = orient(l, r);
    if (!occurs(f, from)) continue;
    Term g = normalize(replace(f, from, to));
    if (out.find(g)) continue;
    out.formulas.push_back(g);
    out.expanded.push_back(false);
  }
  return out;
}

bool Tableau::acceptable(const Substitution& s) const {
  for (const auto& [name, value] : s.bindings()) {
    if (outer_.count(name) && contains_skolem(value)) return false;
  }
  return true;
}

std::string Tableau::close_line(const Branch& b, const Substitution& before,
                                const Substitution& after) const {
  std::string out = "CLOSE " + b.id + " [";
  bool first = true;
  for (const auto& [name, value] : after.bindings()) {
    if (before.contains(name)) continue;
    if (!first) out += ",";
    first = false;
    out += name + "=" + pretty_print(value);
  }
  return out + "]";
}

int Tableau::close_candidates(
    const Branch& b, std::size_t idx, const Substitution& s,
    const std::function<int(const Substitution&, const std::string&)>& on) {
  std::vector<Term> fs = applied(b, s);
  const Term& f = fs[idx];

  auto attempt = [&](std::vector<Equation> eqs, const std::function<std::string(const Substitution&)>& note) {
    int verdict = 0;
    unify_each(UnifProblem{std::move(eqs), s}, bounds_, budget(), [&](const UnifSolution& sol) {
      if (!sol.flex_flex.empty() || !acceptable(sol.subst)) return true;
      verdict = on(sol.subst, note ? note(sol.subst) : std::string());
      return verdict == 0;
    });
    return verdict;
  };

  // Complementary pairs.
  for (std::size_t j = 0; j < idx; ++j) {
    const Term& g = fs[j];
    std::vector<Equation> eqs;
    if (is_app_of(f, logic::kNot, 1)) {
      eqs.push_back({f.arg(), g});
    } else if (is_app_of(g, logic::kNot, 1)) {
      eqs.push_back({f, g.arg()});
    } else {
      continue;
    }
    if (type_of(eqs[0].lhs) != type_of(eqs[0].rhs)) continue;
    if (int v = attempt(std::move(eqs), nullptr)) return v;
  }

  // Reflexivity.
  if (is_app_of(f, logic::kNot, 1) && positive_equation(f.arg())) {
    if (int v = attempt({{arg(f.arg(), 0), arg(f.arg(), 1)}}, nullptr)) return v;
  }

  // One rewrite step with a positive equation between a complementary pair
  // of atoms that differ in one argument.
  auto with_equation = [&](const Term& pos, const Term& negated, const Term& equation) -> int {
    Spine a = spine(pos), c = spine(negated);
    if (a.args.size() != c.args.size() || a.head.name() != c.head.name()) return 0;
    Term l = arg(equation, 0), r = arg(equation, 1);
    std::vector<Type> arg_types = a.head.type().args();
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (arg_types[i] != Type::ind()) continue;
      for (const auto& [from, to] : {std::pair{l, r}, std::pair{r, l}}) {
        std::vector<Equation> eqs;
        for (std::size_t k = 0; k < a.args.size(); ++k) {
          if (k != i) eqs.push_back({a.args[k], c.args[k]});
        }
        eqs.push_back({a.args[i], from});
        eqs.push_back({to, c.args[i]});
        auto note = [&, pos, negated, equation](const Substitution& sub) {
          return "RULE rewrite " + b.id + " " + pretty_print(sub.apply(pos)) + " to " +
                 pretty_print(sub.apply(negated)) + " by " + pretty_print(sub.apply(equation));
        };
        if (int v = attempt(std::move(eqs), note)) return v;
      }
    }
    return 0;
  };
  std::vector<std::size_t> equations;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (positive_equation(fs[j])) equations.push_back(j);
  }
  auto [atom, positive] = polarity(f);
  if (rigid_atom(atom)) {
    for (std::size_t j = 0; j < idx; ++j) {
      auto [other, other_positive] = polarity(fs[j]);
      if (other_positive == positive || !rigid_atom(other)) continue;
      for (std::size_t e : equations) {
        const Term& pos = positive ? atom : other;
        const Term& negated = positive ? other : atom;
        if (int v = with_equation(pos, negated, fs[e])) return v;
      }
    }
  } else if (positive_equation(f)) {
    for (std::size_t j = 0; j < idx; ++j) {
      auto [pos, pj] = polarity(fs[j]);
      if (!pj || !rigid_atom(pos)) continue;
      for (std::size_t k = 0; k < idx; ++k) {
        auto [negated, pk] = polarity(fs[k]);
        if (pk || !rigid_atom(negated)) continue;
        if (int v = with_equation(pos, negated, f)) return v;
      }
    }
  }
  return 0;
}

std::optional<Substitution> Tableau::try_close(const Branch& b, const Substitution& s) {
  std::optional<Substitution> found;
  for (std::size_t idx = 0; idx < b.formulas.size() && !found; ++idx) {
    close_candidates(b, idx, s, [&](const Substitution& sol, const std::string&) {
      found = sol;
      return 1;
    });
  }
  return found;
}

bool Tableau::add(Branch b, const std::vector<Term>& fs, std::size_t i, const Substitution& s,
                  const Cont& k, const char* label, const PendingPtr& pend) {
  if (i == fs.size()) return run(std::move(b), s, k, pend);
  std::size_t mark = trace_.size();
  Term f = s.apply(fs[i]);
  for (const auto& g : b.formulas) {
    if (alpha_equal(s.apply(g), f)) return add(std::move(b), fs, i + 1, s, k, label, pend);
  }
  b.formulas.push_back(f);
  b.expanded.push_back(false);
  if (label != nullptr) trace_.push_back(std::string("RULE ") + label + " " + b.id + " " + pretty_print(f));

  std::size_t idx = b.formulas.size() - 1;
  int verdict = close_candidates(b, idx, s, [&](const Substitution& sol, const std::string& note) {
    std::size_t before = trace_.size();
    if (!note.empty()) trace_.push_back(note);
    trace_.push_back(close_line(b, s, sol));
    if (k(sol)) return 1;
    trace_.resize(before);
    if (budget().exhausted()) return 2;
    // A closure that changes nothing the rest of the proof can see is as
    // general as any other closure of this branch.
    return rest_key(pend, sol, nullptr) == rest_key(pend, s, nullptr) ? 2 : 0;
  });
  if (verdict == 1) return true;
  if (verdict == 2 || budget().exhausted()) {
    trace_.resize(mark);
    return false;
  }
  if (add(std::move(b), fs, i + 1, s, k, label, pend)) return true;
  trace_.resize(mark);
  return false;
}

std::string Tableau::state_key(const Branch& b, const std::vector<Term>& extra,
                               const Substitution& s,
                               std::map<std::string, std::string>& names) const {
  std::string key;
  for (std::size_t i = 0; i < b.formulas.size(); ++i) {
    key += pretty_print(rename_metas(s.apply(b.formulas[i]), outer_, names));
    key += b.expanded[i] ? "!" : "";
    auto g = b.gamma_uses.find(i);
    if (g != b.gamma_uses.end()) key += "#" + std::to_string(g->second);
    key += b.rewritten.count(i) ? "=" : "";
    key += "\n";
  }
  for (const auto& f : extra) key += "+" + pretty_print(rename_metas(s.apply(f), outer_, names)) + "\n";
  return key;
}

std::string Tableau::rest_key(const PendingPtr& pend, const Substitution& s,
                              std::map<std::string, std::string>* shared) const {
  std::map<std::string, std::string> own;
  std::map<std::string, std::string>& names = shared != nullptr ? *shared : own;
  std::string key;
  for (const Pending* p = pend.get(); p != nullptr; p = p->next.get()) {
    key += "|" + state_key(p->branch, p->parts, s, names);
  }
  key += "|";
  for (const auto& [name, ty] : outer_types_) {
    if (s.contains(name)) {
      key += name + "=" + pretty_print(rename_metas(s.apply(Term::meta(name, ty)), outer_, names)) +
             ";";
    }
  }
  return key;
}

bool Tableau::run(Branch b, const Substitution& s, const Cont& k, const PendingPtr& pend) {
  if (budget().exhausted()) return false;
  return expand(std::move(b), s, k, pend);
}

bool Tableau::expand(Branch b, const Substitution& s, const Cont& k, const PendingPtr& pend) {
  std::size_t mark = trace_.size();
  auto fail = [&] {
    trace_.resize(mark);
    return false;
  };
  std::vector<Term> fs = applied(b, s);
  std::vector<Decomposition> ds;
  ds.reserve(fs.size());
  for (const auto& f : fs) ds.push_back(decompose(f));
  auto line = [&](const char* rule, const Term& f) {
    trace_.push_back(std::string("RULE ") + rule + " " + b.id + " " + pretty_print(f));
  };

  for (Rule rule : {Rule::Alpha, Rule::Delta, Rule::Beta}) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (b.expanded[i] || ds[i].rule != rule) continue;
      if (!budget().spend()) return fail();
      b.expanded[i] = true;
      if (rule == Rule::Alpha) {
        line("alpha", fs[i]);
        if (add(std::move(b), ds[i].left, 0, s, k, nullptr, pend)) return true;
        return fail();
      }
      if (rule == Rule::Delta) {
        line("delta", fs[i]);
        Term inst = instance(ds[i], skolem_for(fs[i], ds[i].scope->type()));
        if (add(std::move(b), {inst}, 0, s, k, nullptr, pend)) return true;
        return fail();
      }
      line("beta", fs[i]);
      Branch right = b;
      right.id = b.id + ".2";
      b.id = b.id + ".1";
      auto node = std::make_shared<const Pending>(Pending{std::move(right), ds[i].right, pend});
      Cont then_right = [this, node, &k](const Substitution& s1) {
        return add(node->branch, node->parts, 0, s1, k, nullptr, node->next);
      };
      if (add(std::move(b), ds[i].left, 0, s, then_right, nullptr, node)) return true;
      return fail();
    }
  }

  // Ground rewriting, one pass per equation.
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!positive_equation(fs[i]) || b.rewritten.count(i) || has_metas(fs[i])) continue;
    b.rewritten.insert(i);
    Term l = arg(fs[i], 0), r = arg(fs[i], 1);
    if (alpha_equal(l, r)) continue;
    auto [from, to] = orient(l, r);
    std::vector<Term> fresh;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (j == i || ds[j].rule != Rule::Literal || !occurs(fs[j], from)) continue;
      Term g = normalize(replace(fs[j], from, to));
      bool known = false;
      for (const auto& h : fs) known = known || alpha_equal(h, g);
      for (const auto& h : fresh) known = known || alpha_equal(h, g);
      if (!known) fresh.push_back(g);
    }
    if (fresh.empty()) continue;
    if (!budget().spend()) return fail();
    if (add(std::move(b), fresh, 0, s, k, "rewrite", pend)) return true;
    return fail();
  }

  // Gamma: least-used universal, latest first on ties.
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (ds[i].rule != Rule::Gamma) continue;
    if (!pick || b.gamma_uses[i] <= b.gamma_uses[*pick]) pick = i;
  }
  if (!pick) return fail();
  int& uses = b.gamma_uses[*pick];
  if (uses >= multiplicity_) {
    hit_cap_ = true;
    return fail();
  }
  if (!budget().spend()) return fail();
  ++uses;
  line("gamma", fs[*pick]);
  // A block of universals is instantiated in one step.
  Term inst = instance(ds[*pick], fresh_gamma_var(ds[*pick].scope->type()));
  for (Decomposition d = decompose(inst); d.rule == Rule::Gamma; d = decompose(inst)) {
    inst = instance(d, fresh_gamma_var(d.scope->type()));
  }
  if (add(std::move(b), {inst}, 0, s, k, nullptr, pend)) return true;
  return fail();
}

bool Tableau::refute(const std::vector<std::pair<std::string, std::vector<Term>>>& seeds,
                     const std::vector<Term>& hypotheses, const Substitution& base,
                     const Cont& k) {
  outer_.clear();
  auto note = [&](const Term& t) {
    Term applied_t = base.apply(t);
    note_names(applied_t);
    for (const auto& m : free_metavars(applied_t)) outer_.insert(m);
  };
  for (const auto& h : hypotheses) note(h);
  for (const auto& [id, fs] : seeds) {
    for (const auto& f : fs) note(f);
  }
  for (const auto& [name, value] : base.bindings()) {
    outer_.insert(name);
    names_.insert(name);
    note(value);
  }

  outer_types_.clear();
  for (const auto& h : hypotheses) outer_types_.merge(metavar_types(base.apply(h)));
  for (const auto& [id, fs] : seeds) {
    for (const auto& f : fs) outer_types_.merge(metavar_types(base.apply(f)));
  }
  for (const auto& [name, value] : base.bindings()) {
    outer_types_.emplace(name, type_of(value));
    outer_types_.merge(metavar_types(value));
  }

  std::vector<Branch> starts(seeds.size());
  std::vector<std::vector<Term>> parts(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    starts[i].id = seeds[i].first;
    parts[i] = hypotheses;
    parts[i].insert(parts[i].end(), seeds[i].second.begin(), seeds[i].second.end());
  }
  // pending[i] lists the seeds after i; after[i] runs them and then k.
  std::vector<PendingPtr> pending(seeds.size());
  for (std::size_t i = seeds.size(); i-- > 1;) {
    pending[i - 1] = std::make_shared<const Pending>(Pending{starts[i], parts[i], pending[i]});
  }
  std::vector<Cont> after(seeds.size());
  for (std::size_t i = seeds.size(); i-- > 0;) {
    if (i + 1 == seeds.size()) {
      after[i] = k;
      continue;
    }
    after[i] = [this, &after, &starts, &parts, &pending, i](const Substitution& s) {
      return add(starts[i + 1], parts[i + 1], 0, s, after[i + 1], nullptr, pending[i + 1]);
    };
  }

  // A seed branch with a finite model never closes.
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    std::vector<Term> closed;
    for (const auto& f : parts[i]) closed.push_back(normalize(base.apply(f)));
    if (small_model_exists(closed, kModelDomain)) {
      reset();
      return false;
    }
  }

  for (int m = 1; m <= bounds_.gamma_multiplicity; ++m) {
    reset();
    multiplicity_ = m;
    hit_cap_ = false;
    if (seeds.empty() ? k(base) : add(starts[0], parts[0], 0, base, after[0], nullptr, pending[0])) {
      return true;
    }
    if (budget().exhausted() || !hit_cap_) break;
  }
  trace_.clear();
  return false;
}

Tableau init_refutation(const Term& theorem, const std::vector<Term>& axioms,
                        const SearchBounds& bounds) {
  Tableau t(bounds);
  Branch root;
  auto push = [&](const Term& f) {
    if (type_of(f) != Type::prop()) {
      throw Error(ErrorCode::NotProp, "not a formula: " + pretty_print(f));
    }
    root.formulas.push_back(normalize(f));
    root.expanded.push_back(false);
  };
  for (const auto& a : axioms) push(a);
  push(logic::not_(theorem));
  t.set_root(std::move(root));
  return t;
}

ProofResult prove(const Term& theorem, const std::vector<Term>& axioms,
                  const SearchBounds& bounds, NodeBudget* budget) {
  for (const auto& f : axioms) {
    if (type_of(f) != Type::prop()) throw Error(ErrorCode::NotProp, "axiom is not a formula");
  }
  if (type_of(theorem) != Type::prop()) {
    throw Error(ErrorCode::NotProp, "theorem is not a formula");
  }
  Tableau t(bounds, budget);
  std::vector<Term> hyps;
  for (const auto& a : axioms) hyps.push_back(normalize(a));
  ProofResult result;
  bool ok = t.refute({{"0", {normalize(logic::not_(theorem))}}}, hyps, {},
                     [&](const Substitution& s) {
                       result.subst = s;
                       return true;
                     });
  if (ok) {
    result.status = ProofResult::Status::Proved;
    result.reason = ProofResult::Reason::None;
    result.trace = t.trace();
  } else {
    result.reason = t.exhausted() ? ProofResult::Reason::Exhausted
                                  : ProofResult::Reason::OpenBranch;
  }
  return result;
}

}  // namespace houe
