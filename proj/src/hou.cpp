#include "houe/hou.hpp"

#include <map>
#include <set>

#include "houe/parser.hpp"

namespace houe {
namespace {

struct Split {
  std::vector<Type> binders;
  std::vector<std::string> hints;
  Term body;
  Spine sp;
};

Split split(const Term& t) {
  std::vector<Type> binders;
  std::vector<std::string> hints;
  Term body = strip_lambdas(t, &binders, &hints);
  Spine sp = spine(body);
  return Split{std::move(binders), std::move(hints), body, std::move(sp)};
}

bool rigid(const Spine& sp) { return !sp.head.is_meta(); }

bool same_head(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_bound()) return a.index() == b.index();
  return a.name() == b.name();
}

// A flex side with no arguments and an opposite side it can be bound to
// outright: no loose bound variables and no occurrence of the metavariable.
std::optional<std::pair<std::string, Term>> direct_binding(const Split& flex,
                                                           const Split& other) {
  if (!flex.sp.head.is_meta() || !flex.sp.args.empty()) return std::nullopt;
  if (has_loose_bound(other.body)) return std::nullopt;
  const std::string& name = flex.sp.head.name();
  if (contains_meta(other.body, name)) return std::nullopt;
  return std::make_pair(name, other.body);
}

Term rename_metas(const Term& t, const std::map<std::string, std::string>& names) {
  switch (t.kind()) {
    case Term::Kind::Meta: {
      auto it = names.find(t.name());
      return it == names.end() ? t : Term::meta(it->second, t.type());
    }
    case Term::Kind::Lam:
      return Term::lam(t.name(), t.type(), rename_metas(t.body(), names));
    case Term::Kind::App:
      return Term::app(rename_metas(t.fn(), names), rename_metas(t.arg(), names));
    default:
      return t;
  }
}

bool is_search_meta(const std::string& name) {
  return name.rfind(kHouMetaPrefix, 0) == 0;
}

unsigned long search_index(const std::string& name) {
  if (!is_search_meta(name)) return 0;
  try {
    return std::stoul(name.substr(2));
  } catch (...) {
    return 0;
  }
}

class Search {
 public:
  Search(const SearchBounds& bounds, NodeBudget& budget, const UnifSink& sink,
         std::set<std::string> visible, unsigned long first_fresh)
      : bounds_(bounds), budget_(budget), sink_(sink), visible_(std::move(visible)),
        first_fresh_(first_fresh) {}

  void run(const UnifProblem& p) {
    for (int limit = 1; limit <= bounds_.hou_depth && !stopped_; ++limit) {
      limit_ = limit;
      counter_ = first_fresh_;
      cut_ = false;
      std::map<std::string, int> levels;
      solve(p, levels);
      // Nothing was held back by the level limit: deeper passes repeat this one.
      if (!cut_) break;
    }
  }

  bool emitted() const { return emitted_ > 0; }

 private:
  void solve(const UnifProblem& in, std::map<std::string, int> levels) {
    if (stopped_) return;
    auto simplified = simplify(in);
    if (!simplified) return;
    UnifProblem p = std::move(*simplified);

    // Bare metavariables against closed terms bind without branching.
    for (const auto& eq : p.equations) {
      Split l = split(eq.lhs), r = split(eq.rhs);
      auto direct = direct_binding(l, r);
      if (!direct) direct = direct_binding(r, l);
      if (!direct) continue;
      if (level(levels, direct->first) >= limit_) {
        cut_ = true;
        return;
      }
      if (!spend()) return;
      p.subst.bind(direct->first, direct->second);
      solve(p, std::move(levels));
      return;
    }

    const Equation* pick = nullptr;
    for (const auto& eq : p.equations) {
      if (!rigid(spine(strip_lambdas(eq.rhs)))) continue;
      pick = &eq;
      break;
    }
    if (pick == nullptr) {
      emit(p);
      return;
    }

    Split flex = split(pick->lhs), rhs = split(pick->rhs);
    const std::string& name = flex.sp.head.name();
    int lvl = level(levels, name);
    if (lvl >= limit_) {
      cut_ = true;
      return;
    }
    bool rigid_has_metas = has_metas(pick->rhs);

    auto bindings = general_bindings(flex.sp.head.type(), rhs.sp.head,
                                     [this] { return fresh(); });
    for (std::size_t i = 0; i < bindings.size() && !stopped_; ++i) {
      if (!spend()) return;
      const Term& b = bindings[i];
      bool projection = !(rhs.sp.head.is_const() && i == 0);
      std::map<std::string, int> next = levels;
      for (const auto& m : free_metavars(b)) {
        next[m] = (projection || rigid_has_metas) ? lvl + 1 : lvl;
      }
      UnifProblem child = p;
      child.subst.bind(name, b);
      solve(child, std::move(next));
    }
  }

  int level(const std::map<std::string, int>& levels, const std::string& name) const {
    auto it = levels.find(name);
    return it == levels.end() ? 0 : it->second;
  }

  bool spend() {
    if (budget_.spend()) return true;
    stopped_ = true;
    return false;
  }

  std::string fresh() { return kHouMetaPrefix + std::to_string(counter_++); }

  void emit(const UnifProblem& p) {
    UnifSolution sol{p.subst.restricted(visible_), p.equations};
    std::string key = solution_key(sol);
    if (!seen_.insert(key).second) return;
    ++emitted_;
    if (!sink_(sol) || emitted_ >= bounds_.max_solutions) stopped_ = true;
  }

  const SearchBounds& bounds_;
  NodeBudget& budget_;
  const UnifSink& sink_;
  std::set<std::string> visible_;
  unsigned long first_fresh_;
  unsigned long counter_ = 0;
  int limit_ = 1;
  int emitted_ = 0;
  bool stopped_ = false;
  bool cut_ = false;
  std::set<std::string> seen_;
};

}  // namespace

std::optional<UnifProblem> simplify(const UnifProblem& p) {
  UnifProblem out;
  out.subst = p.subst;
  std::vector<Equation> work;
  for (const auto& eq : p.equations) {
    work.push_back({p.subst.apply(eq.lhs), p.subst.apply(eq.rhs)});
  }
  // Depth-first decomposition keeps argument pairs in left-to-right order.
  std::vector<Equation> stack(work.rbegin(), work.rend());
  while (!stack.empty()) {
    Equation eq = stack.back();
    stack.pop_back();
    if (alpha_equal(eq.lhs, eq.rhs)) continue;
    Split l = split(eq.lhs), r = split(eq.rhs);
    if (l.binders.size() != r.binders.size()) return std::nullopt;
    bool lr = rigid(l.sp), rr = rigid(r.sp);
    if (lr && rr) {
      if (!same_head(l.sp.head, r.sp.head) || l.sp.args.size() != r.sp.args.size()) {
        return std::nullopt;
      }
      for (std::size_t i = l.sp.args.size(); i-- > 0;) {
        stack.push_back({wrap_lambdas(l.binders, l.hints, l.sp.args[i]),
                         wrap_lambdas(l.binders, l.hints, r.sp.args[i])});
      }
      continue;
    }
    if (lr) std::swap(eq.lhs, eq.rhs);
    out.equations.push_back(eq);
  }
  return out;
}

std::vector<Term> general_bindings(const Type& mv_type, const Term& rigid_head,
                                   const std::function<std::string()>& fresh) {
  std::vector<Type> params = mv_type.args();
  Type result = mv_type.result();
  std::size_t n = params.size();
  std::vector<std::string> hints(n, "x");

  // h(H1(x..), ..., Hk(x..)) under the binders of the metavariable.
  auto build = [&](const Term& head, const std::vector<Type>& head_args) {
    std::vector<Term> args;
    for (const auto& a : head_args) {
      Term h = Term::meta(fresh(), Type::curried(params, a));
      std::vector<Term> xs;
      for (std::size_t i = 0; i < n; ++i) xs.push_back(Term::bound(n - 1 - i));
      args.push_back(Term::apply(h, xs));
    }
    return normalize(wrap_lambdas(params, hints, Term::apply(head, args)));
  };

  std::vector<Term> out;
  if (rigid_head.is_const()) {
    out.push_back(build(rigid_head, rigid_head.type().args()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (params[i].result() != result) continue;
    out.push_back(build(Term::bound(n - 1 - i), params[i].args()));
  }
  return out;
}

UnifStatus unify_each(const UnifProblem& p, const SearchBounds& bounds,
                      NodeBudget& budget, const UnifSink& sink) {
  std::set<std::string> visible;
  unsigned long first = 1;
  auto note = [&](const Term& t) {
    for (const auto& m : free_metavars(t)) {
      visible.insert(m);
      first = std::max(first, search_index(m) + 1);
    }
  };
  for (const auto& eq : p.equations) {
    note(eq.lhs);
    note(eq.rhs);
  }
  for (const auto& [name, value] : p.subst.bindings()) {
    visible.insert(name);
    first = std::max(first, search_index(name) + 1);
    for (const auto& m : free_metavars(value)) first = std::max(first, search_index(m) + 1);
  }
  // Only metavariables of the problem are reported, not search artefacts.
  std::set<std::string> reported;
  for (const auto& v : visible) {
    if (!is_search_meta(v) || p.subst.contains(v)) reported.insert(v);
  }
  for (const auto& eq : p.equations) {
    for (const auto& m : free_metavars(eq.lhs)) reported.insert(m);
    for (const auto& m : free_metavars(eq.rhs)) reported.insert(m);
  }

  Search search(bounds, budget, sink, reported, first);
  search.run(p);
  if (budget.exhausted()) return UnifStatus::Exhausted;
  return search.emitted() ? UnifStatus::Solved : UnifStatus::Failed;
}

UnifResult unify(const UnifProblem& p, const SearchBounds& bounds, NodeBudget* budget) {
  NodeBudget local(bounds.node_budget);
  NodeBudget& b = budget != nullptr ? *budget : local;
  UnifResult result;
  unify_each(p, bounds, b, [&](const UnifSolution& s) {
    result.solutions.push_back(s);
    return true;
  });
  result.exhausted = b.exhausted();
  return result;
}

std::string solution_key(const UnifSolution& sol) {
  std::map<std::string, std::string> names;
  auto collect = [&](const Term& t) {
    for (const auto& m : metavars_in_order(t)) {
      if (is_search_meta(m) && !names.count(m)) {
        names[m] = "_K" + std::to_string(names.size() + 1);
      }
    }
  };
  for (const auto& [name, value] : sol.subst.bindings()) collect(value);
  for (const auto& eq : sol.flex_flex) {
    collect(eq.lhs);
    collect(eq.rhs);
  }
  std::string key;
  for (const auto& [name, value] : sol.subst.bindings()) {
    key += name + ":=" + pretty_print(rename_metas(value, names)) + ";";
  }
  for (const auto& eq : sol.flex_flex) {
    key += "|" + pretty_print(rename_metas(eq.lhs, names)) + "=" +
           pretty_print(rename_metas(eq.rhs, names));
  }
  return key;
}

}  // namespace houe
