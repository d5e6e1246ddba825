#include "houe/houe.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "houe/countermodel.hpp"
#include "houe/error.hpp"
#include "houe/hou.hpp"
#include "houe/parser.hpp"
#include "houe/tableau.hpp"

namespace houe {

std::pair<std::vector<Term>, std::vector<Term>> split_equation(const Equation& eq) {
  if (!type_of(eq.lhs).is_prop() || !type_of(eq.rhs).is_prop()) {
    throw Error(ErrorCode::NotProp, "equivalence needs formulas on both sides: " +
                                        pretty_print(eq.lhs) + " = " + pretty_print(eq.rhs));
  }
  return {{eq.lhs, logic::not_(eq.rhs)}, {eq.rhs, logic::not_(eq.lhs)}};
}

namespace {

constexpr std::size_t kMaxGroundTerms = 4096;
constexpr std::size_t kMaxInstances = 512;
constexpr int kModelDomain = 3;

std::vector<Term> generate(const Type& ty, Context ctx, int depth,
                           const std::vector<Term>& heads);

// Bodies of base type `base` under `ctx`: constants first, then bound
// variables from the innermost binder outwards.
std::vector<Term> bodies(const Type& base, const Context& ctx, int depth,
                         const std::vector<Term>& heads) {
  std::vector<Term> out;
  auto extend = [&](const Term& head, const Type& ty) {
    if (!(ty.result() == base)) return;
    std::vector<Type> args = ty.args();
    if (args.empty()) {
      out.push_back(head);
      return;
    }
    if (depth <= 1) return;
    std::vector<std::vector<Term>> choices;
    for (const auto& a : args) {
      choices.push_back(generate(a, ctx, depth - 1, heads));
      if (choices.back().empty()) return;
    }
    std::vector<std::size_t> pick(args.size(), 0);
    while (out.size() < kMaxGroundTerms) {
      std::vector<Term> xs;
      for (std::size_t i = 0; i < args.size(); ++i) xs.push_back(choices[i][pick[i]]);
      out.push_back(Term::apply(head, xs));
      std::size_t i = args.size();
      while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  };
  for (const auto& c : heads) extend(c, c.type());
  for (std::size_t k = 0; k < ctx.size(); ++k) extend(Term::bound(k), ctx[ctx.size() - 1 - k]);
  if (out.size() > kMaxGroundTerms) out.erase(out.begin() + kMaxGroundTerms, out.end());
  return out;
}

std::vector<Term> generate(const Type& ty, Context ctx, int depth,
                           const std::vector<Term>& heads) {
  std::vector<Type> binders = ty.args();
  for (const auto& b : binders) ctx.push_back(b);
  std::vector<std::string> hints(binders.size(), "x");
  std::vector<Term> out;
  for (auto& body : bodies(ty.result(), ctx, depth, heads)) {
    out.push_back(wrap_lambdas(binders, hints, body));
  }
  return out;
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

class Solver {
 public:
  Solver(const HoueProblem& p, NodeBudget& budget) : p_(p), budget_(budget) {
    inner_ = p.bounds;
    inner_.max_solutions = 1 << 20;
    for (const auto& eq : p.equations) {
      for (const Term* t : {&eq.lhs, &eq.rhs}) {
        for (const auto& [n, ty] : metavar_types(*t)) types_.emplace(n, ty);
        if (p.metas.empty()) {
          for (const auto& n : metavars_in_order(*t)) {
            if (std::find(metas_.begin(), metas_.end(), n) == metas_.end()) metas_.push_back(n);
          }
        }
      }
    }
    if (!p.metas.empty()) metas_ = p.metas;
    meta_set_ = as_set(metas_);
    for (const auto& c : p.constants) {
      if (!logic::is_logical(c.name()) && !is_skolem_name(c.name())) heads_.push_back(c);
    }
  }

  HoueResult run() {
    syntactic();
    if (result_.solutions.empty() && !budget_.exhausted()) equivalence();
    result_.exhausted = budget_.exhausted();
    return result_;
  }

 private:
  bool full() const {
    return static_cast<int>(result_.solutions.size()) >= p_.bounds.max_solutions;
  }

  bool admissible(const Substitution& s) const {
    return !p_.filter || p_.filter(s.restricted(meta_set_));
  }

  void syntactic() {
    UnifProblem up{p_.equations, {}};
    unify_each(up, inner_, budget_, [&](const UnifSolution& sol) {
      if (admissible(sol.subst)) {
        finish(sol.subst, sol.flex_flex,
               std::vector<Justification>(p_.equations.size()));
      }
      return !full();
    });
  }

  void equivalence() {
    std::vector<std::size_t> props, others;
    for (std::size_t i = 0; i < p_.equations.size(); ++i) {
      (type_of(p_.equations[i].lhs).is_prop() ? props : others).push_back(i);
    }
    if (props.size() < 2) return;
    auto size = [&](std::size_t i) {
      return term_size(p_.equations[i].lhs) + term_size(p_.equations[i].rhs);
    };
    std::vector<std::size_t> anchors = props;
    std::stable_sort(anchors.begin(), anchors.end(),
                     [&](std::size_t a, std::size_t b) { return size(a) < size(b); });

    for (std::size_t a : anchors) {
      if (full() || budget_.exhausted()) return;
      UnifProblem up;
      for (std::size_t i : others) up.equations.push_back(p_.equations[i]);
      up.equations.push_back(p_.equations[a]);
      unify_each(up, inner_, budget_, [&](const UnifSolution& sol) {
        if (admissible(sol.subst)) prove_rest(a, props, sol);
        return !full() && !budget_.exhausted();
      });
    }
  }

  void prove_rest(std::size_t anchor, const std::vector<std::size_t>& props,
                  const UnifSolution& sol) {
    std::vector<std::pair<std::string, std::vector<Term>>> seeds;
    std::vector<std::string> head;
    for (std::size_t i : props) {
      if (i == anchor) continue;
      Equation eq{sol.subst.apply(p_.equations[i].lhs), sol.subst.apply(p_.equations[i].rhs)};
      auto [l, r] = split_equation(eq);
      std::string k = std::to_string(i + 1);
      head.push_back("RULE split " + k + " " + pretty_print(eq.lhs) + " = " +
                     pretty_print(eq.rhs));
      seeds.push_back({k + ".1", l});
      seeds.push_back({k + ".2", r});
    }
    if (refuted_by_models(seeds, sol.subst)) return;
    Tableau tab(p_.bounds, &budget_);
    tab.refute(seeds, p_.hypotheses, sol.subst, [&](const Substitution& s) {
      std::vector<Equation> residual;
      for (const auto& eq : sol.flex_flex) residual.push_back({s.apply(eq.lhs), s.apply(eq.rhs)});
      std::vector<Justification> just(p_.equations.size());
      std::vector<std::string> trace = head;
      trace.insert(trace.end(), tab.trace().begin(), tab.trace().end());
      for (std::size_t i : props) {
        if (i == anchor) continue;
        just[i] = {Justification::Kind::Equivalence, trace};
      }
      return finish(s, residual, std::move(just));
    });
  }

  // True when every grounding of the metavariables left in the seeds gives
  // some seed branch a small model. Outer metavariables never take Skolem
  // terms, so a proof would have to succeed on one of these instances.
  bool refuted_by_models(const std::vector<std::pair<std::string, std::vector<Term>>>& seeds,
                         const Substitution& sub) {
    std::vector<std::vector<Term>> branches;
    std::map<std::string, Type> tys;
    for (const auto& [id, fs] : seeds) {
      std::vector<Term> b;
      for (const auto& h : p_.hypotheses) b.push_back(sub.apply(h));
      b.insert(b.end(), fs.begin(), fs.end());
      for (const auto& f : b) tys.merge(metavar_types(f));
      branches.push_back(std::move(b));
    }
    if (tys.empty()) return false;
    std::vector<std::string> names;
    std::vector<const std::vector<Term>*> choices;
    std::size_t total = 1;
    for (const auto& [n, ty] : tys) {
      names.push_back(n);
      choices.push_back(&candidates(ty));
      total *= choices.back()->size();
      if (total == 0 || total > kMaxInstances) return false;
    }
    std::vector<std::size_t> pick(names.size(), 0);
    for (std::size_t done = 0; done < total; ++done) {
      Substitution g;
      for (std::size_t i = 0; i < names.size(); ++i) g.bind(names[i], (*choices[i])[pick[i]]);
      bool open = false;
      for (const auto& b : branches) {
        std::vector<Term> closed;
        for (const auto& f : b) closed.push_back(normalize(g.apply(f)));
        if (small_model_exists(closed, kModelDomain)) {
          open = true;
          break;
        }
      }
      if (!open) return false;
      for (std::size_t i = names.size(); i-- > 0 && ++pick[i] == choices[i]->size();) pick[i] = 0;
    }
    return true;
  }

  const std::vector<Term>& candidates(const Type& ty) {
    std::string key = ty.str();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto terms = generate(ty, {}, p_.bounds.ground_depth, heads_);
    return cache_.emplace(key, std::move(terms)).first->second;
  }

  // Replaces every metavariable still free in the reported bindings or in
  // the residual pairs by a closed term, taking the first assignment that
  // satisfies the residual pairs.
  std::optional<Substitution> ground(const Substitution& s,
                                     const std::vector<Equation>& residual) {
    std::vector<std::string> open;
    std::map<std::string, Type> tys = types_;
    auto note = [&](const Term& t) {
      for (const auto& [n, ty] : metavar_types(t)) tys.emplace(n, ty);
      for (const auto& n : metavars_in_order(t)) {
        if (std::find(open.begin(), open.end(), n) == open.end()) open.push_back(n);
      }
    };
    for (const auto& m : metas_) {
      if (const Term* v = s.find(m)) {
        note(s.apply(*v));
      } else if (tys.count(m) && std::find(open.begin(), open.end(), m) == open.end()) {
        open.push_back(m);
      }
    }
    for (const auto& eq : residual) {
      note(s.apply(eq.lhs));
      note(s.apply(eq.rhs));
    }
    Substitution cur = s;
    if (assign(open, 0, cur, tys, residual)) return cur;
    return std::nullopt;
  }

  bool satisfied(const Substitution& s, const std::vector<Equation>& residual) const {
    for (const auto& eq : residual) {
      if (!alpha_equal(s.apply(eq.lhs), s.apply(eq.rhs))) return false;
    }
    return true;
  }

  bool assign(const std::vector<std::string>& open, std::size_t i, Substitution& s,
              const std::map<std::string, Type>& tys, const std::vector<Equation>& residual) {
    if (i == open.size()) return satisfied(s, residual);
    if (s.contains(open[i])) return assign(open, i + 1, s, tys, residual);
    for (const auto& c : candidates(tys.at(open[i]))) {
      if (!budget_.spend()) return false;
      Substitution next = s;
      next.bind(open[i], c);
      if (assign(open, i + 1, next, tys, residual)) {
        s = next;
        return true;
      }
    }
    return false;
  }

  // True when the candidate is settled (kept or a duplicate).
  bool finish(const Substitution& s, const std::vector<Equation>& residual,
              std::vector<Justification> just) {
    auto g = ground(s, residual);
    if (!g) return false;
    Substitution out;
    for (const auto& m : metas_) {
      if (const Term* v = g->find(m)) out.bind(m, g->apply(*v));
    }
    if (p_.filter && !p_.filter(out)) return false;
    if (!seen_.insert(pretty_print(out)).second) return true;
    if (full()) return true;
    result_.solutions.push_back({std::move(out), std::move(just)});
    return true;
  }

  const HoueProblem& p_;
  NodeBudget& budget_;
  SearchBounds inner_;
  std::vector<std::string> metas_;
  std::set<std::string> meta_set_;
  std::map<std::string, Type> types_;
  std::vector<Term> heads_;
  std::map<std::string, std::vector<Term>> cache_;
  std::set<std::string> seen_;
  HoueResult result_;
};

}  // namespace

std::vector<Term> ground_terms(const Type& ty, const std::vector<Term>& constants, int depth) {
  std::vector<Term> heads;
  for (const auto& c : constants) {
    if (!logic::is_logical(c.name()) && !is_skolem_name(c.name())) heads.push_back(c);
  }
  return generate(ty, {}, depth, heads);
}

HoueResult solve(const HoueProblem& p, NodeBudget* budget) {
  for (const auto& eq : p.equations) {
    if (!(type_of(eq.lhs) == type_of(eq.rhs))) {
      throw Error(ErrorCode::IllTyped, "equation sides differ in type: " + pretty_print(eq.lhs) +
                                           " = " + pretty_print(eq.rhs));
    }
  }
  NodeBudget own(p.bounds.node_budget);
  Solver s(p, budget != nullptr ? *budget : own);
  return s.run();
}

}  // namespace houe
