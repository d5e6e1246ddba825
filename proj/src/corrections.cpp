#include "houe/corrections.hpp"

#include <algorithm>
#include <set>

#include "houe/error.hpp"
#include "houe/tableau.hpp"

namespace houe {
namespace {

bool mentions(const Term& t, const Term& element) {
  if (alpha_equal(t, element)) return true;
  switch (t.kind()) {
    case Term::Kind::Lam:
      return mentions(t.body(), shift(element, 1));
    case Term::Kind::App:
      return mentions(t.fn(), element) || mentions(t.arg(), element);
    default:
      return false;
  }
}

int rank(Classification c) {
  switch (c) {
    case Classification::Strict: return 0;
    case Classification::Sloppy: return 1;
    default: return 2;
  }
}

std::string fresh_anaphor(const CorrectionProblem& p) {
  std::set<std::string> taken;
  for (const Term* t : {&p.ssem, &p.tsem}) {
    for (const auto& m : free_metavars(*t)) taken.insert(m);
  }
  for (const auto& c : p.constants) taken.insert(c.name());
  std::string name = p.anaphor;
  for (int i = 1; taken.count(name); ++i) name = p.anaphor + std::to_string(i);
  return name;
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Strict: return "strict";
    case Classification::Sloppy: return "sloppy";
    default: return "neutral";
  }
}

std::string_view to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::WellFormed: return "well-formed";
    case Verdict::Kind::IllFormed: return "ill-formed";
    default: return "resource-limit";
  }
}

HoueProblem build_equations(const CorrectionProblem& p) {
  if (p.parallel.empty()) throw Error(ErrorCode::ArityMismatch, "no parallel elements");
  std::vector<Type> args;
  std::vector<Term> sps, tps;
  for (const auto& pair : p.parallel) {
    Type ty = type_of(pair.source);
    if (ty != type_of(pair.target)) {
      throw Error(ErrorCode::ArityMismatch, "parallel elements " + pretty_print(pair.source) +
                                                " and " + pretty_print(pair.target) +
                                                " differ in type");
    }
    args.push_back(ty);
    sps.push_back(pair.source);
    tps.push_back(pair.target);
  }
  Term ssem = p.ssem, tsem = p.tsem;
  for (const auto& path : p.source_marks) ssem = mark_primary(ssem, path);
  for (const auto& path : p.target_marks) tsem = mark_primary(tsem, path);

  std::string name = fresh_anaphor(p);
  Term an = Term::meta(name, Type::curried(args, Type::prop()));
  HoueProblem h;
  h.equations = {{normalize(Term::apply(an, sps)), normalize(ssem)},
                 {normalize(Term::apply(an, tps)), normalize(tsem)}};
  h.hypotheses = p.axioms;
  h.bounds = p.bounds;
  h.constants = p.constants;
  h.metas = {name};
  for (const auto& m : p.pronouns) h.metas.push_back(m);
  h.filter = [name](const Substitution& s) { return por_filter(s, name); };
  return h;
}

Term paycheck_target(const std::string& property) {
  Signature sig;
  sig.add_meta(property, Type::arrow(Type::ind(), Type::prop()));
  ParseOptions opts;
  opts.unique_restrictor = Term::meta(property, Type::arrow(Type::ind(), Type::prop()));
  return normalize(parse_term(
      "lam Q:e -> t. exists x:e. " + property + "(x) & unique(x) & Q(x)", sig, opts));
}

bool por_filter(const Substitution& candidate, const std::string& anaphor) {
  const Term* v = candidate.find(anaphor);
  return v == nullptr || !has_primary(normalize(*v));
}

Classification classify(const Reading& reading, const CorrectionProblem& p) {
  if (reading.pronouns.empty()) return Classification::Neutral;
  bool strict = true, sloppy = false;
  for (const auto& [name, value] : reading.pronouns) {
    bool src = false, tgt = false;
    for (const auto& pair : p.parallel) {
      src = src || mentions(value, strip_colors(pair.source));
      tgt = tgt || mentions(value, strip_colors(pair.target));
    }
    strict = strict && src && !tgt;
    sloppy = sloppy || tgt;
  }
  if (sloppy) return Classification::Sloppy;
  return strict ? Classification::Strict : Classification::Neutral;
}

Verdict analyze(const CorrectionProblem& p) {
  HoueProblem h = build_equations(p);
  const std::string name = h.metas.front();
  NodeBudget budget(p.bounds.node_budget);
  HoueResult r = solve(h, &budget);

  Verdict v;
  std::set<std::string> seen;
  for (auto& sol : r.solutions) {
    const Term* an = sol.subst.find(name);
    if (an == nullptr) continue;
    Reading reading{normalize(*an), {}, Classification::Neutral, sol.justification};
    for (const auto& m : p.pronouns) {
      if (const Term* t = sol.subst.find(m)) reading.pronouns.emplace(m, normalize(*t));
    }
    // Readings whose correction contradicts the axioms are dropped.
    if (!p.axioms.empty()) {
      Term target = normalize(sol.subst.apply(h.equations[1].rhs));
      if (!has_metas(target)) {
        ProofResult pr = prove(logic::not_(target), p.axioms, p.bounds, &budget);
        if (pr.proved()) continue;
      }
    }
    std::string key = pretty_print(reading.anaphor);
    for (const auto& [m, t] : reading.pronouns) key += ";" + m + ":=" + pretty_print(t);
    if (!seen.insert(key).second) continue;
    reading.classification = classify(reading, p);
    v.readings.push_back(std::move(reading));
  }
  std::stable_sort(v.readings.begin(), v.readings.end(), [](const Reading& a, const Reading& b) {
    return rank(a.classification) < rank(b.classification);
  });
  if (!v.readings.empty()) {
    v.kind = Verdict::Kind::WellFormed;
  } else {
    v.kind = r.exhausted || budget.exhausted() ? Verdict::Kind::ResourceLimit
                                               : Verdict::Kind::IllFormed;
  }
  return v;
}

CorrectionProblem correction_problem(const ProblemFile& file, const SearchBounds& bounds) {
  if (file.equations.size() != 2) {
    throw Error(ErrorCode::MissingEquations, "correction problems need exactly two equations");
  }
  CorrectionProblem p{file.equations[0].rhs, file.equations[1].rhs, file.parallel, {}, {},
                      file.axioms, {}, {}, bounds};
  for (const auto& m : file.marks) {
    if (m.side != Side::Rhs) continue;
    (m.equation == 1 ? p.source_marks : p.target_marks).push_back(m.path);
  }
  Term head = spine(strip_lambdas(file.equations[0].lhs)).head;
  if (head.is_meta()) p.anaphor = head.name();
  for (const auto& [n, ty] : file.signature.metas()) {
    if (n != p.anaphor) p.pronouns.push_back(n);
  }
  for (const auto& [n, ty] : file.signature.constants()) {
    p.constants.push_back(file.signature.make_constant(n));
  }
  return p;
}

}  // namespace houe
