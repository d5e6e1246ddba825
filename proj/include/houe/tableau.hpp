#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "houe/bounds.hpp"
#include "houe/lambda.hpp"

namespace houe {

/// How a formula is analysed, negation being pushed one step at a time.
enum class Rule { Alpha, Beta, Gamma, Delta, Literal };

struct Decomposition {
  Rule rule = Rule::Literal;
  /// Alpha: all components. Beta: left branch.
  std::vector<Term> left;
  /// Beta: right branch.
  std::vector<Term> right;
  /// Gamma/Delta: the quantified abstraction and whether its instances are
  /// negated (for ~exists and ~forall).
  std::optional<Term> scope;
  bool negated = false;
};

Decomposition decompose(const Term& formula);

struct Branch {
  std::string id = "0";
  std::vector<Term> formulas;
  /// Alpha/beta/delta premises already used.
  std::vector<bool> expanded;
  /// Gamma instantiations per universal, keyed by formula index.
  std::map<std::size_t, int> gamma_uses;
  /// Equations already used for a rewrite pass.
  std::set<std::size_t> rewritten;
  std::optional<Substitution> closure;

  /// Index of a formula alpha-equal to `f`, if present.
  std::optional<std::size_t> find(const Term& f) const;
};

struct ProofResult {
  enum class Status { Proved, NotProved };
  enum class Reason { None, Exhausted, OpenBranch };
  Status status = Status::NotProved;
  Reason reason = Reason::OpenBranch;
  Substitution subst;
  std::vector<std::string> trace;

  bool proved() const { return status == Status::Proved; }
};

/// Free-variable tableau over a shared global substitution. Trace lines
/// are `RULE <name> <branch> <formula>`, `RULE rewrite <branch> <atom> to
/// <atom> by <equation>` and `CLOSE <branch> [v=t,...]`.
class Tableau {
 public:
  /// Receives the global substitution once every branch is closed; return
  /// false to ask for another refutation.
  using Cont = std::function<bool(const Substitution&)>;

  explicit Tableau(SearchBounds bounds = {}, NodeBudget* budget = nullptr);

  Branch& root() { return root_; }
  const Branch& root() const { return root_; }
  void set_root(Branch b) { root_ = std::move(b); }

  Branch expand_alpha(const Branch& b, const Term& conjunction) const;
  std::pair<Branch, Branch> expand_beta(const Branch& b, const Term& disjunction) const;
  /// Throws Error(MultiplicityExceeded) once the universal has been used
  /// gamma_multiplicity times on the branch.
  Branch expand_gamma(const Branch& b, const Term& universal);
  Branch expand_delta(const Branch& b, const Term& existential);
  /// First closing substitution extending `s`, in deterministic pair order.
  std::optional<Substitution> try_close(const Branch& b, const Substitution& s = {});
  /// One rewrite pass of the branch literals with a ground equation.
  Branch rewrite_with_equation(const Branch& b, const Term& equation) const;

  /// Refutes every seed branch (each extended with `hypotheses`) under one
  /// substitution extending `base`, deepening the gamma multiplicity.
  /// Seeds are (branch id, formulas).
  bool refute(const std::vector<std::pair<std::string, std::vector<Term>>>& seeds,
              const std::vector<Term>& hypotheses, const Substitution& base,
              const Cont& k);

  bool exhausted() const { return budget().exhausted(); }
  const std::vector<std::string>& trace() const { return trace_; }
  const std::map<std::string, Term>& skolems() const { return skolems_; }

 private:
  // Branches still to be refuted after the current one, innermost first.
  struct Pending;
  using PendingPtr = std::shared_ptr<const Pending>;
  struct Pending {
    Branch branch;
    std::vector<Term> parts;
    PendingPtr next;
  };

  Term fresh_gamma_var(const Type& ty);
  Term skolem_for(const Term& existential, const Type& ty);
  void note_names(const Term& t);
  void reset();
  NodeBudget& budget() { return external_ != nullptr ? *external_ : own_budget_; }
  const NodeBudget& budget() const { return external_ != nullptr ? *external_ : own_budget_; }

  bool add(Branch b, const std::vector<Term>& fs, std::size_t i, const Substitution& s,
           const Cont& k, const char* label, const PendingPtr& pend);
  bool run(Branch b, const Substitution& s, const Cont& k, const PendingPtr& pend);
  bool expand(Branch b, const Substitution& s, const Cont& k, const PendingPtr& pend);
  std::string state_key(const Branch& b, const std::vector<Term>& extra, const Substitution& s,
                        std::map<std::string, std::string>& names) const;
  std::string rest_key(const PendingPtr& pend, const Substitution& s,
                       std::map<std::string, std::string>* shared) const;
  // `on` answers 0 to keep looking, 1 on success, 2 to prune; the first
  // non-zero answer is returned.
  int close_candidates(const Branch& b, std::size_t idx, const Substitution& s,
                       const std::function<int(const Substitution&, const std::string&)>& on);
  bool acceptable(const Substitution& s) const;
  std::string close_line(const Branch& b, const Substitution& before,
                         const Substitution& after) const;

  SearchBounds bounds_;
  NodeBudget own_budget_;
  NodeBudget* external_;
  Branch root_;
  int multiplicity_ = 1;
  bool hit_cap_ = false;
  unsigned gamma_counter_ = 0;
  unsigned skolem_counter_ = 0;
  std::set<std::string> names_;
  std::set<std::string> gamma_vars_;
  std::set<std::string> outer_;
  std::map<std::string, Type> outer_types_;
  std::map<std::string, Term> skolems_;
  std::vector<std::string> trace_;
};

/// Root branch holding the axioms and the negated theorem. Throws
/// Error(NotProp) unless every input is a formula.
Tableau init_refutation(const Term& theorem, const std::vector<Term>& axioms,
                        const SearchBounds& bounds = {});

ProofResult prove(const Term& theorem, const std::vector<Term>& axioms,
                  const SearchBounds& bounds = {}, NodeBudget* budget = nullptr);

}  // namespace houe
