#include "houe/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "houe/corrections.hpp"
#include "houe/error.hpp"
#include "houe/hou.hpp"
#include "houe/houe.hpp"
#include "houe/parser.hpp"
#include "houe/tableau.hpp"

namespace houe::cli {
namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

ordered_json subst_json(const Substitution& s) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, value] : s.bindings()) j[name] = pretty_print(value);
  return j;
}

std::string bindings_text(const Substitution& s) {
  std::string out;
  for (const auto& [name, value] : s.bindings()) out += name + " := " + pretty_print(value) + "\n";
  return out;
}

std::string_view kind_name(Justification::Kind k) {
  return k == Justification::Kind::Syntactic ? "syntactic" : "equivalence";
}

ordered_json justification_json(const std::vector<Justification>& js, bool trace) {
  ordered_json arr = ordered_json::array();
  for (const auto& j : js) {
    ordered_json e{{"kind", kind_name(j.kind)}};
    if (trace) e["trace"] = j.trace;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string justification_text(const std::vector<Justification>& js, bool trace) {
  std::string out;
  for (std::size_t i = 0; i < js.size(); ++i) {
    out += "  eq " + std::to_string(i + 1) + ": " + std::string(kind_name(js[i].kind)) + "\n";
    if (trace) out += render_trace(js[i].trace, 4);
  }
  return out;
}

void line(RunOutput& o, const ordered_json& j) { o.out += j.dump() + "\n"; }

void finish(RunOutput& o, const RunConfig& c, const std::string& status, int code) {
  if (c.machine) {
    line(o, ordered_json{{"type", "result"}, {"status", status}, {"exit", code}});
  } else {
    o.out += status + "\n";
  }
  o.status = code;
}

std::vector<std::string> declared_metas(const Signature& sig) {
  std::vector<std::string> out;
  for (const auto& [n, ty] : sig.metas()) out.push_back(n);
  return out;
}

std::vector<Term> vocabulary(const Signature& sig) {
  std::vector<Term> out;
  for (const auto& [n, ty] : sig.constants()) out.push_back(sig.make_constant(n));
  return out;
}

void run_unify(const ProblemFile& pf, const RunConfig& c, RunOutput& o) {
  UnifResult r = unify({pf.equations, {}}, c.bounds);
  for (const auto& sol : r.solutions) {
    if (c.machine) {
      ordered_json rec{{"type", "solution"}, {"substitution", subst_json(sol.subst)}};
      ordered_json ff = ordered_json::array();
      for (const auto& eq : sol.flex_flex) {
        ff.push_back(pretty_print(eq.lhs) + " = " + pretty_print(eq.rhs));
      }
      rec["flex_flex"] = ff;
      line(o, rec);
    } else {
      o.out += "solution\n" + bindings_text(sol.subst);
      for (const auto& eq : sol.flex_flex) {
        o.out += "  flex-flex " + pretty_print(eq.lhs) + " = " + pretty_print(eq.rhs) + "\n";
      }
    }
  }
  if (!r.solutions.empty()) {
    finish(o, c, "SOLVED", kSuccess);
  } else if (r.exhausted) {
    finish(o, c, "RESOURCE-LIMIT", kResourceLimit);
  } else {
    finish(o, c, "NO SOLUTION", kNegative);
  }
}

void run_prove(const ProblemFile& pf, const RunConfig& c, RunOutput& o) {
  NodeBudget budget(c.bounds.node_budget);
  bool all = true, exhausted = false;
  for (const auto& goal : pf.goals) {
    ProofResult r = prove(goal, pf.axioms, c.bounds, &budget);
    if (c.machine) {
      ordered_json rec{{"type", "proof"},
                       {"goal", pretty_print(goal)},
                       {"status", r.proved() ? "proved" : "not-proved"},
                       {"substitution", subst_json(r.subst)}};
      if (c.trace) rec["trace"] = r.trace;
      line(o, rec);
    } else {
      o.out += "goal " + pretty_print(goal) + "\n";
      o.out += r.proved() ? "proved\n" : "not proved\n";
      if (r.proved()) o.out += bindings_text(r.subst);
      if (c.trace) o.out += render_trace(r.trace);
    }
    all = all && r.proved();
    exhausted = exhausted || r.reason == ProofResult::Reason::Exhausted;
  }
  if (all) {
    finish(o, c, "PROVED", kSuccess);
  } else if (exhausted) {
    finish(o, c, "RESOURCE-LIMIT", kResourceLimit);
  } else {
    finish(o, c, "NOT PROVED", kNegative);
  }
}

void run_houe(const ProblemFile& pf, const RunConfig& c, RunOutput& o) {
  HoueProblem p;
  p.equations = pf.equations;
  p.hypotheses = pf.axioms;
  p.bounds = c.bounds;
  p.constants = vocabulary(pf.signature);
  p.metas = declared_metas(pf.signature);
  HoueResult r = solve(p);
  for (const auto& sol : r.solutions) {
    if (c.machine) {
      line(o, ordered_json{{"type", "solution"},
                           {"substitution", subst_json(sol.subst)},
                           {"justification", justification_json(sol.justification, c.trace)}});
    } else {
      o.out += "solution\n" + bindings_text(sol.subst) +
               justification_text(sol.justification, c.trace);
    }
  }
  if (!r.solutions.empty()) {
    finish(o, c, "SOLVED", kSuccess);
  } else if (r.exhausted) {
    finish(o, c, "RESOURCE-LIMIT", kResourceLimit);
  } else {
    finish(o, c, "NO SOLUTION", kNegative);
  }
}

void run_correct(const ProblemFile& pf, const RunConfig& c, RunOutput& o) {
  CorrectionProblem p = correction_problem(pf, c.bounds);
  Verdict v = analyze(p);
  for (const auto& r : v.readings) {
    if (c.machine) {
      ordered_json sub = ordered_json::object();
      sub[p.anaphor] = pretty_print(r.anaphor);
      for (const auto& [n, t] : r.pronouns) sub[n] = pretty_print(t);
      line(o, ordered_json{{"type", "solution"},
                           {"substitution", sub},
                           {"classification", to_string(r.classification)},
                           {"justification", justification_json(r.justification, c.trace)}});
    } else {
      o.out += p.anaphor + " := " + pretty_print(r.anaphor) + "\n";
      for (const auto& [n, t] : r.pronouns) o.out += "  " + n + " := " + pretty_print(t) + "\n";
      o.out += "  classification: " + std::string(to_string(r.classification)) + "\n";
      o.out += justification_text(r.justification, c.trace);
    }
  }
  switch (v.kind) {
    case Verdict::Kind::WellFormed: return finish(o, c, "WELL-FORMED", kSuccess);
    case Verdict::Kind::IllFormed: return finish(o, c, "ILL-FORMED", kNegative);
    default: return finish(o, c, "RESOURCE-LIMIT", kResourceLimit);
  }
}

}  // namespace

fs::path resolve_input(const fs::path& input, const std::string& seed_dir) {
  std::vector<fs::path> tries{input, fs::path(input.string() + ".houe")};
  if (!seed_dir.empty() && input.is_relative()) {
    fs::path base = fs::path(seed_dir);
    for (const fs::path& name : {input, input.filename()}) {
      tries.push_back(base / name);
      tries.push_back(base / (name.string() + ".houe"));
    }
  }
  for (const auto& t : tries) {
    std::error_code ec;
    if (fs::is_regular_file(t, ec)) return t;
  }
  return input;
}

RunOutput run(const RunConfig& config) {
  RunOutput o;
  try {
    if (!config.bounds.valid()) throw Error(ErrorCode::Io, "search bounds must be positive");
    const char* seeds = std::getenv("HOUE_SEED_DIR");
    ProblemFile pf = load_problem(resolve_input(config.input, seeds ? seeds : ""));
    switch (config.command) {
      case Command::Unify: run_unify(pf, config, o); break;
      case Command::Prove: run_prove(pf, config, o); break;
      case Command::Houe: run_houe(pf, config, o); break;
      case Command::Correct: run_correct(pf, config, o); break;
    }
  } catch (const Error& e) {
    o = RunOutput{kInputError, "", "error: " + std::string(to_string(e.code())) + ": " + e.what() + "\n"};
  }
  return o;
}

std::string render_trace(const std::vector<std::string>& trace, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' '), out;
  for (const auto& l : trace) out += pad + l + "\n";
  return out;
}

}  // namespace houe::cli
