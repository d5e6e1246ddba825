#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "houe/lambda.hpp"
#include "houe/parser.hpp"
#include "houe/signature.hpp"

namespace houe::testing {

/// Builds a signature from `name : type` declarations separated by ';'.
/// Names listed after a `|` are metavariables.
inline Signature make_sig(const std::string& consts, const std::string& metas = "") {
  Signature sig;
  auto add = [&](const std::string& decls, bool meta) {
    std::stringstream ss(decls);
    std::string decl;
    while (std::getline(ss, decl, ';')) {
      auto colon = decl.find(':');
      if (colon == std::string::npos) continue;
      std::string name = decl.substr(0, colon);
      name.erase(0, name.find_first_not_of(' '));
      name.erase(name.find_last_not_of(' ') + 1);
      Type ty = parse_type(decl.substr(colon + 1));
      if (meta) {
        sig.add_meta(name, ty);
      } else {
        sig.add_constant(name, ty);
      }
    }
  };
  add(consts, false);
  add(metas, true);
  return sig;
}

/// The signature shared by most examples: Jon, Mary, Peter, Sarah, liking,
/// loving, "wife of".
inline Signature dialog_sig() {
  return make_sig(
      "j : e; m : e; p : e; s : e; like : e -> e -> t; love : e -> e -> t; "
      "wof : e -> e; w : e -> t; wrh : e -> t; q : t",
      "An : e -> t; X : e; F : e -> e; P : e -> t");
}

inline Term tm(const Signature& sig, const std::string& text) {
  return parse_term(text, sig);
}

inline Term nf(const Signature& sig, const std::string& text) {
  return normalize(parse_term(text, sig));
}

/// Random well-typed terms over dialog_sig(), including beta-redexes and
/// partial applications so that normalisation has work to do.
class TermGen {
 public:
  explicit TermGen(unsigned seed, Signature sig = dialog_sig())
      : rng_(seed), sig_(std::move(sig)) {
    for (const auto& [n, ty] : sig_.constants()) heads_.push_back(Term::constant(n, ty));
    for (const auto& [n, ty] : sig_.metas()) heads_.push_back(Term::meta(n, ty));
    for (const char* n : {logic::kNot, logic::kAnd, logic::kOr, logic::kImp,
                          logic::kIff, logic::kEq, logic::kForall, logic::kExists}) {
      heads_.push_back(Term::constant(n, logic::logical_type(n)));
    }
  }

  Term closed(const Type& ty, int depth) {
    Context ctx;
    return gen(ty, ctx, depth);
  }

  Term any(int depth) {
    static const std::vector<Type> types = {
        Type::prop(), Type::ind(), Type::arrow(Type::ind(), Type::prop()),
        Type::arrow(Type::ind(), Type::ind())};
    return closed(types[pick(types.size())], depth);
  }

  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

 private:
  // Heads (constant, metavariable or bound variable) whose type ends in `ty`
  // after some number of arguments.
  struct Candidate {
    Term head;
    std::vector<Type> args;
  };

  std::vector<Candidate> candidates(const Type& ty, const Context& ctx) const {
    std::vector<Candidate> out;
    auto consider = [&](const Term& head, const Type& head_ty) {
      std::vector<Type> args;
      Type cur = head_ty;
      while (true) {
        if (cur == ty) {
          out.push_back(Candidate{head, args});
          break;
        }
        if (!cur.is_arrow()) break;
        args.push_back(cur.domain());
        cur = cur.codomain();
      }
    };
    for (const auto& h : heads_) consider(h, h.type());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      consider(Term::bound(i), ctx[ctx.size() - 1 - i]);
    }
    return out;
  }

  Term gen(const Type& ty, Context& ctx, int depth) {
    if (ty.is_arrow() && (depth <= 0 || pick(3) == 0)) {
      ctx.push_back(ty.domain());
      Term body = gen(ty.codomain(), ctx, depth - 1);
      ctx.pop_back();
      return Term::lam("v", ty.domain(), body);
    }
    if (depth > 0 && pick(6) == 0) {
      ctx.push_back(Type::ind());
      Term body = gen(ty, ctx, depth - 1);
      ctx.pop_back();
      Term arg = gen(Type::ind(), ctx, depth - 1);
      return Term::app(Term::lam("y", Type::ind(), body), arg);
    }
    std::vector<Candidate> cands = candidates(ty, ctx);
    std::vector<Candidate> usable;
    for (const auto& c : cands) {
      if (depth > 0 || c.args.empty()) usable.push_back(c);
    }
    if (usable.empty()) {
      // Only reachable for arrow types at depth <= 0, handled above, or for
      // `t` at depth 0, where `q` is always available.
      usable = cands;
    }
    const Candidate& c = usable[pick(usable.size())];
    Term out = c.head;
    for (const auto& a : c.args) out = Term::app(out, gen(a, ctx, depth - 1));
    return out;
  }

  std::mt19937 rng_;
  Signature sig_;
  std::vector<Term> heads_;
};

}  // namespace houe::testing
