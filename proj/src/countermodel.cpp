#include "houe/countermodel.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "houe/lambda.hpp"
#include "houe/signature.hpp"

namespace houe {
namespace {

constexpr long kMaxSteps = 200000;

bool is_ind(const Type& t) { return t.kind() == Type::Kind::Ind; }

bool first_order_symbol(const Type& ty) {
  for (const auto& a : ty.args()) {
    if (!is_ind(a)) return false;
  }
  return true;
}

bool term_ok(const Term& t, std::size_t depth);

bool formula_ok(const Term& f, std::size_t depth) {
  if (f.is_bound() || f.is_meta() || f.is_lam()) return false;
  Spine sp = spine(f);
  if (!sp.head.is_const()) return false;
  const std::string& h = sp.head.name();
  if (h == logic::kForall || h == logic::kExists) {
    if (sp.args.size() != 1 || !sp.args[0].is_lam() || !is_ind(sp.args[0].type())) return false;
    return formula_ok(sp.args[0].body(), depth + 1);
  }
  if (h == logic::kEq) {
    if (sp.args.size() != 2) return false;
    Type ty = sp.head.type().args()[0];
    if (is_ind(ty)) return term_ok(sp.args[0], depth) && term_ok(sp.args[1], depth);
    if (ty.is_prop()) return formula_ok(sp.args[0], depth) && formula_ok(sp.args[1], depth);
    return false;
  }
  if (logic::is_logical(h)) {
    for (const auto& a : sp.args) {
      if (!formula_ok(a, depth)) return false;
    }
    return true;
  }
  if (!first_order_symbol(sp.head.type())) return false;
  for (const auto& a : sp.args) {
    if (!term_ok(a, depth)) return false;
  }
  return true;
}

bool term_ok(const Term& t, std::size_t depth) {
  if (t.is_bound()) return t.index() < depth;
  Spine sp = spine(t);
  if (!sp.head.is_const() || logic::is_logical(sp.head.name())) return false;
  if (!first_order_symbol(sp.head.type())) return false;
  for (const auto& a : sp.args) {
    if (!term_ok(a, depth)) return false;
  }
  return true;
}

enum class V { False, True, Unknown };

V from_bool(bool b) { return b ? V::True : V::False; }

// Partial interpretation over {0..n-1}. A cell is a symbol applied to
// elements; element cells hold an element, truth cells 0 or 1.
class Finder {
 public:
  Finder(const std::vector<Term>& sentences, int n) : fs_(sentences), n_(n) {}

  std::optional<bool> run() {
    bool found = search();
    if (steps_ > kMaxSteps) return std::nullopt;
    return found;
  }

 private:
  using Cell = std::pair<std::string, std::vector<int>>;

  bool search() {
    if (++steps_ > kMaxSteps) return false;
    block_.reset();
    bool all = true;
    for (const auto& f : fs_) {
      std::vector<int> env;
      V v = eval(f, env);
      if (v == V::False) return false;
      if (v == V::Unknown) all = false;
    }
    if (all) return true;
    if (!block_) return false;
    Cell cell = *block_;
    bool element = block_element_;
    std::vector<int> values;
    if (element) {
      int fresh = -1;
      for (int d = 0; d < n_; ++d) {
        if (used_.count(d)) {
          values.push_back(d);
        } else if (fresh < 0) {
          fresh = d;
        }
      }
      // Unnamed elements are interchangeable, so one stands for all.
      if (fresh >= 0) values.push_back(fresh);
    } else {
      values = {1, 0};
    }
    for (int v : values) {
      auto saved = used_;
      for (int a : cell.second) used_.insert(a);
      if (element) used_.insert(v);
      cells_[cell] = v;
      if (search()) return true;
      cells_.erase(cell);
      used_ = std::move(saved);
      if (steps_ > kMaxSteps) return false;
    }
    return false;
  }

  void blocked(Cell c, bool element) {
    if (block_) return;
    block_ = std::move(c);
    block_element_ = element;
  }

  // Element denoted by a term, or -1 when it depends on an unset cell.
  int value(const Term& t, std::vector<int>& env) {
    if (t.is_bound()) return env[env.size() - 1 - t.index()];
    Spine sp = spine(t);
    Cell c{sp.head.name(), {}};
    for (const auto& a : sp.args) {
      int v = value(a, env);
      if (v < 0) return -1;
      c.second.push_back(v);
    }
    auto it = cells_.find(c);
    if (it != cells_.end()) return it->second;
    blocked(std::move(c), true);
    return -1;
  }

  V eval(const Term& f, std::vector<int>& env) {
    Spine sp = spine(f);
    const std::string& h = sp.head.name();
    if (h == logic::kForall || h == logic::kExists) {
      bool all = h == logic::kForall;
      V out = from_bool(all);
      for (int d = 0; d < n_; ++d) {
        env.push_back(d);
        V v = eval(sp.args[0].body(), env);
        env.pop_back();
        if (v == from_bool(!all)) return v;
        if (v == V::Unknown) out = V::Unknown;
      }
      return out;
    }
    if (h == logic::kNot) {
      V v = eval(sp.args[0], env);
      return v == V::Unknown ? v : from_bool(v == V::False);
    }
    if (h == logic::kAnd || h == logic::kOr) {
      bool conj = h == logic::kAnd;
      V out = from_bool(conj);
      for (const auto& a : sp.args) {
        V v = eval(a, env);
        if (v == from_bool(!conj)) return v;
        if (v == V::Unknown) out = V::Unknown;
      }
      return out;
    }
    if (h == logic::kImp) {
      V a = eval(sp.args[0], env);
      if (a == V::False) return V::True;
      V b = eval(sp.args[1], env);
      if (b == V::True) return V::True;
      if (a == V::True) return b;
      return V::Unknown;
    }
    if (h == logic::kIff || (h == logic::kEq && !is_ind(sp.head.type().args()[0]))) {
      V a = eval(sp.args[0], env);
      V b = eval(sp.args[1], env);
      if (a == V::Unknown || b == V::Unknown) return V::Unknown;
      return from_bool(a == b);
    }
    if (h == logic::kEq) {
      int a = value(sp.args[0], env);
      int b = value(sp.args[1], env);
      if (a < 0 || b < 0) return V::Unknown;
      return from_bool(a == b);
    }
    Cell c{h, {}};
    for (const auto& a : sp.args) {
      int v = value(a, env);
      if (v < 0) return V::Unknown;
      c.second.push_back(v);
    }
    auto it = cells_.find(c);
    if (it != cells_.end()) return from_bool(it->second != 0);
    blocked(std::move(c), false);
    return V::Unknown;
  }

  const std::vector<Term>& fs_;
  int n_;
  std::map<Cell, int> cells_;
  std::set<int> used_;
  std::optional<Cell> block_;
  bool block_element_ = false;
  long steps_ = 0;
};

}  // namespace

bool small_model_exists(const std::vector<Term>& sentences, int max_domain) {
  for (const auto& f : sentences) {
    if (has_metas(f) || has_loose_bound(f) || !formula_ok(f, 0)) return false;
  }
  for (int n = 1; n <= max_domain; ++n) {
    auto r = Finder(sentences, n).run();
    if (!r) return false;
    if (*r) return true;
  }
  return false;
}

}  // namespace houe
