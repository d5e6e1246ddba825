#pragma once

#include <cstddef>

namespace houe {

/// Caps that make every search total and reproducible.
struct SearchBounds {
  int hou_depth = 6;
  int gamma_multiplicity = 3;
  long node_budget = 100000;
  int max_solutions = 8;
  int ground_depth = 3;

  bool valid() const {
    return hou_depth >= 1 && gamma_multiplicity >= 1 && node_budget >= 1 &&
           max_solutions >= 1 && ground_depth >= 1;
  }
};

/// Node counter shared by unification and tableau search. Each binding
/// attempt and each tableau expansion costs one node.
class NodeBudget {
 public:
  explicit NodeBudget(long limit) : limit_(limit) {}

  /// Consumes one node; false once the budget is gone.
  bool spend() {
    if (used_ >= limit_) {
      exhausted_ = true;
      return false;
    }
    ++used_;
    return true;
  }

  bool exhausted() const { return exhausted_; }
  long used() const { return used_; }
  long limit() const { return limit_; }

 private:
  long limit_;
  long used_ = 0;
  bool exhausted_ = false;
};

}  // namespace houe
