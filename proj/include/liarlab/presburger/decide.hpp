#ifndef LIARLAB_PRESBURGER_DECIDE_HPP
#define LIARLAB_PRESBURGER_DECIDE_HPP

#include <cstdint>

#include "liarlab/presburger/ast.hpp"

namespace liarlab::presburger {

struct DecideLimits {
  // Cap on internal nodes built during elimination; 0 = unlimited.
  // Exceeding it raises BudgetExceeded.
  std::uint64_t max_nodes = 0;
};

// Truth over N = {0, 1, 2, ...} of a sentence, by quantifier elimination.
// The engine works over the integers with divisibility atoms and relativizes
// every quantifier to >= 0. Total and terminating.
bool decide(const Formula& sentence, const DecideLimits& limits = {});

// Bounded evaluation: every quantifier restricted to {0..bound}. `sound`
// reports whether the verdict transfers to the full domain: exact for
// quantifier-free sentences, true-verdicts of purely existential ones and
// false-verdicts of purely universal ones; otherwise the value is advisory.
struct BoundedEval {
  bool value = false;
  bool sound = false;
};
BoundedEval eval_bounded(const Formula& sentence, std::uint64_t bound);

}  // namespace liarlab::presburger

#endif
