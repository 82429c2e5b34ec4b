#ifndef LIARLAB_PRESBURGER_NAMING_HPP
#define LIARLAB_PRESBURGER_NAMING_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "liarlab/presburger/ast.hpp"
#include "liarlab/presburger/decide.hpp"
#include "liarlab/presburger/enumerate.hpp"

namespace liarlab::presburger {

// The lazy naming recursion: walking the canonical enumeration, each formula
// receives the smallest even natural not already chosen when it is a provable
// sentence (decide says true) and the smallest odd one otherwise.
//
// Invariants: assigned values are even iff the formula is a provable
// sentence; forward and backward maps are mutually inverse; evens and odds
// are each handed out in increasing order with no gaps.
//
// Not internally synchronized; the owning instance serializes access.
class NamingLedger {
 public:
  struct Entry {
    FormulaPtr formula;
    std::string payload;
    std::uint64_t value = 0;
    bool provable_sentence = false;
  };

  explicit NamingLedger(DecideLimits limits = {}, std::size_t default_budget = 1000000)
      : limits_(limits), default_budget_(default_budget) {}

  // g(f). Advances the ledger until the formula is reached; throws
  // BudgetExceeded if `budget` (0 = default) positions are exhausted first.
  std::uint64_t name_of(const Formula& f, std::size_t budget = 0);

  // g^{-1}(value). Advances until the value is assigned.
  const Entry& entry_for_value(std::uint64_t value, std::size_t budget = 0);

  const Entry& entry_at(std::size_t position, std::size_t budget = 0);

  bool value_assigned(std::uint64_t value) const { return by_value_.count(value) > 0; }
  std::size_t assigned_count() const { return entries_.size(); }

  // Memoized decide on sentence payloads.
  bool decide_cached(const Formula& sentence, const std::string& payload);

  FormulaEnumerator& enumerator() { return enumerator_; }

 private:
  void advance_one();

  DecideLimits limits_;
  std::size_t default_budget_;
  FormulaEnumerator enumerator_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> by_payload_;
  std::unordered_map<std::uint64_t, std::size_t> by_value_;
  std::unordered_map<std::string, bool> decide_memo_;
  std::uint64_t next_even_ = 0;
  std::uint64_t next_odd_ = 1;
};

}  // namespace liarlab::presburger

#endif
