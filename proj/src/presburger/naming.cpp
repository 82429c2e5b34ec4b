#include "liarlab/presburger/naming.hpp"

#include "liarlab/errors.hpp"

namespace liarlab::presburger {

namespace {
constexpr std::size_t kMemoKeyCap = 256;  // skip memoizing giant payloads
}

bool NamingLedger::decide_cached(const Formula& sentence, const std::string& payload) {
  if (payload.size() <= kMemoKeyCap) {
    if (auto it = decide_memo_.find(payload); it != decide_memo_.end()) return it->second;
    const bool value = decide(sentence, limits_);
    decide_memo_.emplace(payload, value);
    return value;
  }
  return decide(sentence, limits_);
}

void NamingLedger::advance_one() {
  const FormulaEnumerator::Item& item = enumerator_.at(entries_.size());
  Entry entry;
  entry.formula = item.formula;
  entry.payload = item.payload;
  entry.provable_sentence =
      is_sentence(*item.formula) && decide_cached(*item.formula, item.payload);
  if (entry.provable_sentence) {
    entry.value = next_even_;
    next_even_ += 2;
  } else {
    entry.value = next_odd_;
    next_odd_ += 2;
  }
  by_payload_.emplace(entry.payload, entries_.size());
  by_value_.emplace(entry.value, entries_.size());
  entries_.push_back(std::move(entry));
}

std::uint64_t NamingLedger::name_of(const Formula& f, std::size_t budget) {
  const std::string payload = serialize(f);
  if (auto it = by_payload_.find(payload); it != by_payload_.end())
    return entries_[it->second].value;
  const std::size_t size = node_count(f);
  const std::size_t cap = budget == 0 ? default_budget_ : budget;
  for (std::size_t steps = 0; steps < cap; ++steps) {
    // Everything of the formula's size has been passed: it is not canonical.
    if (enumerator_.at(entries_.size()).size > size)
      throw NotAFormula("name_of: formula is not in the enumeration: " + payload);
    advance_one();
    if (entries_.back().payload == payload) return entries_.back().value;
  }
  throw BudgetExceeded("name_of: ledger budget exhausted before reaching " + payload);
}

const NamingLedger::Entry& NamingLedger::entry_for_value(std::uint64_t value,
                                                         std::size_t budget) {
  if (auto it = by_value_.find(value); it != by_value_.end()) return entries_[it->second];
  const std::size_t cap = budget == 0 ? default_budget_ : budget;
  for (std::size_t steps = 0; steps < cap; ++steps) {
    advance_one();
    if (entries_.back().value == value) return entries_.back();
  }
  throw BudgetExceeded("ledger budget exhausted before assigning value " +
                       std::to_string(value));
}

const NamingLedger::Entry& NamingLedger::entry_at(std::size_t position, std::size_t budget) {
  const std::size_t cap = budget == 0 ? default_budget_ : budget;
  if (position >= entries_.size() && position - entries_.size() >= cap)
    throw BudgetExceeded("ledger budget exhausted before position " + std::to_string(position));
  while (position >= entries_.size()) advance_one();
  return entries_[position];
}

}  // namespace liarlab::presburger
