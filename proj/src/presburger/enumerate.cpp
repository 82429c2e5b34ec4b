#include "liarlab/presburger/enumerate.hpp"

#include <algorithm>
#include <utility>

namespace liarlab::presburger {

// All canonical terms of the given node size under `depth` binders: atom
// sequences over {0, 1, x, bound vars}, runs of 1s merged. A sequence of L
// unit atoms spans 2L-1 nodes, so only odd sizes are inhabited.
std::vector<Term> FormulaEnumerator::terms(std::size_t size, std::size_t depth) {
  const auto key = std::make_pair(size, depth);
  if (auto it = term_memo_.find(key); it != term_memo_.end()) return it->second;

  std::vector<Term> out;
  if (size % 2 == 1) {
    const std::size_t length = (size + 1) / 2;
    std::vector<TermAtom> alphabet;
    alphabet.push_back(numeral_atom(0));
    alphabet.push_back(numeral_atom(1));
    alphabet.push_back(free_x_atom());
    for (std::size_t i = 0; i < depth; ++i) alphabet.push_back(bound_atom(i));

    std::vector<std::size_t> pick(length, 0);
    while (true) {
      std::vector<TermAtom> atoms;
      atoms.reserve(length);
      for (std::size_t p : pick) atoms.push_back(alphabet[p]);
      out.push_back(make_term(std::move(atoms)));
      std::size_t i = 0;
      while (i < length && ++pick[i] == alphabet.size()) pick[i++] = 0;
      if (i == length) break;
    }
  }
  term_memo_.emplace(key, out);
  return out;
}

std::vector<FormulaPtr> FormulaEnumerator::formulas(std::size_t size, std::size_t depth) {
  const auto key = std::make_pair(size, depth);
  if (auto it = formula_memo_.find(key); it != formula_memo_.end()) return it->second;

  std::vector<FormulaPtr> out;
  if (size >= 3) {
    for (std::size_t left = 1; left + 1 < size; left += 2) {
      const std::size_t right = size - 1 - left;
      if (right % 2 == 0) continue;
      for (const Term& lhs : terms(left, depth))
        for (const Term& rhs : terms(right, depth)) out.push_back(eq(lhs, rhs));
    }
  }
  if (size >= 4) {
    for (const FormulaPtr& f : formulas(size - 1, depth)) out.push_back(neg(f));
    for (const FormulaPtr& f : formulas(size - 1, depth + 1)) {
      out.push_back(exists(f));
      out.push_back(forall(f));
    }
  }
  if (size >= 7) {
    for (std::size_t left = 3; left + 3 < size; ++left) {
      const std::size_t right = size - 1 - left;
      const std::vector<FormulaPtr> ls = formulas(left, depth);
      const std::vector<FormulaPtr> rs = formulas(right, depth);
      for (const FormulaPtr& a : ls)
        for (const FormulaPtr& b : rs) {
          out.push_back(conj(a, b));
          out.push_back(disj(a, b));
          out.push_back(implies(a, b));
        }
    }
  }
  formula_memo_.emplace(key, out);
  return out;
}

void FormulaEnumerator::grow_bucket() {
  std::vector<Item> bucket;
  for (const FormulaPtr& f : formulas(next_size_, 0))
    bucket.push_back(Item{f, serialize(*f), next_size_});
  std::sort(bucket.begin(), bucket.end(),
            [](const Item& a, const Item& b) { return a.payload < b.payload; });
  for (Item& item : bucket) items_.push_back(std::move(item));
  ++next_size_;
}

const FormulaEnumerator::Item& FormulaEnumerator::at(std::size_t index) {
  while (index >= items_.size()) grow_bucket();
  return items_[index];
}

std::size_t FormulaEnumerator::count_up_to_size(std::size_t cap) {
  while (next_size_ <= cap) grow_bucket();
  std::size_t count = items_.size();
  while (count > 0 && items_[count - 1].size > cap) --count;
  return count;
}

}  // namespace liarlab::presburger
