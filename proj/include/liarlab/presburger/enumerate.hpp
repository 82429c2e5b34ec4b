#ifndef LIARLAB_PRESBURGER_ENUMERATE_HPP
#define LIARLAB_PRESBURGER_ENUMERATE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "liarlab/presburger/ast.hpp"

namespace liarlab::presburger {

// Deterministic enumeration of all formulas (at most x free) in canonical
// order: node count first, serialization bytes second. Prefix-stable: the
// sequence never changes once emitted, whatever count is asked for.
class FormulaEnumerator {
 public:
  struct Item {
    FormulaPtr formula;
    std::string payload;
    std::size_t size = 0;
  };

  const Item& at(std::size_t index);

  // Number of formulas with node count <= cap.
  std::size_t count_up_to_size(std::size_t cap);

 private:
  void grow_bucket();

  std::vector<Term> terms(std::size_t size, std::size_t depth);
  std::vector<FormulaPtr> formulas(std::size_t size, std::size_t depth);

  std::vector<Item> items_;
  std::size_t next_size_ = 3;  // smallest formula is a 3-node equation
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> term_memo_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<FormulaPtr>> formula_memo_;
};

}  // namespace liarlab::presburger

#endif
