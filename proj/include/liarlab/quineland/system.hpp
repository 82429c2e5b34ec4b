#ifndef LIARLAB_QUINELAND_SYSTEM_HPP
#define LIARLAB_QUINELAND_SYSTEM_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "liarlab/afs.hpp"
#include "liarlab/quineland/ast.hpp"
#include "liarlab/quineland/proofs.hpp"
#include "liarlab/quineland/semantics.hpp"

namespace liarlab::quineland {

// Deterministic enumeration of all formulas in canonical order (node count,
// then serialization bytes). Every formula belongs to F: the only possible
// free variable is x.
class QFormulaEnumerator {
 public:
  struct Item {
    QExprPtr formula;
    std::string payload;
    std::size_t size = 0;
  };

  const Item& at(std::size_t index);
  std::size_t count_up_to_size(std::size_t cap);

 private:
  void grow_bucket();
  std::vector<QExprPtr> terms(std::size_t size);
  std::vector<QExprPtr> formulas(std::size_t size);

  std::vector<Item> items_;
  std::size_t next_size_ = 2;  // smallest formula is Pr(x)
  std::map<std::size_t, std::vector<QExprPtr>> term_memo_;
  std::map<std::size_t, std::vector<QExprPtr>> formula_memo_;
};

// The self-referential instance. Names are quotations of formulas, so the
// naming function needs no ledger: g(f) = <f>.
class QuinelandSystem final : public SystemInstance {
 public:
  std::string_view tag() const override { return "quine"; }
  Expression expression(std::string_view payload) const override;
  bool is_name(const Name& n) const override;
  Name name_of(const Expression& formula) const override;
  Expression formula_of(const Name& n, std::size_t budget = 0) const override;
  Expression substitute(const Expression& formula, const Name& n) const override;
  std::vector<Expression> enumerate_formulas(std::size_t count) const override;
  std::vector<Name> enumerate_names(std::size_t count) const override;

  bool truth(const Expression& sentence) const;
  bool printable(const Expression& sentence) const;
  std::optional<std::size_t> min_proof_length(const Expression& sentence) const;
  std::optional<Derivation> derivation_of(const Expression& sentence) const;

  Expression long_theorem_sentence(std::size_t n) const;
  GoedelFacts goedel() const;
  Expression transform_for_truth(const Expression& formula) const;

  std::size_t formula_count_up_to_size(std::size_t cap) const;
  Expression enumerated_at(std::size_t index) const;

  SentenceSet truth_set() const;
  SentenceSet printable_set() const;

  Expression make_expression(const QExprPtr& e) const;

 private:
  mutable std::mutex mutex_;
  mutable Oracles oracles_;
  mutable QFormulaEnumerator enumerator_;
};

}  // namespace liarlab::quineland

#endif
