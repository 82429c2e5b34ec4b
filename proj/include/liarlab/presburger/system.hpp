#ifndef LIARLAB_PRESBURGER_SYSTEM_HPP
#define LIARLAB_PRESBURGER_SYSTEM_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "liarlab/afs.hpp"
#include "liarlab/presburger/ast.hpp"
#include "liarlab/presburger/decide.hpp"
#include "liarlab/presburger/naming.hpp"

namespace liarlab::presburger {

// The complete arithmetic instance: additive number theory over N with a
// quantifier-elimination truth oracle, P = T = {sigma : decide(sigma)}, and
// the even/odd naming ledger. Names are decimal naturals.
//
// Oracle sets returned by truth_set()/provable_set() capture the instance;
// it must outlive them.
class PresburgerSystem final : public SystemInstance {
 public:
  struct Options {
    DecideLimits decide;
    std::size_t ledger_budget = 1000000;
  };

  PresburgerSystem();
  explicit PresburgerSystem(Options options);

  std::string_view tag() const override { return "pres"; }
  Expression expression(std::string_view payload) const override;
  bool is_name(const Name& n) const override;
  Name name_of(const Expression& formula) const override;
  Expression formula_of(const Name& n, std::size_t budget = 0) const override;
  Expression substitute(const Expression& formula, const Name& n) const override;
  std::vector<Expression> enumerate_formulas(std::size_t count) const override;
  std::vector<Name> enumerate_names(std::size_t count) const override;

  // Truth of a sentence, memoized.
  bool decide_sentence(const Expression& sentence) const;

  Expression make_expression(const FormulaPtr& f) const;

  std::size_t formula_count_up_to_size(std::size_t cap) const;
  Expression enumerated_at(std::size_t index) const;

  std::uint64_t goedel_name(const Expression& formula, std::size_t budget = 0) const;
  Expression goedel_formula(std::uint64_t value, std::size_t budget = 0) const;

  struct LedgerRow {
    std::size_t index = 0;
    std::uint64_t value = 0;
    bool provable_sentence = false;
    std::string payload;
  };
  LedgerRow ledger_row(std::size_t position) const;

  SentenceSet truth_set() const;
  SentenceSet provable_set() const;

  // (E y)(y + y = x)  and  (A y)~(y + y = x): the representers of the evens
  // and of the odds.
  static Expression even_representer();
  static Expression odd_representer();

  // Checks that the even representer T-represents the image of T and the odd
  // one the complement of the image of P, over the first sample_size
  // assigned names.
  std::optional<ViolationReport> truth_definability_check(std::size_t sample_size) const;

  struct NonSelfRefReport {
    std::size_t size_cap = 0;
    std::size_t sample_size = 0;
    std::size_t candidates_checked = 0;
    // Candidates the sample failed to refute; expected empty. A survivor is
    // flagged for inspection, never taken as a proof of representability.
    std::vector<Expression> survivors;
    bool all_refuted() const { return survivors.empty(); }
  };

  // Every formula of node count <= size_cap is checked as a representer of
  // the diagonal transform of the evens over the first sample_size names.
  NonSelfRefReport non_self_referentiality_evidence(std::size_t size_cap,
                                                    std::size_t sample_size) const;

 private:
  Expression classify(const FormulaPtr& f, std::string payload) const;

  Options options_;
  mutable std::mutex mutex_;
  mutable NamingLedger ledger_;
};

}  // namespace liarlab::presburger

#endif
