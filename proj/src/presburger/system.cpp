#include "liarlab/presburger/system.hpp"

#include <charconv>
#include <utility>

#include "liarlab/presburger/parser.hpp"

namespace liarlab::presburger {

namespace {

std::optional<std::uint64_t> parse_natural(std::string_view text) {
  if (text.empty() || text.size() > 19) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

PresburgerSystem::PresburgerSystem() : PresburgerSystem(Options{}) {}

PresburgerSystem::PresburgerSystem(Options options)
    : options_(options), ledger_(options.decide, options.ledger_budget) {}

Expression PresburgerSystem::classify(const FormulaPtr& f, std::string payload) const {
  Expression e;
  e.payload = std::move(payload);
  e.kind = is_sentence(*f) ? ExprKind::Sentence : ExprKind::ProperFormula;
  return e;
}

Expression PresburgerSystem::make_expression(const FormulaPtr& f) const {
  return classify(f, serialize(*f));
}

Expression PresburgerSystem::expression(std::string_view payload) const {
  try {
    FormulaPtr f = parse_formula(payload);
    return classify(f, serialize(*f));
  } catch (const FreeVariableError&) {
    throw;
  } catch (const SyntaxError&) {
    // A bare term is an expression without being a formula.
    Term t = parse_term(payload);
    Expression e;
    e.payload = serialize(t, 0);
    e.kind = ExprKind::Other;
    return e;
  }
}

bool PresburgerSystem::is_name(const Name& n) const {
  return parse_natural(n.payload).has_value();
}

Name PresburgerSystem::name_of(const Expression& formula) const {
  if (!formula.is_formula()) throw NotAFormula("name_of: not a formula: " + formula.payload);
  FormulaPtr f = parse_formula(formula.payload);
  std::lock_guard lock(mutex_);
  return Name{std::to_string(ledger_.name_of(*f))};
}

Expression PresburgerSystem::formula_of(const Name& n, std::size_t budget) const {
  const auto value = parse_natural(n.payload);
  if (!value) throw NotAName("formula_of: not a natural number: " + n.payload);
  std::lock_guard lock(mutex_);
  try {
    const NamingLedger::Entry& entry = ledger_.entry_for_value(*value, budget);
    return classify(entry.formula, entry.payload);
  } catch (const BudgetExceeded& e) {
    throw NameUnassigned(std::string(e.what()) + " (name " + n.payload + " unassigned)");
  }
}

Expression PresburgerSystem::substitute(const Expression& formula, const Name& n) const {
  if (!formula.is_formula())
    throw NotAFormula("substitute: not a formula: " + formula.payload);
  const auto value = parse_natural(n.payload);
  if (!value) throw NotAName("substitute: not a natural number: " + n.payload);
  if (formula.is_sentence()) return formula;
  FormulaPtr f = parse_formula(formula.payload);
  FormulaPtr substituted = substitute_free_x(*f, *value);
  return classify(substituted, serialize(*substituted));
}

std::vector<Expression> PresburgerSystem::enumerate_formulas(std::size_t count) const {
  std::vector<Expression> out;
  out.reserve(count);
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < count; ++i) {
    const FormulaEnumerator::Item& item = ledger_.enumerator().at(i);
    out.push_back(classify(item.formula, item.payload));
  }
  return out;
}

std::vector<Name> PresburgerSystem::enumerate_names(std::size_t count) const {
  std::vector<Name> out;
  out.reserve(count);
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(Name{std::to_string(ledger_.entry_at(i).value)});
  return out;
}

bool PresburgerSystem::decide_sentence(const Expression& sentence) const {
  if (!sentence.is_sentence())
    throw NotAFormula("decide: not a sentence: " + sentence.payload);
  FormulaPtr f = parse_formula(sentence.payload);
  std::lock_guard lock(mutex_);
  return ledger_.decide_cached(*f, sentence.payload);
}

std::size_t PresburgerSystem::formula_count_up_to_size(std::size_t cap) const {
  std::lock_guard lock(mutex_);
  return ledger_.enumerator().count_up_to_size(cap);
}

Expression PresburgerSystem::enumerated_at(std::size_t index) const {
  std::lock_guard lock(mutex_);
  const FormulaEnumerator::Item& item = ledger_.enumerator().at(index);
  return classify(item.formula, item.payload);
}

std::uint64_t PresburgerSystem::goedel_name(const Expression& formula,
                                            std::size_t budget) const {
  if (!formula.is_formula())
    throw NotAFormula("goedel_name: not a formula: " + formula.payload);
  FormulaPtr f = parse_formula(formula.payload);
  std::lock_guard lock(mutex_);
  return ledger_.name_of(*f, budget);
}

Expression PresburgerSystem::goedel_formula(std::uint64_t value, std::size_t budget) const {
  std::lock_guard lock(mutex_);
  const NamingLedger::Entry& entry = ledger_.entry_for_value(value, budget);
  return classify(entry.formula, entry.payload);
}

PresburgerSystem::LedgerRow PresburgerSystem::ledger_row(std::size_t position) const {
  std::lock_guard lock(mutex_);
  const NamingLedger::Entry& entry = ledger_.entry_at(position);
  return LedgerRow{position, entry.value, entry.provable_sentence, entry.payload};
}

SentenceSet PresburgerSystem::truth_set() const {
  SentenceSet t;
  t.label = "T";
  t.member = [this](const Expression& e) {
    return e.is_sentence() && decide_sentence(e);
  };
  return t;
}

SentenceSet PresburgerSystem::provable_set() const {
  // The system is complete, so P coincides with T; only the label differs.
  SentenceSet p = truth_set();
  p.label = "P";
  return p;
}

Expression PresburgerSystem::even_representer() {
  return Expression{"E y. y+y = x", ExprKind::ProperFormula};
}

Expression PresburgerSystem::odd_representer() {
  return Expression{"A y. ~(y+y = x)", ExprKind::ProperFormula};
}

std::optional<ViolationReport> PresburgerSystem::truth_definability_check(
    std::size_t sample_size) const {
  if (sample_size == 0) throw Error("truth_definability_check: sample_size must be >= 1");
  const std::vector<Name> sample = enumerate_names(sample_size);
  const SentenceSet t = truth_set();
  const NameSet bold_t = image_under_naming(*this, t);
  if (auto violation = check_representation(*this, even_representer(), bold_t, t, sample))
    return violation;
  const NameSet not_bold_p = image_under_naming(*this, provable_set()).complement();
  return check_representation(*this, odd_representer(), not_bold_p, t, sample);
}

PresburgerSystem::NonSelfRefReport PresburgerSystem::non_self_referentiality_evidence(
    std::size_t size_cap, std::size_t sample_size) const {
  if (sample_size == 0)
    throw Error("non_self_referentiality_evidence: sample_size must be >= 1");
  NonSelfRefReport report;
  report.size_cap = size_cap;
  report.sample_size = sample_size;

  const std::vector<Name> sample = enumerate_names(sample_size);
  const SentenceSet t = truth_set();
  // The evens are the image of T; their diagonal transform is what no
  // formula should represent.
  const NameSet target = diagonal_name_set(*this, image_under_naming(*this, t));

  report.candidates_checked = formula_count_up_to_size(size_cap);
  for (std::size_t i = 0; i < report.candidates_checked; ++i) {
    const Expression candidate = enumerated_at(i);
    if (!check_representation(*this, candidate, target, t, sample))
      report.survivors.push_back(candidate);
  }
  return report;
}

}  // namespace liarlab::presburger
