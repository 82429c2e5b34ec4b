#include "liarlab/quineland/system.hpp"

#include <algorithm>
#include <utility>

namespace liarlab::quineland {

std::vector<QExprPtr> QFormulaEnumerator::terms(std::size_t size) {
  if (auto it = term_memo_.find(size); it != term_memo_.end()) return it->second;
  std::vector<QExprPtr> out;
  if (size == 1) {
    out.push_back(var_x());
  } else if (size >= 2) {
    for (const QExprPtr& t : terms(size - 1)) out.push_back(diag(t));
    for (const QExprPtr& t : terms(size - 1)) out.push_back(quote(t));
    for (const QExprPtr& f : formulas(size - 1)) out.push_back(quote(f));
  }
  term_memo_.emplace(size, out);
  return out;
}

std::vector<QExprPtr> QFormulaEnumerator::formulas(std::size_t size) {
  if (auto it = formula_memo_.find(size); it != formula_memo_.end()) return it->second;
  std::vector<QExprPtr> out;
  if (size >= 2) {
    for (const QExprPtr& t : terms(size - 1)) out.push_back(pr(t));
  }
  if (size >= 3) {
    for (const QExprPtr& f : formulas(size - 1)) out.push_back(neg(f));
  }
  if (size >= 5) {
    for (std::size_t left = 2; left + 3 <= size; ++left) {
      for (const QExprPtr& a : formulas(left))
        for (const QExprPtr& b : formulas(size - 1 - left)) out.push_back(conj(a, b));
    }
  }
  formula_memo_.emplace(size, out);
  return out;
}

void QFormulaEnumerator::grow_bucket() {
  std::vector<Item> bucket;
  for (const QExprPtr& f : formulas(next_size_))
    bucket.push_back(Item{f, serialize(*f), next_size_});
  std::sort(bucket.begin(), bucket.end(),
            [](const Item& a, const Item& b) { return a.payload < b.payload; });
  for (Item& item : bucket) items_.push_back(std::move(item));
  ++next_size_;
}

const QFormulaEnumerator::Item& QFormulaEnumerator::at(std::size_t index) {
  while (index >= items_.size()) grow_bucket();
  return items_[index];
}

std::size_t QFormulaEnumerator::count_up_to_size(std::size_t cap) {
  while (next_size_ <= cap) grow_bucket();
  std::size_t count = items_.size();
  while (count > 0 && items_[count - 1].size > cap) --count;
  return count;
}

Expression QuinelandSystem::make_expression(const QExprPtr& e) const {
  Expression out;
  out.payload = serialize(*e);
  if (is_formula(*e))
    out.kind = has_free_x(*e) ? ExprKind::ProperFormula : ExprKind::Sentence;
  else
    out.kind = ExprKind::Other;
  return out;
}

Expression QuinelandSystem::expression(std::string_view payload) const {
  return make_expression(parse_expr(payload));
}

bool QuinelandSystem::is_name(const Name& n) const {
  try {
    QExprPtr t = parse_term(n.payload);
    return t->tag == QExpr::Tag::Quote && is_formula(*t->a);
  } catch (const SyntaxError&) {
    return false;
  }
}

Name QuinelandSystem::name_of(const Expression& formula) const {
  if (!formula.is_formula()) throw NotAFormula("name_of: not a formula: " + formula.payload);
  return Name{"<" + formula.payload + ">"};
}

Expression QuinelandSystem::formula_of(const Name& n, std::size_t) const {
  QExprPtr t;
  try {
    t = parse_term(n.payload);
  } catch (const SyntaxError&) {
    throw NotAName("formula_of: not a name: " + n.payload);
  }
  if (t->tag != QExpr::Tag::Quote || !is_formula(*t->a))
    throw NotAName("formula_of: names are quotes of formulas: " + n.payload);
  return make_expression(t->a);
}

Expression QuinelandSystem::substitute(const Expression& formula, const Name& n) const {
  if (!formula.is_formula())
    throw NotAFormula("substitute: not a formula: " + formula.payload);
  if (!is_name(n)) throw NotAName("substitute: not a name: " + n.payload);
  if (formula.is_sentence()) return formula;
  QExprPtr f = parse_formula(formula.payload);
  QExprPtr name_term = parse_term(n.payload);
  return make_expression(substitute_free_x(f, name_term));
}

std::vector<Expression> QuinelandSystem::enumerate_formulas(std::size_t count) const {
  std::vector<Expression> out;
  out.reserve(count);
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < count; ++i) {
    const QFormulaEnumerator::Item& item = enumerator_.at(i);
    Expression e;
    e.payload = item.payload;
    e.kind = has_free_x(*item.formula) ? ExprKind::ProperFormula : ExprKind::Sentence;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Name> QuinelandSystem::enumerate_names(std::size_t count) const {
  std::vector<Name> out;
  out.reserve(count);
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(Name{"<" + enumerator_.at(i).payload + ">"});
  return out;
}

bool QuinelandSystem::truth(const Expression& sentence) const {
  if (!sentence.is_sentence()) throw NotAFormula("truth: not a sentence: " + sentence.payload);
  QExprPtr s = parse_formula(sentence.payload);
  std::lock_guard lock(mutex_);
  return oracles_.truth(s);
}

bool QuinelandSystem::printable(const Expression& sentence) const {
  if (!sentence.is_sentence())
    throw NotAFormula("printable: not a sentence: " + sentence.payload);
  QExprPtr s = parse_formula(sentence.payload);
  std::lock_guard lock(mutex_);
  return oracles_.printable(s);
}

std::optional<std::size_t> QuinelandSystem::min_proof_length(const Expression& sentence) const {
  if (!sentence.is_sentence())
    throw NotAFormula("min_proof_length: not a sentence: " + sentence.payload);
  QExprPtr s = parse_formula(sentence.payload);
  std::lock_guard lock(mutex_);
  return oracles_.min_proof_length(s);
}

std::optional<Derivation> QuinelandSystem::derivation_of(const Expression& sentence) const {
  if (!sentence.is_sentence())
    throw NotAFormula("derivation: not a sentence: " + sentence.payload);
  QExprPtr s = parse_formula(sentence.payload);
  std::lock_guard lock(mutex_);
  return oracles_.derivation(s);
}

Expression QuinelandSystem::long_theorem_sentence(std::size_t n) const {
  return make_expression(long_theorem(n));
}

GoedelFacts QuinelandSystem::goedel() const {
  std::lock_guard lock(mutex_);
  return goedel_sentence(oracles_);
}

Expression QuinelandSystem::transform_for_truth(const Expression& formula) const {
  if (!formula.is_formula())
    throw NotAFormula("self_ref_transform: not a formula: " + formula.payload);
  return make_expression(self_ref_transform(parse_formula(formula.payload)));
}

std::size_t QuinelandSystem::formula_count_up_to_size(std::size_t cap) const {
  std::lock_guard lock(mutex_);
  return enumerator_.count_up_to_size(cap);
}

Expression QuinelandSystem::enumerated_at(std::size_t index) const {
  std::lock_guard lock(mutex_);
  const QFormulaEnumerator::Item& item = enumerator_.at(index);
  Expression e;
  e.payload = item.payload;
  e.kind = has_free_x(*item.formula) ? ExprKind::ProperFormula : ExprKind::Sentence;
  return e;
}

SentenceSet QuinelandSystem::truth_set() const {
  SentenceSet t;
  t.label = "T";
  t.member = [this](const Expression& e) { return e.is_sentence() && truth(e); };
  return t;
}

SentenceSet QuinelandSystem::printable_set() const {
  SentenceSet p;
  p.label = "P";
  p.member = [this](const Expression& e) { return e.is_sentence() && printable(e); };
  return p;
}

}  // namespace liarlab::quineland
