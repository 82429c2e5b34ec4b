#include "liarlab/quineland/proofs.hpp"

#include <deque>

#include "liarlab/errors.hpp"
#include "liarlab/quineland/semantics.hpp"

namespace liarlab::quineland {

QExprPtr axiom() {
  static const QExprPtr kAxiom = neg(pr(quote(var_x())));
  return kAxiom;
}

namespace {

struct Predecessor {
  QExprPtr sentence;
  Derivation::Rule rule;
};

// The unique predecessor of a non-axiom sentence, if any.
std::optional<Predecessor> backward_step(const QExprPtr& s) {
  switch (s->tag) {
    case QExpr::Tag::And:
      if (equal(s->a, s->b)) return Predecessor{s->a, Derivation::Rule::R1};
      return std::nullopt;
    case QExpr::Tag::Not:
      if (s->a->tag == QExpr::Tag::Not) return Predecessor{s->a->a, Derivation::Rule::R2};
      return std::nullopt;
    case QExpr::Tag::Pr:
      if (s->a->tag == QExpr::Tag::Quote && is_sentence(*s->a->a))
        return Predecessor{s->a->a, Derivation::Rule::R3};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<std::size_t> Oracles::min_proof_length(const QExprPtr& sentence) {
  if (!is_sentence(*sentence)) throw Error("printable: not a sentence");
  if (auto it = length_memo_.find(sentence); it != length_memo_.end()) return it->second;

  std::optional<std::size_t> result;
  if (equal(sentence, axiom())) {
    result = 1;
  } else if (auto pred = backward_step(sentence)) {
    if (auto below = min_proof_length(pred->sentence)) result = *below + 1;
  }
  length_memo_.emplace(sentence, result);
  return result;
}

std::optional<Derivation> Oracles::derivation(const QExprPtr& sentence) {
  if (!printable(sentence)) return std::nullopt;
  std::vector<Derivation::Step> reversed;
  QExprPtr at = sentence;
  while (!equal(at, axiom())) {
    const auto pred = backward_step(at);
    reversed.push_back({at, pred->rule, 0});
    at = pred->sentence;
  }
  reversed.push_back({at, Derivation::Rule::Axiom, 0});

  Derivation d;
  d.steps.reserve(reversed.size());
  for (std::size_t i = reversed.size(); i-- > 0;) {
    Derivation::Step step = reversed[i];
    step.premise = d.steps.empty() ? 0 : d.steps.size() - 1;
    d.steps.push_back(std::move(step));
  }
  return d;
}

bool Oracles::truth(const QExprPtr& sentence) {
  if (!is_sentence(*sentence)) throw Error("truth: not a sentence");
  if (auto it = truth_memo_.find(sentence); it != truth_memo_.end()) return it->second;

  bool result = false;
  switch (sentence->tag) {
    case QExpr::Tag::Pr: {
      const QExprPtr name = denote(sentence->a);
      const QExprPtr& quoted = name->a;
      result = is_sentence(*quoted) && printable(quoted);
      break;
    }
    case QExpr::Tag::Not:
      result = !truth(sentence->a);
      break;
    case QExpr::Tag::And:
      result = truth(sentence->a) && truth(sentence->b);
      break;
    default:
      break;
  }
  truth_memo_.emplace(sentence, result);
  return result;
}

bool validate_derivation(const Derivation& d) {
  if (d.steps.empty()) return false;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Derivation::Step& step = d.steps[i];
    if (step.rule == Derivation::Rule::Axiom) {
      if (!equal(step.sentence, axiom())) return false;
      continue;
    }
    if (step.premise >= i) return false;
    const QExprPtr& from = d.steps[step.premise].sentence;
    QExprPtr expected;
    switch (step.rule) {
      case Derivation::Rule::R1:
        expected = conj(from, from);
        break;
      case Derivation::Rule::R2:
        expected = neg(neg(from));
        break;
      case Derivation::Rule::R3:
        expected = pr(quote(from));
        break;
      default:
        return false;
    }
    if (!equal(step.sentence, expected)) return false;
  }
  return true;
}

QExprPtr long_theorem(std::size_t n) {
  if (n == 0) throw Error("long_theorem: n must be >= 1");
  QExprPtr t = axiom();
  for (std::size_t i = 1; i < n; ++i) t = pr(quote(t));
  return t;
}

std::vector<QExprPtr> forward_closure(std::size_t count) {
  std::vector<QExprPtr> out;
  out.reserve(count);
  std::deque<QExprPtr> queue{axiom()};
  while (out.size() < count) {
    QExprPtr s = std::move(queue.front());
    queue.pop_front();
    queue.push_back(conj(s, s));
    queue.push_back(neg(neg(s)));
    queue.push_back(pr(quote(s)));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace liarlab::quineland
