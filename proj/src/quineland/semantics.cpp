#include "liarlab/quineland/semantics.hpp"

#include "liarlab/errors.hpp"

namespace liarlab::quineland {

QExprPtr denote(const QExprPtr& term) {
  switch (term->tag) {
    case QExpr::Tag::Quote:
      return term;
    case QExpr::Tag::Diag: {
      const QExprPtr inner = denote(term->a);
      const QExprPtr& quoted = inner->a;
      if (is_formula(*quoted)) return quote(substitute_free_x(quoted, inner));
      return inner;  // identity fallback keeps denotation total
    }
    default:
      throw Error("denote: term is not closed");
  }
}

QExprPtr self_ref_transform(const QExprPtr& formula) {
  if (!is_formula(*formula)) throw NotAFormula("self_ref_transform: not a formula");
  return substitute_free_x(formula, diag(var_x()));
}

GoedelFacts goedel_sentence(Oracles& oracles) {
  GoedelFacts facts;
  facts.pi = neg(pr(diag(var_x())));
  facts.lambda = substitute_free_x(facts.pi, quote(facts.pi));
  facts.diag_fixed_point = equal(denote(diag(quote(facts.pi))), quote(facts.lambda));
  facts.truth_lambda = oracles.truth(facts.lambda);
  facts.printable_lambda = oracles.printable(facts.lambda);
  facts.printable_negation = oracles.printable(neg(facts.lambda));
  return facts;
}

}  // namespace liarlab::quineland
