#ifndef LIARLAB_QUINELAND_SEMANTICS_HPP
#define LIARLAB_QUINELAND_SEMANTICS_HPP

#include "liarlab/quineland/ast.hpp"
#include "liarlab/quineland/proofs.hpp"

namespace liarlab::quineland {

// Denotation of a closed term, always a quotation:
//   <e>     denotes itself;
//   diag(t) with t denoting <f>, f a formula, denotes <f[<f>]>;
//   diag of a quoted non-formula denotes that quotation unchanged.
QExprPtr denote(const QExprPtr& term);

// phi with every free x replaced by diag(x). When phi T-represents X, the
// result T-represents the diagonal transform of X: truth only inspects the
// denotation of Pr's argument, and diag(x) at name n denotes g(g^{-1}(n)[n]).
QExprPtr self_ref_transform(const QExprPtr& formula);

struct GoedelFacts {
  QExprPtr pi;              // ~Pr(diag(x))
  QExprPtr lambda;          // ~Pr(diag(<~Pr(diag(x))>))
  bool diag_fixed_point;    // denote of lambda's diag term is <lambda>
  bool truth_lambda;        // true: lambda asserts its own unprintability
  bool printable_lambda;    // false
  bool printable_negation;  // false: the system cannot refute lambda either
};

GoedelFacts goedel_sentence(Oracles& oracles);

}  // namespace liarlab::quineland

#endif
