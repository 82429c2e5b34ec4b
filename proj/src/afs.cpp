#include "liarlab/afs.hpp"

#include <utility>

namespace liarlab {

NameSet NameSet::complement() const {
  NameSet out;
  out.label = "~(" + label + ")";
  out.member = [inner = member](const Name& n) { return !inner(n); };
  out.base = base;
  out.base_complemented = base ? !base_complemented : false;
  return out;
}

Expression substitute(const SystemInstance& sys, const Expression& phi, const Name& n) {
  if (!phi.is_formula())
    throw NotAFormula("substitute: not a formula: " + phi.payload);
  if (!sys.is_name(n))
    throw NotAName("substitute: not a name of " + std::string(sys.tag()) + ": " + n.payload);
  if (phi.is_sentence()) return phi;
  return sys.substitute(phi, n);
}

NameSet image_under_naming(const SystemInstance& sys, const SentenceSet& c, std::size_t bound) {
  NameSet out;
  out.label = "img(" + c.label + ")";
  out.base = std::make_shared<SentenceSet>(c);
  out.base_complemented = false;
  out.member = [&sys, base = out.base, bound](const Name& n) {
    return base->member(sys.formula_of(n, bound));
  };
  return out;
}

Expression diagonal_sentence(const SystemInstance& sys, const Expression& pi) {
  return substitute(sys, pi, sys.name_of(pi));
}

NameSet diagonal_name_set(const SystemInstance& sys, const NameSet& x) {
  NameSet out;
  out.label = "diag(" + x.label + ")";
  if (x.base) {
    // X = g*C (or its complement): X.member(g(lambda)) == C.member(lambda)
    // up to the complement flag, by injectivity of g on formulas.
    out.member = [&sys, base = x.base, comp = x.base_complemented](const Name& n) {
      const Expression lambda = substitute(sys, sys.formula_of(n), n);
      const bool in_c = base->member(lambda);
      return comp ? !in_c : in_c;
    };
  } else {
    out.member = [&sys, mem = x.member](const Name& n) {
      const Expression lambda = substitute(sys, sys.formula_of(n), n);
      return mem(sys.name_of(lambda));
    };
  }
  return out;
}

std::optional<ViolationReport> check_representation(const SystemInstance& sys,
                                                    const Expression& phi, const NameSet& x,
                                                    const SentenceSet& a,
                                                    std::span<const Name> sample) {
  if (sample.empty()) throw Error("check_representation: empty sample");
  for (const Name& n : sample) {
    const Expression instance = substitute(sys, phi, n);
    const bool lhs = a.member(instance);
    const bool rhs = x.member(n);
    if (lhs != rhs) {
      ViolationReport report;
      report.witness_name = n;
      report.lhs = lhs;
      report.rhs = rhs;
      report.lambda = instance;
      report.narrative = "representation of " + x.label + " by " + phi.payload + " via " +
                         a.label + " fails at name " + n.payload;
      return report;
    }
  }
  return std::nullopt;
}

ViolationReport liar_violation(const SystemInstance& sys, const Expression& pi,
                               const SentenceSet& t) {
  if (!pi.is_formula()) throw NotAFormula("liar_violation: not a formula: " + pi.payload);
  const Name n = sys.name_of(pi);
  const Expression lambda = substitute(sys, pi, n);

  ViolationReport report;
  report.witness_name = n;
  report.lambda = lambda;
  report.lhs = t.member(lambda);
  // n sits in {m : g^{-1}(m)[m] not in T} exactly when the recomputed
  // diagonal sentence falls outside T.
  report.rhs = !t.member(substitute(sys, sys.formula_of(n), n));
  report.narrative = "the set {n : g^{-1}(n)[n] not in " + t.label +
                     "} cannot be represented by " + pi.payload + ": at n = g(pi) the two sides " +
                     "of the biconditional are forced apart";
  return report;
}

GeneralizedLiarFacts generalized_liar_witness(const SystemInstance& sys, const SentenceSet& a,
                                              const SentenceSet& b, const Expression& pi) {
  if (!pi.is_formula())
    throw NotAFormula("generalized_liar_witness: not a formula: " + pi.payload);
  const Name n = sys.name_of(pi);

  GeneralizedLiarFacts facts;
  facts.lambda = substitute(sys, pi, n);
  facts.lambda_in_sentences = facts.lambda.is_sentence();
  facts.lambda_in_a = a.member(facts.lambda);
  facts.lambda_in_b = b.member(facts.lambda);

  // Does pi B-represent the diagonal of the complemented image of A, at
  // least at the one name the proof uses?
  const NameSet target = diagonal_name_set(sys, image_under_naming(sys, a).complement());
  const bool lhs = b.member(substitute(sys, pi, n));
  const bool rhs = target.member(n);
  facts.represents_diagonal_at_name = (lhs == rhs);
  // If it does, lambda is a sentence lying in exactly one of A and B, so
  // S-intersect-A and B differ.
  facts.separation_witnessed =
      facts.represents_diagonal_at_name && facts.lambda_in_sentences &&
      (facts.lambda_in_a != facts.lambda_in_b);
  return facts;
}

}  // namespace liarlab
