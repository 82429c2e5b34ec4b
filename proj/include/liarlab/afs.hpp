#ifndef LIARLAB_AFS_HPP
#define LIARLAB_AFS_HPP

// The abstract formal system kernel: a six-part capability bundle
// (expressions, sentences, formulas, names, naming, substitution) plus the
// representability checks and the diagonal witness engines built on it.
//
// The kernel never enumerates a whole language. Universal claims are checked
// on deterministic bounded prefixes; a `pass` result means "not refuted on
// this sample". The forced-violation constructions (liar_violation and
// friends) need no search at all.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liarlab/errors.hpp"

namespace liarlab {

enum class ExprKind { Sentence, ProperFormula, Other };

// An expression of some instance, identified by its canonical serialization.
// Equality of expressions is equality of payloads; `kind` is a pure function
// of the payload (the instance classifies on construction).
struct Expression {
  std::string payload;
  ExprKind kind = ExprKind::Other;

  bool is_sentence() const { return kind == ExprKind::Sentence; }
  bool is_proper_formula() const { return kind == ExprKind::ProperFormula; }
  bool is_formula() const { return kind != ExprKind::Other; }

  friend bool operator==(const Expression& a, const Expression& b) {
    return a.payload == b.payload;
  }
  friend auto operator<=>(const Expression& a, const Expression& b) {
    return a.payload <=> b.payload;
  }
};

// A name. Payloads are instance-specific (a decimal natural for the
// arithmetic instance, a quoted formula for the quotation instance) and
// disjoint from formula payloads.
struct Name {
  std::string payload;

  friend bool operator==(const Name& a, const Name& b) { return a.payload == b.payload; }
  friend auto operator<=>(const Name& a, const Name& b) { return a.payload <=> b.payload; }
};

// The capability bundle an instance supplies. All operations must be
// deterministic; enumerations are prefix-stable (same count, same sequence).
// Oracle calls must be safe for concurrent readers.
class SystemInstance {
 public:
  virtual ~SystemInstance() = default;

  virtual std::string_view tag() const = 0;

  // Builds an Expression from serialized syntax, classifying it.
  // Throws SyntaxError when the payload is not an expression of the instance.
  virtual Expression expression(std::string_view payload) const = 0;

  virtual bool is_name(const Name& n) const = 0;

  // g: the naming function, injective on every enumerated prefix.
  virtual Name name_of(const Expression& formula) const = 0;

  // g^{-1}. `budget` caps any internal enumeration; 0 means the instance
  // default. Throws NameUnassigned when the name cannot be resolved.
  virtual Expression formula_of(const Name& n, std::size_t budget = 0) const = 0;

  // s: F x N -> S, with s(sigma, n) = sigma for every sentence sigma.
  virtual Expression substitute(const Expression& formula, const Name& n) const = 0;

  virtual std::vector<Expression> enumerate_formulas(std::size_t count) const = 0;

  // Names of the first `count` enumerated formulas, in enumeration order.
  virtual std::vector<Name> enumerate_names(std::size_t count) const = 0;
};

// A labeled total decision oracle over sentences. Shipped oracles are total
// over all formulas (proper formulas are classified as non-members), which is
// what the witness engines need.
struct SentenceSet {
  std::string label;
  std::function<bool(const Expression&)> member;
};

// A labeled total decision oracle over names. When the set is the g-image of
// a sentence set (possibly complemented), `base` records that provenance so
// that membership can be decided through g^{-1}, per the image contract
// n in bold-C  iff  formula_of(n) in C.
struct NameSet {
  std::string label;
  std::function<bool(const Name&)> member;
  std::shared_ptr<const SentenceSet> base;
  bool base_complemented = false;

  NameSet complement() const;
};

// Materialized failure (or forced failure) of a representability
// biconditional at a witness name: lhs = (phi[n] in A), rhs = (n in X).
struct ViolationReport {
  Name witness_name;
  bool lhs = false;
  bool rhs = false;
  std::optional<Expression> lambda;
  std::string narrative;
};

// The record produced by the generalized liar engine. All four booleans are
// recomputable from the supplied oracles.
struct GeneralizedLiarFacts {
  Expression lambda;
  bool lambda_in_sentences = false;
  bool lambda_in_a = false;
  bool lambda_in_b = false;
  // Whether pi B-represents the diagonal of the complemented image of A at
  // the single name n = g(pi).
  bool represents_diagonal_at_name = false;
  // When the representation fact holds, lambda exhibits S-intersect-A != B.
  bool separation_witnessed = false;
};

// s(phi, n). Throws NotAFormula / NotAName when inputs fail classification.
Expression substitute(const SystemInstance& sys, const Expression& phi, const Name& n);

// The image of C under g, as a name oracle deciding membership through
// g^{-1}. `bound` caps the enumeration the instance may need to resolve a
// name (0 = instance default).
NameSet image_under_naming(const SystemInstance& sys, const SentenceSet& c, std::size_t bound = 0);

// lambda = pi[g(pi)].
Expression diagonal_sentence(const SystemInstance& sys, const Expression& pi);

// The diagonal transform of X: n |-> X.member(g(g^{-1}(n)[n])). For image-
// backed X the composition collapses through g^{-1}, avoiding the naming of
// the substituted sentence.
NameSet diagonal_name_set(const SystemInstance& sys, const NameSet& x);

// First n in sample order with (phi[n] in A) != (n in X), or nullopt for
// "not refuted on this sample".
std::optional<ViolationReport> check_representation(const SystemInstance& sys,
                                                    const Expression& phi, const NameSet& x,
                                                    const SentenceSet& a,
                                                    std::span<const Name> sample);

// Instantiates the representability condition of {n : g^{-1}(n)[n] not in T}
// at n = g(pi). The biconditional fails for every pi: the report records
// lhs = (lambda in T) and rhs = (n in the set) = (lambda not in T), both
// recomputed from the oracle.
ViolationReport liar_violation(const SystemInstance& sys, const Expression& pi,
                               const SentenceSet& t);

// The generalized engine: lambda = pi[g(pi)] plus the four facts.
GeneralizedLiarFacts generalized_liar_witness(const SystemInstance& sys, const SentenceSet& a,
                                              const SentenceSet& b, const Expression& pi);

}  // namespace liarlab

#endif
