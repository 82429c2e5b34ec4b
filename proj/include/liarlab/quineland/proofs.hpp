#ifndef LIARLAB_QUINELAND_PROOFS_HPP
#define LIARLAB_QUINELAND_PROOFS_HPP

// The printer: P is the least set containing the axiom ~Pr(<x>) and closed
// under
//   R1: sigma => (sigma & sigma)
//   R2: sigma => ~~sigma
//   R3: sigma => Pr(<sigma>)     (a literal quoted sentence; diag never
//                                 unfolds inside the printer)
// Every rule strictly grows the node count and every sentence has at most
// one immediate predecessor shape, so membership and exact minimal proof
// length fall out of deterministic backward unfolding.

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "liarlab/quineland/ast.hpp"

namespace liarlab::quineland {

// ~Pr(<x>): true because the quoted expression is not a sentence.
QExprPtr axiom();

struct Derivation {
  enum class Rule { Axiom, R1, R2, R3 };
  struct Step {
    QExprPtr sentence;
    Rule rule = Rule::Axiom;
    std::size_t premise = 0;  // index of the premise step for R1-R3
  };
  std::vector<Step> steps;
};

// Forward-checks every step against the rule system.
bool validate_derivation(const Derivation& d);

// A printable sentence whose minimal derivation length is exactly n: the
// (n-1)-fold R3 tower over the axiom.
QExprPtr long_theorem(std::size_t n);

// First `count` sentences of the forward closure of the axiom under R1-R3 in
// breadth-first order (children in rule order). Successor shapes are
// disjoint and predecessors unique, so no sentence repeats.
std::vector<QExprPtr> forward_closure(std::size_t count);

// The decidable oracles of the instance. Memo tables are pure caches keyed
// by node identity; cached trees are kept alive by the keys.
class Oracles {
 public:
  std::optional<std::size_t> min_proof_length(const QExprPtr& sentence);
  bool printable(const QExprPtr& sentence) { return min_proof_length(sentence).has_value(); }

  // Minimal witness derivation, when the sentence is printable.
  std::optional<Derivation> derivation(const QExprPtr& sentence);

  // Pr(t) is true iff the expression quoted by denote(t) is a printable
  // sentence; ~ and & are classical. Total: printability is decidable and
  // truth never recurses through it.
  bool truth(const QExprPtr& sentence);

 private:
  struct PtrHash {
    std::size_t operator()(const QExprPtr& p) const {
      return std::hash<const QExpr*>()(p.get());
    }
  };
  struct PtrEq {
    bool operator()(const QExprPtr& a, const QExprPtr& b) const { return a.get() == b.get(); }
  };

  std::unordered_map<QExprPtr, std::optional<std::size_t>, PtrHash, PtrEq> length_memo_;
  std::unordered_map<QExprPtr, bool, PtrHash, PtrEq> truth_memo_;
};

}  // namespace liarlab::quineland

#endif
