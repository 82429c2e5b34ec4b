#ifndef LIARLAB_PRESBURGER_AST_HPP
#define LIARLAB_PRESBURGER_AST_HPP

// Additive arithmetic over the naturals: terms built from 0, 1, + and
// variables; formulas from =, ~, &, |, ->, E, A. Formulas carry at most one
// free variable, the designated `x`; bound variables are de Bruijn indexed.
//
// Canonical form:
//   * sums are flattened, non-empty atom lists (the right-nested tree is
//     implied); maximal runs of 1s collapse into a single numeral atom, so
//     numerals print as decimal digits;
//   * `!=` is parse sugar for ~(=) and never serializes;
//   * node counts are those of the implied tree, a numeral k counting as the
//     right-nested chain of k ones (2k-1 nodes, 1 node for 0).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace liarlab::presburger {

// One summand. A numeral's `value` is the denoted natural; a bound
// variable's `value` is its de Bruijn index (0 = innermost binder).
struct TermAtom {
  enum class Kind { Numeral, FreeX, Bound };
  Kind kind = Kind::Numeral;
  std::uint64_t value = 0;

  friend bool operator==(const TermAtom&, const TermAtom&) = default;
};

// Flattened sum. Invariant: non-empty, and no two adjacent positive numerals.
struct Term {
  std::vector<TermAtom> atoms;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Tag { Eq, Not, And, Or, Implies, Exists, Forall };
  Tag tag = Tag::Eq;
  Term lhs, rhs;          // Eq only
  FormulaPtr child;       // Not/Exists/Forall and left operand of binaries
  FormulaPtr child2;      // right operand of binaries
};

TermAtom numeral_atom(std::uint64_t value);
TermAtom free_x_atom();
TermAtom bound_atom(std::uint64_t index);

// Builds the canonical flattened sum of the given atom sequence, merging
// adjacent positive numerals. The sequence must be non-empty.
Term make_term(std::vector<TermAtom> atoms);
Term numeral(std::uint64_t value);

FormulaPtr eq(Term lhs, Term rhs);
FormulaPtr neg(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr exists(FormulaPtr body);
FormulaPtr forall(FormulaPtr body);

std::size_t node_count(const Term& t);
std::size_t node_count(const Formula& f);

bool has_free_x(const Formula& f);
bool is_sentence(const Formula& f);

bool equal(const Formula& a, const Formula& b);

std::string serialize(const Term& t, std::size_t depth);
std::string serialize(const Formula& f);

// phi with every free x replaced by the numeral for `value`.
FormulaPtr substitute_free_x(const Formula& phi, std::uint64_t value);

// body of a quantifier instantiated at `value` (the outermost binder, de
// Bruijn index 0, is consumed).
FormulaPtr instantiate_outer(const Formula& body, std::uint64_t value);

}  // namespace liarlab::presburger

#endif
