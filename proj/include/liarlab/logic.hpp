#ifndef LIARLAB_LOGIC_HPP
#define LIARLAB_LOGIC_HPP

// The logical-system layer: an abstract formal system with a negation map
// and distinguished provable and true sentence sets satisfying
//   (a)  phi[n] in T  iff  phi'[n] not in T
//   (b)  phi[n] in P  iff  phi''[n] in P
// plus the four limitation-theorem instantiations of the generalized liar
// engine and consistency / completeness / soundness checks over enumerated
// prefixes.

#include <functional>
#include <memory>
#include <optional>
#include <string_view>

#include "liarlab/afs.hpp"

namespace liarlab::logic {

// P and T are total on formulas (proper formulas are non-members, since
// P, T are sets of sentences). The self-reference transforms are per-set
// capabilities and may be absent. Oracles capture the base instance; the
// shared_ptr keeps it alive.
struct LogicalSystem {
  std::shared_ptr<const SystemInstance> base;
  std::function<Expression(const Expression&)> negate;
  SentenceSet provable;
  SentenceSet truth;
  std::function<Expression(const Expression&)> self_ref_truth;
  std::function<Expression(const Expression&)> self_ref_provable;
};

enum class LimitationVariant { GoedelSyntactic, GoedelSemantic, Tarski, Church };

std::string_view variant_name(LimitationVariant v);
std::optional<LimitationVariant> variant_from_name(std::string_view name);

// The substitution table of the limitation theorem:
//   goedel_syntactic: A = ~P, B = P'    goedel_semantic: A = P, B = T
//   tarski:           A = T,  B = T     church:          A = P, B = P
// where H' = {phi : phi' in H}, so membership in P' is decided by mapping
// forward through the negation.
struct LimitationSets {
  SentenceSet a;
  SentenceSet b;
};
LimitationSets limitation_sets(const LogicalSystem& ls, LimitationVariant v);

// Checks axioms (a) and (b) over the enumerated grid; first failure wins.
std::optional<ViolationReport> negation_axiom_check(const LogicalSystem& ls,
                                                    std::size_t formula_count,
                                                    std::size_t name_count);

// First enumerated sentence with both sigma and sigma' provable.
std::optional<Expression> consistency_check(const LogicalSystem& ls, std::size_t count);

// First enumerated sentence with neither sigma nor sigma' provable. The
// returned witness is the true member of the pair, so that a sound system's
// incompleteness witness is always a true unprovable sentence.
std::optional<Expression> completeness_check(const LogicalSystem& ls, std::size_t count);

// First enumerated provable sentence outside T.
std::optional<Expression> soundness_check(const LogicalSystem& ls, std::size_t count);

// Resolves (A, B) from the table and delegates to the generalized engine.
// For tarski and church the representation fact fails at g(pi) for every pi.
GeneralizedLiarFacts limitation_witness(const LogicalSystem& ls, LimitationVariant v,
                                        const Expression& pi);

// Builds pi from phi through negation and the instance's diagonal transform;
// the report exhibits (phi[g(lambda)] in T) != (lambda in T), both sides
// recomputed from T. Throws NoSelfRefCapability when the instance lacks the
// transform for T.
ViolationReport tarski_counterexample(const LogicalSystem& ls, const Expression& phi);

// First `count` sentences of the enumeration.
std::vector<Expression> first_sentences(const SystemInstance& sys, std::size_t count);

}  // namespace liarlab::logic

namespace liarlab::presburger {
class PresburgerSystem;
}
namespace liarlab::quineland {
class QuinelandSystem;
}

namespace liarlab::logic {

LogicalSystem make_logical_system(std::shared_ptr<const presburger::PresburgerSystem> sys);
LogicalSystem make_logical_system(std::shared_ptr<const quineland::QuinelandSystem> sys);

}  // namespace liarlab::logic

#endif
