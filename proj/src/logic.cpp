#include "liarlab/logic.hpp"

#include <utility>

#include "liarlab/presburger/parser.hpp"
#include "liarlab/presburger/system.hpp"
#include "liarlab/quineland/system.hpp"

namespace liarlab::logic {

std::string_view variant_name(LimitationVariant v) {
  switch (v) {
    case LimitationVariant::GoedelSyntactic:
      return "goedel-syn";
    case LimitationVariant::GoedelSemantic:
      return "goedel-sem";
    case LimitationVariant::Tarski:
      return "tarski";
    case LimitationVariant::Church:
      return "church";
  }
  return "";
}

std::optional<LimitationVariant> variant_from_name(std::string_view name) {
  if (name == "goedel-syn") return LimitationVariant::GoedelSyntactic;
  if (name == "goedel-sem") return LimitationVariant::GoedelSemantic;
  if (name == "tarski") return LimitationVariant::Tarski;
  if (name == "church") return LimitationVariant::Church;
  return std::nullopt;
}

LimitationSets limitation_sets(const LogicalSystem& ls, LimitationVariant v) {
  SentenceSet not_p;
  not_p.label = "~P";
  not_p.member = [p = ls.provable](const Expression& e) {
    return e.is_formula() && !p.member(e);
  };

  SentenceSet p_preimage;
  p_preimage.label = "P'";
  p_preimage.member = [p = ls.provable, negate = ls.negate](const Expression& e) {
    return e.is_sentence() && p.member(negate(e));
  };

  switch (v) {
    case LimitationVariant::GoedelSyntactic:
      return {not_p, p_preimage};
    case LimitationVariant::GoedelSemantic:
      return {ls.provable, ls.truth};
    case LimitationVariant::Tarski:
      return {ls.truth, ls.truth};
    case LimitationVariant::Church:
      return {ls.provable, ls.provable};
  }
  return {ls.truth, ls.truth};
}

std::vector<Expression> first_sentences(const SystemInstance& sys, std::size_t count) {
  std::vector<Expression> out;
  std::size_t fetch = count == 0 ? 1 : 2 * count;
  while (out.size() < count) {
    const std::vector<Expression> formulas = sys.enumerate_formulas(fetch);
    out.clear();
    for (const Expression& e : formulas) {
      if (e.is_sentence()) out.push_back(e);
      if (out.size() == count) break;
    }
    if (out.size() == count) break;
    if (formulas.size() < fetch) break;  // finite instance exhausted
    fetch *= 2;
  }
  return out;
}

std::optional<ViolationReport> negation_axiom_check(const LogicalSystem& ls,
                                                    std::size_t formula_count,
                                                    std::size_t name_count) {
  const std::vector<Expression> formulas = ls.base->enumerate_formulas(formula_count);
  const std::vector<Name> names = ls.base->enumerate_names(name_count);
  for (const Expression& phi : formulas) {
    const Expression once = ls.negate(phi);
    const Expression twice = ls.negate(once);
    for (const Name& n : names) {
      const Expression at = substitute(*ls.base, phi, n);
      const bool in_t = ls.truth.member(at);
      const bool negated_in_t = ls.truth.member(substitute(*ls.base, once, n));
      if (in_t != !negated_in_t) {
        ViolationReport report;
        report.witness_name = n;
        report.lhs = in_t;
        report.rhs = !negated_in_t;
        report.lambda = at;
        report.narrative = "negation axiom (a) fails for " + phi.payload + " at " + n.payload;
        return report;
      }
      const bool in_p = ls.provable.member(at);
      const bool twice_in_p = ls.provable.member(substitute(*ls.base, twice, n));
      if (in_p != twice_in_p) {
        ViolationReport report;
        report.witness_name = n;
        report.lhs = in_p;
        report.rhs = twice_in_p;
        report.lambda = at;
        report.narrative = "negation axiom (b) fails for " + phi.payload + " at " + n.payload;
        return report;
      }
    }
  }
  return std::nullopt;
}

std::optional<Expression> consistency_check(const LogicalSystem& ls, std::size_t count) {
  for (const Expression& sigma : first_sentences(*ls.base, count)) {
    if (ls.provable.member(sigma) && ls.provable.member(ls.negate(sigma))) return sigma;
  }
  return std::nullopt;
}

std::optional<Expression> completeness_check(const LogicalSystem& ls, std::size_t count) {
  for (const Expression& sigma : first_sentences(*ls.base, count)) {
    const Expression negated = ls.negate(sigma);
    if (!ls.provable.member(sigma) && !ls.provable.member(negated)) {
      if (ls.truth.member(sigma)) return sigma;
      if (ls.truth.member(negated)) return negated;
      return sigma;
    }
  }
  return std::nullopt;
}

std::optional<Expression> soundness_check(const LogicalSystem& ls, std::size_t count) {
  for (const Expression& sigma : first_sentences(*ls.base, count)) {
    if (ls.provable.member(sigma) && !ls.truth.member(sigma)) return sigma;
  }
  return std::nullopt;
}

GeneralizedLiarFacts limitation_witness(const LogicalSystem& ls, LimitationVariant v,
                                        const Expression& pi) {
  const LimitationSets sets = limitation_sets(ls, v);
  return generalized_liar_witness(*ls.base, sets.a, sets.b, pi);
}

ViolationReport tarski_counterexample(const LogicalSystem& ls, const Expression& phi) {
  if (!ls.self_ref_truth)
    throw NoSelfRefCapability("instance '" + std::string(ls.base->tag()) +
                              "' declares no self-reference transform for T");
  if (!phi.is_formula())
    throw NotAFormula("tarski_counterexample: not a formula: " + phi.payload);

  const Expression pi = ls.self_ref_truth(ls.negate(phi));
  const Expression lambda = diagonal_sentence(*ls.base, pi);
  const Name witness = ls.base->name_of(lambda);

  ViolationReport report;
  report.witness_name = witness;
  report.lambda = lambda;
  report.lhs = ls.truth.member(substitute(*ls.base, phi, witness));
  report.rhs = ls.truth.member(lambda);
  report.narrative = "candidate " + phi.payload +
                     " fails to T-represent the image of T at the name of " + lambda.payload;
  return report;
}

LogicalSystem make_logical_system(std::shared_ptr<const presburger::PresburgerSystem> sys) {
  LogicalSystem ls;
  ls.base = sys;
  ls.negate = [sys](const Expression& e) {
    if (!e.is_formula()) throw NotAFormula("negate: not a formula: " + e.payload);
    return sys->make_expression(presburger::neg(presburger::parse_formula(e.payload)));
  };
  ls.provable = sys->provable_set();
  ls.truth = sys->truth_set();
  // Complete, truth-definable, and self-referential with respect to neither
  // T nor P: no transforms.
  return ls;
}

LogicalSystem make_logical_system(std::shared_ptr<const quineland::QuinelandSystem> sys) {
  LogicalSystem ls;
  ls.base = sys;
  ls.negate = [sys](const Expression& e) {
    if (!e.is_formula()) throw NotAFormula("negate: not a formula: " + e.payload);
    return sys->make_expression(quineland::neg(quineland::parse_formula(e.payload)));
  };
  ls.provable = sys->printable_set();
  ls.truth = sys->truth_set();
  ls.self_ref_truth = [sys](const Expression& e) { return sys->transform_for_truth(e); };
  // The printer's R3 demands a literal quoted sentence, so no transform for P.
  return ls;
}

}  // namespace liarlab::logic
