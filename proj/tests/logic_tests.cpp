#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "liarlab/logic.hpp"
#include "liarlab/presburger/system.hpp"
#include "liarlab/quineland/system.hpp"
#include "toy_system.hpp"

using namespace liarlab;
using namespace liarlab::logic;
using tests::ToySystem;
using tests::toy_logical_system;

namespace {

LogicalSystem pres() {
  return make_logical_system(std::make_shared<presburger::PresburgerSystem>());
}

LogicalSystem quine() {
  return make_logical_system(std::make_shared<quineland::QuinelandSystem>());
}

}  // namespace

TEST_CASE("negation axioms hold on both instances over a 200x50 grid") {
  CHECK_FALSE(negation_axiom_check(quine(), 200, 50).has_value());
  CHECK_FALSE(negation_axiom_check(pres(), 200, 50).has_value());
}

TEST_CASE("an identity negation violates axiom (a)") {
  auto sys = std::make_shared<ToySystem>();
  LogicalSystem broken = toy_logical_system(sys);
  broken.negate = [](const Expression& e) { return e; };
  const auto violation = negation_axiom_check(broken, 8, 4);
  REQUIRE(violation.has_value());
  CHECK(violation->lhs != violation->rhs);
}

TEST_CASE("consistency: both instances pass, an everything-printer fails") {
  CHECK_FALSE(consistency_check(quine(), 300).has_value());
  CHECK_FALSE(consistency_check(pres(), 300).has_value());

  auto sys = std::make_shared<ToySystem>();
  LogicalSystem everything =
      toy_logical_system(sys, [](std::size_t) { return true; });
  const auto witness = consistency_check(everything, 8);
  REQUIRE(witness.has_value());
  CHECK(witness->payload == "s0");  // first enumerated sentence
}

TEST_CASE("completeness: presburger passes, quineland yields a true unprovable witness") {
  CHECK_FALSE(completeness_check(pres(), 300).has_value());

  const LogicalSystem q = quine();
  const auto witness = completeness_check(q, 300);
  REQUIRE(witness.has_value());
  CHECK(q.truth.member(*witness));
  CHECK_FALSE(q.provable.member(*witness));
  CHECK_FALSE(q.provable.member(q.negate(*witness)));
  CHECK_FALSE(q.truth.member(q.negate(*witness)));

  // P = T makes any toy system complete
  auto sys = std::make_shared<ToySystem>();
  CHECK_FALSE(completeness_check(toy_logical_system(sys), 8).has_value());
}

TEST_CASE("the goedel sentence is itself a completeness witness") {
  auto base = std::make_shared<quineland::QuinelandSystem>();
  const LogicalSystem q = make_logical_system(base);
  const quineland::GoedelFacts facts = base->goedel();
  const Expression lambda = base->make_expression(facts.lambda);
  CHECK(q.truth.member(lambda));
  CHECK_FALSE(q.provable.member(lambda));
  CHECK_FALSE(q.provable.member(q.negate(lambda)));
}

TEST_CASE("soundness: both instances pass, a lying printer is caught") {
  CHECK_FALSE(soundness_check(quine(), 300).has_value());
  CHECK_FALSE(soundness_check(pres(), 300).has_value());

  auto sys = std::make_shared<ToySystem>();
  // prints exactly one false sentence: s1 (odd-indexed, so outside T)
  LogicalSystem lying = toy_logical_system(sys, [](std::size_t i) { return i == 1; });
  const auto witness = soundness_check(lying, 8);
  REQUIRE(witness.has_value());
  CHECK(witness->payload == "s1");
}

TEST_CASE("soundness plus completeness pins P to T on the checked prefix") {
  const LogicalSystem p = pres();
  REQUIRE_FALSE(soundness_check(p, 200).has_value());
  REQUIRE_FALSE(completeness_check(p, 200).has_value());
  for (const Expression& sigma : first_sentences(*p.base, 200))
    CHECK(p.provable.member(sigma) == p.truth.member(sigma));
}

TEST_CASE("limitation witnesses follow the substitution table") {
  const LogicalSystem systems[] = {pres(), quine()};
  const LimitationVariant variants[] = {
      LimitationVariant::GoedelSyntactic, LimitationVariant::GoedelSemantic,
      LimitationVariant::Tarski, LimitationVariant::Church};
  for (const LogicalSystem& ls : systems) {
    const auto formulas = ls.base->enumerate_formulas(40);
    for (const LimitationVariant v : variants) {
      const LimitationSets sets = limitation_sets(ls, v);
      for (const Expression& pi : formulas) {
        const GeneralizedLiarFacts via_table = limitation_witness(ls, v, pi);
        const GeneralizedLiarFacts direct =
            generalized_liar_witness(*ls.base, sets.a, sets.b, pi);
        CHECK(via_table.lambda == direct.lambda);
        CHECK(via_table.lambda_in_a == direct.lambda_in_a);
        CHECK(via_table.lambda_in_b == direct.lambda_in_b);
        CHECK(via_table.represents_diagonal_at_name == direct.represents_diagonal_at_name);
        CHECK(via_table.separation_witnessed == direct.separation_witnessed);
        // tarski and church can never see the representation fact hold
        if (v == LimitationVariant::Tarski || v == LimitationVariant::Church)
          CHECK_FALSE(via_table.represents_diagonal_at_name);
      }
    }
  }
}

TEST_CASE("goedel-semantic witness on the canonical pi exhibits P != T") {
  auto base = std::make_shared<quineland::QuinelandSystem>();
  const LogicalSystem q = make_logical_system(base);
  const Expression pi = base->expression("~Pr(diag(x))");
  const GeneralizedLiarFacts facts =
      limitation_witness(q, LimitationVariant::GoedelSemantic, pi);
  CHECK(facts.lambda_in_b);         // lambda is true
  CHECK_FALSE(facts.lambda_in_a);   // lambda is unprovable
  CHECK(facts.represents_diagonal_at_name);
  CHECK(facts.separation_witnessed);
}

TEST_CASE("tarski witness fails the representation fact on presburger") {
  const LogicalSystem p = pres();
  const Expression pi = p.base->expression("E y. y+y = x");
  const GeneralizedLiarFacts facts = limitation_witness(p, LimitationVariant::Tarski, pi);
  CHECK_FALSE(facts.represents_diagonal_at_name);
  CHECK(facts.lambda_in_a == facts.lambda_in_b);  // A = B = T
}

TEST_CASE("church variant is total in pi") {
  const LogicalSystem q = quine();
  for (const Expression& pi : q.base->enumerate_formulas(30)) {
    const GeneralizedLiarFacts facts = limitation_witness(q, LimitationVariant::Church, pi);
    CHECK_FALSE(facts.represents_diagonal_at_name);
  }
}

TEST_CASE("tarski counterexamples on quineland candidates") {
  auto base = std::make_shared<quineland::QuinelandSystem>();
  const LogicalSystem q = make_logical_system(base);

  const ViolationReport pr_report = tarski_counterexample(q, base->expression("Pr(x)"));
  CHECK(pr_report.lhs != pr_report.rhs);
  REQUIRE(pr_report.lambda.has_value());
  // pi = ~Pr(diag(x)): the constructed lambda is the goedel sentence
  CHECK(pr_report.lambda->payload == "~Pr(diag(<~Pr(diag(x))>))");
  CHECK_FALSE(pr_report.lhs);  // Pr(<lambda>) is false
  CHECK(pr_report.rhs);        // lambda is true

  const ViolationReport not_report = tarski_counterexample(q, base->expression("~Pr(x)"));
  CHECK(not_report.lhs != not_report.rhs);

  // a sentence candidate degenerates but still violates
  const ViolationReport sigma_report =
      tarski_counterexample(q, base->expression("Pr(<x>)"));
  CHECK(sigma_report.lhs != sigma_report.rhs);
}

TEST_CASE("tarski counterexamples never pass on small quineland formulas") {
  auto base = std::make_shared<quineland::QuinelandSystem>();
  const LogicalSystem q = make_logical_system(base);
  const std::size_t count = base->formula_count_up_to_size(6);
  for (std::size_t i = 0; i < count; ++i) {
    const ViolationReport report = tarski_counterexample(q, base->enumerated_at(i));
    CHECK(report.lhs != report.rhs);
  }
}

TEST_CASE("presburger declares no self-reference capability") {
  const LogicalSystem p = pres();
  CHECK_THROWS_AS(tarski_counterexample(p, p.base->expression("E y. y+y = x")),
                  NoSelfRefCapability);
}

TEST_CASE("liar violations on the documented examples") {
  auto qsys = std::make_shared<quineland::QuinelandSystem>();
  const LogicalSystem q = make_logical_system(qsys);

  // pi a proper formula: lambda = Pr(<Pr(x)>) names an unprintable formula
  const ViolationReport a = liar_violation(*q.base, qsys->expression("Pr(x)"), q.truth);
  CHECK_FALSE(a.lhs);
  CHECK(a.rhs);
  CHECK(a.lambda->payload == "Pr(<Pr(x)>)");

  // pi already a sentence: lambda = pi, true, so the set membership flips
  const ViolationReport b = liar_violation(*q.base, qsys->expression("~Pr(<x>)"), q.truth);
  CHECK(b.lhs);
  CHECK_FALSE(b.rhs);

  auto psys = std::make_shared<presburger::PresburgerSystem>();
  const LogicalSystem p = make_logical_system(psys);
  const ViolationReport c =
      liar_violation(*p.base, psys->expression("E y. y+y = x"), p.truth);
  CHECK(c.lhs != c.rhs);
  CHECK(c.lhs == p.truth.member(*c.lambda));
}

TEST_CASE("limitation variant names round-trip") {
  for (const LimitationVariant v :
       {LimitationVariant::GoedelSyntactic, LimitationVariant::GoedelSemantic,
        LimitationVariant::Tarski, LimitationVariant::Church}) {
    CHECK(variant_from_name(variant_name(v)) == v);
  }
  CHECK_FALSE(variant_from_name("epimenides").has_value());
}
