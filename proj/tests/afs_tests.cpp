#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liarlab/afs.hpp"
#include "toy_system.hpp"

using namespace liarlab;
using tests::ToySystem;

TEST_CASE("substitution is the identity on sentences and closes formulas") {
  ToySystem sys;
  const auto names = sys.enumerate_names(8);
  for (const Expression& f : sys.enumerate_formulas(16)) {
    for (const Name& n : names) {
      const Expression out = substitute(sys, f, n);
      CHECK(out.is_sentence());
      if (f.is_sentence()) CHECK(out == f);
    }
  }
}

TEST_CASE("substitution validates its inputs") {
  ToySystem sys;
  CHECK_THROWS_AS(substitute(sys, sys.expression("junk"), Name{"n0"}), NotAFormula);
  CHECK_THROWS_AS(substitute(sys, sys.expression("p0"), Name{"bogus"}), NotAName);
  CHECK_THROWS_AS(substitute(sys, sys.expression("p0"), Name{"n999"}), NotAName);
}

TEST_CASE("naming round-trips through the image oracle") {
  ToySystem sys;
  SentenceSet c;
  c.label = "C";
  c.member = [](const Expression& e) { return e.payload == "s0" || e.payload == "s3"; };
  const NameSet image = image_under_naming(sys, c);
  CHECK(image.member(sys.name_of(sys.expression("s0"))));
  CHECK(image.member(sys.name_of(sys.expression("s3"))));
  CHECK_FALSE(image.member(sys.name_of(sys.expression("s1"))));
  CHECK_FALSE(image.member(sys.name_of(sys.expression("p0"))));
  CHECK_THROWS_AS(image.member(Name{"n999"}), NameUnassigned);
}

TEST_CASE("complement flips membership on every name") {
  ToySystem sys;
  NameSet evens;
  evens.label = "E";
  evens.member = [](const Name& n) { return (n.payload.back() - '0') % 2 == 0; };
  const NameSet odds = evens.complement();
  for (const Name& n : sys.enumerate_names(16)) CHECK(odds.member(n) == !evens.member(n));
}

TEST_CASE("diagonal name set composes naming, substitution and the base set") {
  ToySystem sys;
  NameSet x;
  x.label = "X";
  x.member = [&sys](const Name& n) {
    return sys.formula_of(n).payload == "s2";  // names of s2 only
  };
  const NameSet diag = diagonal_name_set(sys, x);
  for (const Name& n : sys.enumerate_names(16)) {
    const Expression lambda = substitute(sys, sys.formula_of(n), n);
    CHECK(diag.member(n) == (lambda.payload == "s2"));
  }
}

TEST_CASE("image-backed diagonal agrees with the generic path") {
  ToySystem sys;
  SentenceSet c;
  c.label = "C";
  c.member = [](const Expression& e) { return e.payload == "s1" || e.payload == "s2"; };
  const NameSet image = image_under_naming(sys, c);
  REQUIRE(image.base != nullptr);

  NameSet plain;  // same extension, no provenance
  plain.label = image.label;
  plain.member = image.member;

  const NameSet fused = diagonal_name_set(sys, image);
  const NameSet generic = diagonal_name_set(sys, plain);
  for (const Name& n : sys.enumerate_names(16)) CHECK(fused.member(n) == generic.member(n));

  const NameSet fused_complement = diagonal_name_set(sys, image.complement());
  const NameSet generic_complement = diagonal_name_set(sys, plain.complement());
  for (const Name& n : sys.enumerate_names(16))
    CHECK(fused_complement.member(n) == generic_complement.member(n));
}

TEST_CASE("check_representation returns the first violation in sample order") {
  ToySystem sys;
  SentenceSet t;
  t.label = "T";
  t.member = [](const Expression& e) {
    return e.is_sentence() && (e.payload.back() - '0') % 2 == 0;
  };
  // p0[n_j] = s_{2j mod 8}, always even-indexed, so p0 T-represents the full
  // name set and nothing smaller.
  const Expression phi = sys.expression("p0");
  const auto names = sys.enumerate_names(8);

  NameSet full;
  full.label = "N";
  full.member = [](const Name&) { return true; };
  CHECK_FALSE(check_representation(sys, phi, full, t, names).has_value());

  // Against the image of T it must fail at the first odd-sentence name.
  NameSet evens = image_under_naming(sys, t);
  const auto violation = check_representation(sys, phi, evens, t, names);
  REQUIRE(violation.has_value());
  CHECK(violation->witness_name.payload == "n1");
  CHECK(violation->lhs);
  CHECK_FALSE(violation->rhs);
  CHECK(violation->lhs == t.member(substitute(sys, phi, violation->witness_name)));

  CHECK_THROWS_AS(check_representation(sys, phi, evens, t, {}), Error);
}

TEST_CASE("liar violation is forced for every formula and is deterministic") {
  ToySystem sys;
  SentenceSet t;
  t.label = "T";
  t.member = [](const Expression& e) {
    return e.is_sentence() && (e.payload.back() - '0') % 2 == 0;
  };
  for (const Expression& pi : sys.enumerate_formulas(16)) {
    const ViolationReport first = liar_violation(sys, pi, t);
    const ViolationReport second = liar_violation(sys, pi, t);
    CHECK(first.lhs != first.rhs);
    CHECK(first.lhs == second.lhs);
    CHECK(first.rhs == second.rhs);
    CHECK(first.witness_name == second.witness_name);
    REQUIRE(first.lambda.has_value());
    CHECK(first.lhs == t.member(*first.lambda));
  }
}

TEST_CASE("degenerate generalized liar: A everything, B empty") {
  ToySystem sys;
  SentenceSet a;
  a.label = "F";
  a.member = [](const Expression& e) { return e.is_formula(); };
  SentenceSet b;
  b.label = "empty";
  b.member = [](const Expression&) { return false; };

  for (const Expression& pi : sys.enumerate_formulas(16)) {
    const GeneralizedLiarFacts facts = generalized_liar_witness(sys, a, b, pi);
    CHECK(facts.lambda_in_sentences);
    CHECK(facts.lambda_in_a);
    CHECK_FALSE(facts.lambda_in_b);
    // Every formula B-represents the empty diagonal target when B is empty,
    // so lambda witnesses the separation S-intersect-A != B outright.
    CHECK(facts.represents_diagonal_at_name);
    CHECK(facts.separation_witnessed);
  }
}

TEST_CASE("generalized liar separation fact matches its definition") {
  ToySystem sys;
  SentenceSet t;
  t.label = "T";
  t.member = [](const Expression& e) {
    return e.is_sentence() && (e.payload.back() - '0') % 2 == 0;
  };
  for (const Expression& pi : sys.enumerate_formulas(16)) {
    const GeneralizedLiarFacts facts = generalized_liar_witness(sys, t, t, pi);
    // A = B = T: the tarski cast; representation is impossible at g(pi).
    CHECK_FALSE(facts.represents_diagonal_at_name);
    CHECK_FALSE(facts.separation_witnessed);
  }
}
