// liarlab: command-line front end for the two formal-system instances and
// the liar/limitation witness engines.
//
// Exit codes: 0 = pass or expected witness/violation (a limitation theorem
// confirmed is the expected outcome), 1 = violation of a claimed invariant
// or a budget failure, 2 = usage or formula syntax errors.

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liarlab/afs.hpp"
#include "liarlab/logic.hpp"
#include "liarlab/presburger/system.hpp"
#include "liarlab/quineland/system.hpp"

using json = nlohmann::ordered_json;
using namespace liarlab;

namespace {

struct Report {
  std::vector<std::string> command;
  std::string instance;
  std::string status = "pass";  // pass | violation | witness
  json facts = json::array();
  json witnesses = json::object();
  int exit_code = 0;

  void fact(const std::string& label, json value, const std::string& recipe) {
    facts.push_back(json{{"label", label}, {"value", std::move(value)}, {"recipe", recipe}});
  }

  void witness(const std::string& label, const std::string& payload) {
    witnesses[label] = payload;
  }

  json to_json() const {
    return json{{"command", command}, {"instance", instance}, {"status", status},
                {"facts", facts},     {"witnesses", witnesses}};
  }

  void render(bool as_json) const {
    if (as_json) {
      std::cout << to_json().dump(2) << "\n";
      return;
    }
    if (facts.size() == 1 && witnesses.empty()) {
      const json& v = facts[0]["value"];
      std::cout << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      return;
    }
    for (const auto& f : facts) {
      const json& v = f["value"];
      std::cout << f["label"].get<std::string>() << ": "
                << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    for (const auto& [label, payload] : witnesses.items())
      std::cout << label << ": "
                << (payload.is_string() ? payload.get<std::string>() : payload.dump()) << "\n";
    std::cout << "status: " << status << "\n";
  }
};

void embed_violation(Report& report, const ViolationReport& violation) {
  report.fact("witness_name", violation.witness_name.payload, "echoed inputs");
  report.fact("lhs", violation.lhs, "membership of the substituted instance in A");
  report.fact("rhs", violation.rhs, "membership of the witness name in X");
  if (violation.lambda) report.witness("lambda", violation.lambda->payload);
  report.witness("narrative", violation.narrative);
}

struct Cli {
  bool as_json = false;
  std::size_t budget = 0;

  std::shared_ptr<presburger::PresburgerSystem> pres() const {
    presburger::PresburgerSystem::Options options;
    if (budget != 0) options.ledger_budget = budget;
    return std::make_shared<presburger::PresburgerSystem>(options);
  }

  std::shared_ptr<quineland::QuinelandSystem> quine() const {
    return std::make_shared<quineland::QuinelandSystem>();
  }
};

std::string quote_arg(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liarlab: executable liar/limitation theorems over two formal systems"};
  app.require_subcommand(1);

  Cli cli;
  app.add_flag("--json", cli.as_json, "structured output");
  app.add_option("--budget", cli.budget, "naming-ledger advancement cap");

  Report report;
  for (int i = 1; i < argc; ++i) report.command.push_back(argv[i]);

  // ---- pres ----------------------------------------------------------
  auto* pres = app.add_subcommand("pres", "the complete additive-arithmetic instance");
  pres->require_subcommand(1);

  std::string pres_sentence;
  auto* pres_decide = pres->add_subcommand("decide", "truth of a sentence over N");
  pres_decide->add_option("sentence", pres_sentence)->required();

  std::size_t enum_count = 10;
  auto* pres_enum = pres->add_subcommand("enum", "canonical formula enumeration prefix");
  pres_enum->add_option("--count", enum_count);

  std::string pres_formula;
  auto* pres_name = pres->add_subcommand("name", "the goedel name g(formula)");
  pres_name->add_option("formula", pres_formula)->required();

  std::uint64_t unname_value = 0;
  auto* pres_unname = pres->add_subcommand("unname", "the formula named by a natural");
  pres_unname->add_option("nat", unname_value)->required();

  std::size_t truthdef_samples = 200;
  auto* pres_truthdef =
      pres->add_subcommand("truthdef", "even/odd representers against the named truths");
  pres_truthdef->add_option("--samples", truthdef_samples);

  std::size_t nsr_cap = 7, nsr_samples = 60;
  auto* pres_nsr = pres->add_subcommand(
      "noselfref", "refute every small formula as a representer of the diagonal evens");
  pres_nsr->add_option("--cap", nsr_cap);
  pres_nsr->add_option("--samples", nsr_samples);

  // ---- quine ---------------------------------------------------------
  auto* quine = app.add_subcommand("quine", "the self-referential quotation instance");
  quine->require_subcommand(1);

  std::string quine_sentence;
  auto* quine_truth = quine->add_subcommand("truth", "truth of a sentence");
  quine_truth->add_option("sentence", quine_sentence)->required();

  std::string quine_psentence;
  auto* quine_printable = quine->add_subcommand("printable", "printer membership");
  quine_printable->add_option("sentence", quine_psentence)->required();

  std::string quine_formula;
  auto* quine_diag = quine->add_subcommand("diag", "the diagonal sentence pi[g(pi)]");
  quine_diag->add_option("formula", quine_formula)->required();

  auto* quine_goedel = quine->add_subcommand("goedel", "the goedel sentence and its facts");

  std::string tarski_phi;
  auto* quine_tarski =
      quine->add_subcommand("tarski", "a name where phi fails to T-represent the truths");
  quine_tarski->add_option("--phi", tarski_phi)->required();

  std::string minproof_sentence;
  auto* quine_minproof = quine->add_subcommand("minproof", "exact minimal derivation length");
  quine_minproof->add_option("sentence", minproof_sentence)->required();

  std::size_t long_n = 6;
  auto* quine_long =
      quine->add_subcommand("longtheorem", "a theorem needing at least n proof steps");
  quine_long->add_option("--n", long_n);

  // ---- liar ----------------------------------------------------------
  std::string liar_system, liar_variant, liar_pi;
  auto* liar = app.add_subcommand("liar", "generalized liar engine for a limitation variant");
  liar->add_option("--system", liar_system)->required()->check(CLI::IsMember({"pres", "quine"}));
  liar->add_option("--variant", liar_variant)
      ->required()
      ->check(CLI::IsMember({"goedel-syn", "goedel-sem", "tarski", "church"}));
  liar->add_option("--pi", liar_pi)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (pres_decide->parsed()) {
      auto sys = cli.pres();
      report.instance = "pres";
      const bool value = sys->decide_sentence(sys->expression(pres_sentence));
      report.fact("decide", value, "pres decide " + quote_arg(pres_sentence));
    } else if (pres_enum->parsed()) {
      auto sys = cli.pres();
      report.instance = "pres";
      report.fact("count", enum_count, "pres enum --count " + std::to_string(enum_count));
      json list = json::array();
      for (const Expression& e : sys->enumerate_formulas(enum_count)) list.push_back(e.payload);
      report.witnesses["formulas"] = list;
    } else if (pres_name->parsed()) {
      auto sys = cli.pres();
      report.instance = "pres";
      const Expression e = sys->expression(pres_formula);
      const std::uint64_t value = sys->goedel_name(e);
      report.fact("name", value, "pres name " + quote_arg(e.payload));
      report.fact("parity", value % 2 == 0 ? "even" : "odd", "even iff a provable sentence");
      report.witness("formula", e.payload);
    } else if (pres_unname->parsed()) {
      auto sys = cli.pres();
      report.instance = "pres";
      const Expression e = sys->goedel_formula(unname_value);
      report.fact("provable_sentence", unname_value % 2 == 0,
                  "pres decide of the named sentence when even");
      report.witness("formula", e.payload);
    } else if (pres_truthdef->parsed()) {
      auto sys = cli.pres();
      report.instance = "pres";
      report.fact("samples", truthdef_samples,
                  "pres truthdef --samples " + std::to_string(truthdef_samples));
      if (auto violation = sys->truth_definability_check(truthdef_samples)) {
        report.status = "violation";
        report.exit_code = 1;
        embed_violation(report, *violation);
      } else {
        report.fact("representers_pass", true, "not refuted on the sampled names");
      }
    } else if (pres_nsr->parsed()) {
      auto sys = cli.pres();
      report.instance = "pres";
      const auto nsr = sys->non_self_referentiality_evidence(nsr_cap, nsr_samples);
      report.fact("size_cap", nsr.size_cap, "enumeration node-count cap");
      report.fact("sample_size", nsr.sample_size, "first assigned names");
      report.fact("candidates_checked", nsr.candidates_checked, "all formulas up to the cap");
      report.fact("all_refuted", nsr.all_refuted(),
                  "every candidate fails on some sampled name");
      if (!nsr.all_refuted()) {
        report.status = "witness";
        report.exit_code = 1;
        json survivors = json::array();
        for (const Expression& e : nsr.survivors) survivors.push_back(e.payload);
        report.witnesses["survivors"] = survivors;
      }
    } else if (quine_truth->parsed()) {
      auto sys = cli.quine();
      report.instance = "quine";
      const bool value = sys->truth(sys->expression(quine_sentence));
      report.fact("truth", value, "quine truth " + quote_arg(quine_sentence));
    } else if (quine_printable->parsed()) {
      auto sys = cli.quine();
      report.instance = "quine";
      const bool value = sys->printable(sys->expression(quine_psentence));
      report.fact("printable", value, "quine printable " + quote_arg(quine_psentence));
    } else if (quine_diag->parsed()) {
      auto sys = cli.quine();
      report.instance = "quine";
      const Expression pi = sys->expression(quine_formula);
      const Expression lambda = diagonal_sentence(*sys, pi);
      report.fact("truth_lambda", sys->truth(lambda), "quine truth of the diagonal");
      report.witness("pi", pi.payload);
      report.witness("lambda", lambda.payload);
      report.status = "witness";
    } else if (quine_goedel->parsed()) {
      auto sys = cli.quine();
      report.instance = "quine";
      const quineland::GoedelFacts facts = sys->goedel();
      const std::string lambda = quineland::serialize(*facts.lambda);
      report.fact("diag_fixed_point", facts.diag_fixed_point,
                  "quine diag " + quote_arg(quineland::serialize(*facts.pi)));
      report.fact("truth_lambda", facts.truth_lambda, "quine truth " + quote_arg(lambda));
      report.fact("printable_lambda", facts.printable_lambda,
                  "quine printable " + quote_arg(lambda));
      report.fact("printable_negation", facts.printable_negation,
                  "quine printable " + quote_arg("~" + lambda));
      report.witness("pi", quineland::serialize(*facts.pi));
      report.witness("lambda", lambda);
      report.status = "witness";
    } else if (quine_tarski->parsed()) {
      auto sys = cli.quine();
      report.instance = "quine";
      const logic::LogicalSystem ls = logic::make_logical_system(sys);
      const ViolationReport violation = logic::tarski_counterexample(ls, sys->expression(tarski_phi));
      report.status = "violation";  // the expected theorem outcome
      embed_violation(report, violation);
    } else if (quine_minproof->parsed()) {
      auto sys = cli.quine();
      report.instance = "quine";
      const auto length = sys->min_proof_length(sys->expression(minproof_sentence));
      report.fact("min_proof_length", length ? json(*length) : json(nullptr),
                  "quine minproof " + quote_arg(minproof_sentence));
    } else if (quine_long->parsed()) {
      auto sys = cli.quine();
      report.instance = "quine";
      const Expression theorem = sys->long_theorem_sentence(long_n);
      report.fact("n", long_n, "quine longtheorem --n " + std::to_string(long_n));
      report.fact("min_proof_length", *sys->min_proof_length(theorem),
                  "quine minproof " + quote_arg(theorem.payload));
      report.witness("sentence", theorem.payload);
      report.status = "witness";
    } else if (liar->parsed()) {
      report.instance = liar_system;
      const auto variant = logic::variant_from_name(liar_variant);
      logic::LogicalSystem ls = liar_system == "pres"
                                    ? logic::make_logical_system(cli.pres())
                                    : logic::make_logical_system(cli.quine());
      const Expression pi = ls.base->expression(liar_pi);
      const GeneralizedLiarFacts facts = logic::limitation_witness(ls, *variant, pi);
      const ViolationReport forced = liar_violation(*ls.base, pi, ls.truth);
      report.fact("variant", liar_variant, "the (A,B) substitution table");
      report.fact("lambda_in_sentences", facts.lambda_in_sentences, "classification of lambda");
      report.fact("lambda_in_a", facts.lambda_in_a, "A oracle at lambda");
      report.fact("lambda_in_b", facts.lambda_in_b, "B oracle at lambda");
      report.fact("represents_diagonal_at_name", facts.represents_diagonal_at_name,
                  "B(pi[n]) == diag(~img(A))(n) at n = g(pi)");
      report.fact("separation_witnessed", facts.separation_witnessed,
                  "lambda exhibits S-intersect-A != B");
      report.fact("liar_lhs", forced.lhs, "lambda in T");
      report.fact("liar_rhs", forced.rhs, "g(pi) in {n : g^-1(n)[n] not in T}");
      report.witness("pi", pi.payload);
      report.witness("lambda", facts.lambda.payload);
      report.status = facts.separation_witnessed ? "witness" : "violation";
    }
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "formula grammar (pres): F ::= 'E' id '.' F | 'A' id '.' F | F '->' F | "
                 "F '|' F | F '&' F | '~' F | '(' F ')' | T '=' T | T '!=' T\n";
    std::cerr << "formula grammar (quine): F ::= 'Pr' '(' T ')' | '~' F | '(' F '&' F ')' ; "
                 "T ::= 'x' | '<' E '>' | 'diag' '(' T ')'\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  report.render(cli.as_json);
  return report.exit_code;
}
