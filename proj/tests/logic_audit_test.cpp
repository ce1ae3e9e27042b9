#include <gtest/gtest.h>

#include "generators.hpp"
#include "nmir/error.hpp"
#include "nmir/eum.hpp"
#include "nmir/logic_audit.hpp"
#include "nmir/session.hpp"
#include "oracles.hpp"

using namespace nmir;

namespace {

WeightTable fixture_weights() {
  return weights_from_json(
      nlohmann::ordered_json::parse(read_text_file(gen::fixture_path("eum_weights.json"))));
}

FiniteRelation eum_relation(const WeightTable& wt, Execution exec = Execution::parallel) {
  return generated_relation([&](const TermSet& q, const TermSet& d) { return eum_infers(wt, q, d); },
                            Universe(wt.terms()), default_generation_bound, exec);
}

FiniteRelation subset_relation(std::size_t n) {
  return generated_relation([](const TermSet& q, const TermSet& d) { return entails(q, d); },
                            Universe(gen::terms(n)));
}

}  // namespace

TEST(Entails, SubsetDirection) {
  EXPECT_TRUE(entails({"a", "b"}, {"a"}));
  EXPECT_FALSE(entails({"a"}, {"a", "b"}));
  EXPECT_TRUE(entails({"a"}, {"a"}));
}

TEST(GeneratedRelation, EumOverThreeTerms) {
  const auto wt = fixture_weights();
  const auto rel = eum_relation(wt);
  EXPECT_EQ(rel.subset_count(), 7u);
  const auto sets = subsets_by_size(wt.terms(), 2);
  const auto& rows = oracle::reference_derivation_rows();
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      EXPECT_EQ(rel.holds(sets[i], sets[j]), rows[i][j] == 'Y') << i << "," << j;
}

TEST(GeneratedRelation, BoundAndSerialParallel) {
  auto always = [](const TermSet&, const TermSet&) { return true; };
  EXPECT_THROW(generated_relation(always, Universe(gen::terms(6))), DomainError);
  EXPECT_NO_THROW(generated_relation(always, Universe(gen::terms(6)), 6));
  gen::Rng rng(2);
  std::vector<std::pair<Term, double>> entries;
  std::uniform_real_distribution<double> w(-1.0, 1.0);
  for (const auto& t : gen::terms(5)) entries.emplace_back(t, w(rng));
  const WeightTable wt(entries);
  EXPECT_EQ(eum_relation(wt, Execution::serial), eum_relation(wt, Execution::parallel));
}

TEST(AuditRules, EumRelationSatisfiesAllRules) {
  const auto report = audit_rules(eum_relation(fixture_weights()), all_rules());
  EXPECT_TRUE(report.satisfied());
  EXPECT_EQ(report.rules.size(), 7u);
  for (Rule r : all_rules()) EXPECT_EQ(report.totals.at(r), 0u) << to_string(r);
}

TEST(AuditRules, SubsetRelationSatisfiesAllRules) {
  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_TRUE(audit_rules(subset_relation(n), all_rules()).satisfied()) << n;
}

TEST(AuditRules, AndCounterexample) {
  const auto rel = parse_relation("a |~ a\nb |~ b\nc |~ c\na&b |~ a\na&b |~ b\na |~ b\na |~ c\n"
                                  "a&c |~ a\na&c |~ c\nb&c |~ b\nb&c |~ c\n");
  const auto report = audit_rules(rel, {Rule::and_rule});
  ASSERT_FALSE(report.satisfied());
  const auto& u = rel.universe();
  const auto& first = report.violations.at(Rule::and_rule).front();
  EXPECT_EQ(first.conclusion.first, u.to_mask({"a"}));
  EXPECT_EQ(u.label(first.conclusion.second), "a&b");
  EXPECT_TRUE(oracle::confirms_violation(rel, Rule::and_rule, first));
}

TEST(AuditRules, LoopNeedsTwoSteps) {
  // a -> b -> c -> a without a |~ c.
  const auto rel = parse_relation("# universe: a,b,c\na |~ b\nb |~ c\nc |~ a\n");
  AuditOptions opt;
  opt.loop_bound = 1;
  EXPECT_TRUE(audit_rules(rel, {Rule::loop}, opt).satisfied());
  opt.loop_bound = 2;
  const auto report = audit_rules(rel, {Rule::loop}, opt);
  ASSERT_FALSE(report.satisfied());
  const auto& inst = report.violations.at(Rule::loop).front();
  EXPECT_EQ(inst.formulas.size(), 3u);
  EXPECT_TRUE(oracle::confirms_violation(rel, Rule::loop, inst));
}

TEST(AuditRules, LimitTruncatesButCountsAll) {
  const auto rel = parse_relation("# universe: a,b,c\n");
  AuditOptions opt;
  opt.limit = 2;
  const auto report = audit_rules(rel, {Rule::supraclassicality}, opt);
  EXPECT_EQ(report.violations.at(Rule::supraclassicality).size(), 2u);
  // Every pair (U, V) with V ⊆ U: sum over U of (2^|U| - 1) = 19.
  EXPECT_EQ(report.totals.at(Rule::supraclassicality), 19u);
}

TEST(AuditRulesProperty, MatchesBruteForceOnRandomRelations) {
  gen::Rng rng(41);
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t n = 1 + iter % 3;
    const double p = (iter % 5 + 1) / 6.0;
    const auto rel = gen::relation(rng, n, p);
    AuditOptions opt;
    opt.limit = 100000;
    opt.exec = iter % 2 ? Execution::parallel : Execution::serial;
    const auto report = audit_rules(rel, all_rules(), opt);
    for (Rule r : all_rules()) {
      const auto expected = oracle::brute_force_rule(rel, r, opt.loop_bound);
      ASSERT_EQ(report.violations.at(r), expected) << to_string(r) << " iter " << iter;
      ASSERT_EQ(report.totals.at(r), expected.size());
      for (const auto& inst : expected) ASSERT_TRUE(oracle::confirms_violation(rel, r, inst));
    }
  }
}

TEST(AuditRulesProperty, SerialAndParallelAgree) {
  gen::Rng rng(43);
  for (int iter = 0; iter < 10; ++iter) {
    const auto rel = gen::relation(rng, 4, 0.4);
    AuditOptions s;
    s.exec = Execution::serial;
    AuditOptions p;
    const auto a = audit_rules(rel, all_rules(), s);
    const auto b = audit_rules(rel, all_rules(), p);
    EXPECT_EQ(a.violations, b.violations);
    EXPECT_EQ(a.totals, b.totals);
  }
}

TEST(ParseRule, NamesAndAbbreviations) {
  EXPECT_EQ(parse_rule("LLE"), Rule::left_logical_equivalence);
  EXPECT_EQ(parse_rule("rw"), Rule::right_weakening);
  EXPECT_EQ(parse_rule("cautious_monotonicity"), Rule::cautious_monotonicity);
  EXPECT_EQ(parse_rule("And"), Rule::and_rule);
  for (Rule r : all_rules()) EXPECT_EQ(parse_rule(to_string(r)), r);
  EXPECT_THROW(parse_rule("Or"), DomainError);
}

TEST(Relation, ParseFormatRoundTrip) {
  const auto rel = parse_relation("# comment\n# universe: x,y\ny |~ x&y\n\nx |~ y  # trailing\n",
                                  {"w"});
  EXPECT_EQ(rel.universe().terms(), (std::vector<Term>{"w", "x", "y"}));
  EXPECT_EQ(rel.size(), 2u);
  EXPECT_TRUE(rel.holds(TermSet{"y"}, TermSet{"x", "y"}));
  EXPECT_EQ(parse_relation(format_relation(rel)), rel);
}

TEST(Relation, ParseErrors) {
  EXPECT_THROW(parse_relation("a -> b\n"), ParseError);
  EXPECT_THROW(parse_relation("a |~ \n"), ParseError);
  EXPECT_THROW(parse_relation("a |~ b |~ c\n"), ParseError);
  try {
    parse_relation("a |~ b\nbad line\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 2u);
  }
}

TEST(RuleReport, Json) {
  const auto rel = parse_relation("# universe: a,b\na |~ b\n");
  const nlohmann::ordered_json j = audit_rules(rel, {Rule::supraclassicality, Rule::loop});
  EXPECT_EQ(j["universe"], (nlohmann::ordered_json{"a", "b"}));
  EXPECT_FALSE(j["satisfied"].get<bool>());
  EXPECT_EQ(j["rules"]["Supraclassicality"]["instances"][0]["missing"], "a |~ a");
  EXPECT_EQ(j["rules"]["Loop"]["violations"], 0);
}
