#include <algorithm>
#include <array>
#include <cctype>

#include "nmir/error.hpp"
#include "nmir/logic_audit.hpp"

namespace nmir {

using Mask = Universe::Mask;
using json = nlohmann::ordered_json;

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules{
      Rule::supraclassicality, Rule::left_logical_equivalence, Rule::right_weakening,
      Rule::and_rule,          Rule::cut,                      Rule::cautious_monotonicity,
      Rule::loop};
  return rules;
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::supraclassicality: return "Supraclassicality";
    case Rule::left_logical_equivalence: return "LeftLogicalEquivalence";
    case Rule::right_weakening: return "RightWeakening";
    case Rule::and_rule: return "And";
    case Rule::cut: return "Cut";
    case Rule::cautious_monotonicity: return "CautiousMonotonicity";
    case Rule::loop: return "Loop";
  }
  return "?";
}

Rule parse_rule(std::string_view text) {
  std::string lower;
  for (char c : text)
    if (c != '_' && c != '-' && c != ' ')
      lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "supraclassicality" || lower == "sc") return Rule::supraclassicality;
  if (lower == "leftlogicalequivalence" || lower == "lle") return Rule::left_logical_equivalence;
  if (lower == "rightweakening" || lower == "rw") return Rule::right_weakening;
  if (lower == "and") return Rule::and_rule;
  if (lower == "cut") return Rule::cut;
  if (lower == "cautiousmonotonicity" || lower == "cm") return Rule::cautious_monotonicity;
  if (lower == "loop") return Rule::loop;
  throw DomainError("unknown rule '" + std::string(text) + "'");
}

bool RuleReport::satisfied() const { return total() == 0; }

std::size_t RuleReport::total() const {
  std::size_t n = 0;
  for (const auto& [rule, count] : totals) n += count;
  return n;
}

namespace {

constexpr std::size_t kRules = 7;

std::size_t slot(Rule r) { return static_cast<std::size_t>(r); }

struct RowResult {
  std::array<std::vector<RuleInstance>, kRules> instances;
  std::array<std::size_t, kRules> totals{};
};

class RowAuditor {
 public:
  RowAuditor(const FiniteRelation& rel, std::array<bool, kRules> enabled, const AuditOptions& opt)
      : rel_(rel), enabled_(enabled), opt_(opt), full_(static_cast<Mask>(rel.subset_count())) {}

  void run(Mask a, RowResult& out) const {
    if (enabled_[slot(Rule::supraclassicality)]) supra(a, out);
    if (enabled_[slot(Rule::left_logical_equivalence)]) lle(a, out);
    if (enabled_[slot(Rule::right_weakening)]) right_weakening(a, out);
    if (enabled_[slot(Rule::and_rule)] || enabled_[slot(Rule::cut)] ||
        enabled_[slot(Rule::cautious_monotonicity)])
      pair_rules(a, out);
    if (enabled_[slot(Rule::loop)] && opt_.loop_bound > 0) loop(a, out);
  }

 private:
  bool holds(Mask x, Mask y) const { return rel_.holds(x, y); }

  void add(RowResult& out, Rule r, RuleInstance inst) const {
    auto& list = out.instances[slot(r)];
    if (list.size() < opt_.limit) list.push_back(std::move(inst));
    ++out.totals[slot(r)];
  }

  // α ⊢ β  ⇒  α |~ β
  void supra(Mask a, RowResult& out) const {
    for (Mask b = 1; b <= full_; ++b)
      if ((a & b) == b && !holds(a, b)) add(out, Rule::supraclassicality, {{a, b}, {}, {a, b}});
  }

  // ⊢ α ≡ β, α |~ γ  ⇒  β |~ γ; equivalence of conjunctions is set equality.
  void lle(Mask a, RowResult& out) const {
    const Mask b = a;
    for (Mask c = 1; c <= full_; ++c)
      if (holds(a, c) && !holds(b, c))
        add(out, Rule::left_logical_equivalence, {{a, b, c}, {{a, c}}, {b, c}});
  }

  // α |~ β, β ⊢ γ  ⇒  α |~ γ
  void right_weakening(Mask a, RowResult& out) const {
    for (Mask b = 1; b <= full_; ++b) {
      if (!holds(a, b)) continue;
      for (Mask c = 1; c <= full_; ++c)
        if ((b & c) == c && !holds(a, c))
          add(out, Rule::right_weakening, {{a, b, c}, {{a, b}}, {a, c}});
    }
  }

  void pair_rules(Mask a, RowResult& out) const {
    const bool and_on = enabled_[slot(Rule::and_rule)];
    const bool cut_on = enabled_[slot(Rule::cut)];
    const bool cm_on = enabled_[slot(Rule::cautious_monotonicity)];
    for (Mask b = 1; b <= full_; ++b) {
      if (!holds(a, b)) continue;
      for (Mask c = 1; c <= full_; ++c) {
        const bool ac = holds(a, c);
        // α |~ β, α |~ γ  ⇒  α |~ β∧γ
        if (and_on && ac && !holds(a, b | c))
          add(out, Rule::and_rule, {{a, b, c}, {{a, b}, {a, c}}, {a, b | c}});
        // α |~ β, α∧β |~ γ  ⇒  α |~ γ
        if (cut_on && holds(a | b, c) && !ac)
          add(out, Rule::cut, {{a, b, c}, {{a, b}, {a | b, c}}, {a, c}});
        // α |~ β, α |~ γ  ⇒  α∧β |~ γ
        if (cm_on && ac && !holds(a | b, c))
          add(out, Rule::cautious_monotonicity, {{a, b, c}, {{a, b}, {a, c}}, {a | b, c}});
      }
    }
  }

  // α0 |~ α1 … αn-1 |~ αn, αn |~ α0  ⇒  α0 |~ αn, for n ≤ loop_bound.
  void loop(Mask a0, RowResult& out) const {
    const std::size_t count = full_;
    const std::size_t bound = opt_.loop_bound;
    // forward[k][x]: x reachable from a0 in exactly k steps.
    std::vector<std::vector<std::uint8_t>> forward(bound + 1, std::vector<std::uint8_t>(count + 1));
    forward[0][a0] = 1;
    for (std::size_t k = 1; k <= bound; ++k)
      for (Mask x = 1; x <= full_; ++x) {
        if (!forward[k - 1][x]) continue;
        for (Mask y = 1; y <= full_; ++y)
          if (holds(x, y)) forward[k][y] = 1;
      }

    for (Mask an = 1; an <= full_; ++an) {
      if (!holds(an, a0) || holds(a0, an)) continue;
      std::size_t steps = 0;
      for (std::size_t k = 1; k <= bound && steps == 0; ++k)
        if (forward[k][an]) steps = k;
      if (steps == 0) continue;
      add(out, Rule::loop, chain_instance(a0, an, steps));
    }
  }

  RuleInstance chain_instance(Mask a0, Mask an, std::size_t steps) const {
    // back[j][x]: an reachable from x in exactly j steps.
    std::vector<std::vector<std::uint8_t>> back(steps + 1,
                                                std::vector<std::uint8_t>(full_ + std::size_t{1}));
    back[0][an] = 1;
    for (std::size_t j = 1; j <= steps; ++j)
      for (Mask x = 1; x <= full_; ++x)
        for (Mask y = 1; y <= full_ && !back[j][x]; ++y)
          if (back[j - 1][y] && holds(x, y)) back[j][x] = 1;

    RuleInstance inst;
    inst.formulas.push_back(a0);
    Mask cur = a0;
    for (std::size_t i = 1; i <= steps; ++i) {
      Mask next = 0;
      for (Mask x = 1; x <= full_ && next == 0; ++x)
        if (holds(cur, x) && back[steps - i][x]) next = x;
      inst.premises.emplace_back(cur, next);
      inst.formulas.push_back(next);
      cur = next;
    }
    inst.premises.emplace_back(an, a0);
    inst.conclusion = {a0, an};
    return inst;
  }

  const FiniteRelation& rel_;
  std::array<bool, kRules> enabled_;
  const AuditOptions& opt_;
  Mask full_;
};

}  // namespace

RuleReport audit_rules(const FiniteRelation& rel, const std::vector<Rule>& rules,
                       const AuditOptions& options) {
  RuleReport report;
  report.universe = rel.universe();
  std::array<bool, kRules> enabled{};
  for (Rule r : all_rules()) {
    if (std::find(rules.begin(), rules.end(), r) == rules.end()) continue;
    enabled[slot(r)] = true;
    report.rules.push_back(r);
    report.violations[r];
    report.totals[r] = 0;
  }

  const auto count = static_cast<std::ptrdiff_t>(rel.subset_count());
  std::vector<RowResult> rows(static_cast<std::size_t>(count));
  RowAuditor auditor(rel, enabled, options);
  if (options.exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i)
      auditor.run(static_cast<Mask>(i + 1), rows[static_cast<std::size_t>(i)]);
  } else {
#pragma omp parallel for schedule(dynamic, 2)
    for (std::ptrdiff_t i = 0; i < count; ++i)
      auditor.run(static_cast<Mask>(i + 1), rows[static_cast<std::size_t>(i)]);
  }

  for (auto& row : rows) {
    for (Rule r : report.rules) {
      report.totals[r] += row.totals[slot(r)];
      auto& list = report.violations[r];
      for (auto& inst : row.instances[slot(r)]) {
        if (list.size() >= options.limit) break;
        list.push_back(std::move(inst));
      }
    }
  }
  return report;
}

void to_json(json& j, const RuleReport& report) {
  const auto& u = report.universe;
  auto pair_label = [&](const std::pair<Mask, Mask>& p) {
    return u.label(p.first) + " |~ " + u.label(p.second);
  };
  json rules = json::object();
  for (Rule r : report.rules) {
    json instances = json::array();
    for (const auto& inst : report.violations.at(r)) {
      json formulas = json::array();
      for (auto m : inst.formulas) formulas.push_back(u.label(m));
      json premises = json::array();
      for (const auto& p : inst.premises) premises.push_back(pair_label(p));
      instances.push_back(json{{"formulas", std::move(formulas)},
                               {"premises", std::move(premises)},
                               {"missing", pair_label(inst.conclusion)}});
    }
    rules[std::string(to_string(r))] =
        json{{"violations", report.totals.at(r)}, {"instances", std::move(instances)}};
  }
  j = json{{"universe", u.terms()},
           {"satisfied", report.satisfied()},
           {"total_violations", report.total()},
           {"rules", std::move(rules)}};
}

}  // namespace nmir
