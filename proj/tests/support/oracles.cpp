#include "oracles.hpp"

#include <algorithm>

namespace nmir::oracle {

SetMatrix four_rule_closure(std::size_t n,
                            const std::vector<std::pair<std::size_t, std::size_t>>& base) {
  const Mask count = (Mask{1} << n) - 1;
  SetMatrix rel(count, std::vector<bool>(count, false));
  auto get = [&](Mask u, Mask v) { return rel[u - 1][v - 1]; };
  auto put = [&](Mask u, Mask v, bool& changed) {
    if (!rel[u - 1][v - 1]) {
      rel[u - 1][v - 1] = true;
      changed = true;
    }
  };
  bool changed = true;
  for (auto [a, b] : base) put(Mask{1} << a, Mask{1} << b, changed);
  while (changed) {
    changed = false;
    for (Mask u = 1; u <= count; ++u) {
      put(u, u, changed);  // Reflexivity
      for (Mask v = 1; v <= count; ++v)
        for (Mask w = 1; w <= count; ++w) {
          // Monotonicity: U ⊆ V and U ≺ W ⇒ V ≺ W
          if ((u & v) == u && get(u, w)) put(v, w, changed);
          // Right Union: U ≺ V and U ≺ W ⇒ U ≺ V ∪ W
          if (get(u, v) && get(u, w)) put(u, v | w, changed);
          // Transitivity: U ≺ V and V ≺ W ⇒ U ≺ W
          if (get(u, v) && get(v, w)) put(u, w, changed);
        }
    }
  }
  return rel;
}

std::vector<std::pair<std::size_t, std::size_t>> base_indices(const TermPreorder& order) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [a, b] : order.pairs())
    out.emplace_back(*order.universe().index_of(a), *order.universe().index_of(b));
  return out;
}

namespace {

bool sub(Mask small, Mask big) { return (small & big) == small; }

}  // namespace

std::vector<RuleInstance> brute_force_rule(const FiniteRelation& rel, Rule rule,
                                           std::size_t loop_bound) {
  const Mask count = static_cast<Mask>(rel.subset_count());
  auto R = [&](Mask x, Mask y) { return rel.holds(x, y); };
  std::vector<RuleInstance> out;

  if (rule == Rule::loop) {
    // Keyed by (α0, αn); shortest n first, and chains enumerated in
    // lexicographic order within one n, so the first hit wins.
    std::map<std::pair<Mask, Mask>, RuleInstance> found;
    for (std::size_t n = 1; n <= loop_bound; ++n) {
      std::vector<Mask> chain(n + 1, 1);
      while (true) {
        bool premises = R(chain[n], chain[0]);
        for (std::size_t i = 0; i < n && premises; ++i) premises = R(chain[i], chain[i + 1]);
        if (premises && !R(chain[0], chain[n])) {
          auto key = std::make_pair(chain[0], chain[n]);
          if (!found.count(key)) {
            RuleInstance inst;
            inst.formulas = chain;
            for (std::size_t i = 0; i < n; ++i) inst.premises.emplace_back(chain[i], chain[i + 1]);
            inst.premises.emplace_back(chain[n], chain[0]);
            inst.conclusion = key;
            found.emplace(key, std::move(inst));
          }
        }
        // Odometer increment, last position fastest.
        std::size_t pos = n + 1;
        while (pos > 0 && chain[pos - 1] == count) chain[--pos] = 1;
        if (pos == 0) break;
        ++chain[pos - 1];
      }
    }
    for (auto& [key, inst] : found) out.push_back(std::move(inst));
    return out;
  }

  for (Mask a = 1; a <= count; ++a)
    for (Mask b = 1; b <= count; ++b) {
      if (rule == Rule::supraclassicality) {
        if (sub(b, a) && !R(a, b)) out.push_back({{a, b}, {}, {a, b}});
        continue;
      }
      for (Mask c = 1; c <= count; ++c) {
        switch (rule) {
          case Rule::left_logical_equivalence:
            if (a == b && R(a, c) && !R(b, c)) out.push_back({{a, b, c}, {{a, c}}, {b, c}});
            break;
          case Rule::right_weakening:
            if (R(a, b) && sub(c, b) && !R(a, c)) out.push_back({{a, b, c}, {{a, b}}, {a, c}});
            break;
          case Rule::and_rule:
            if (R(a, b) && R(a, c) && !R(a, b | c))
              out.push_back({{a, b, c}, {{a, b}, {a, c}}, {a, b | c}});
            break;
          case Rule::cut:
            if (R(a, b) && R(a | b, c) && !R(a, c))
              out.push_back({{a, b, c}, {{a, b}, {a | b, c}}, {a, c}});
            break;
          case Rule::cautious_monotonicity:
            if (R(a, b) && R(a, c) && !R(a | b, c))
              out.push_back({{a, b, c}, {{a, b}, {a, c}}, {a | b, c}});
            break;
          default:
            break;
        }
      }
    }
  return out;
}

bool confirms_violation(const FiniteRelation& rel, Rule rule, const RuleInstance& inst) {
  for (const auto& [x, y] : inst.premises)
    if (!rel.holds(x, y)) return false;
  const auto& f = inst.formulas;
  auto [cx, cy] = inst.conclusion;
  if (rel.holds(cx, cy)) return false;
  switch (rule) {
    case Rule::supraclassicality:
      return f.size() == 2 && sub(f[1], f[0]) && cx == f[0] && cy == f[1];
    case Rule::left_logical_equivalence:
      return f.size() == 3 && f[0] == f[1] && cx == f[1] && cy == f[2];
    case Rule::right_weakening:
      return f.size() == 3 && sub(f[2], f[1]) && cx == f[0] && cy == f[2] &&
             inst.premises.size() == 1 && inst.premises[0] == std::make_pair(f[0], f[1]);
    case Rule::and_rule:
      return f.size() == 3 && cx == f[0] && cy == (f[1] | f[2]) &&
             rel.holds(f[0], f[1]) && rel.holds(f[0], f[2]);
    case Rule::cut:
      return f.size() == 3 && cx == f[0] && cy == f[2] && rel.holds(f[0], f[1]) &&
             rel.holds(f[0] | f[1], f[2]);
    case Rule::cautious_monotonicity:
      return f.size() == 3 && cx == (f[0] | f[1]) && cy == f[2] && rel.holds(f[0], f[1]) &&
             rel.holds(f[0], f[2]);
    case Rule::loop: {
      if (f.size() < 2) return false;
      for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (!rel.holds(f[i], f[i + 1])) return false;
      return rel.holds(f.back(), f.front()) && cx == f.front() && cy == f.back();
    }
  }
  return false;
}

const std::vector<std::string>& reference_derivation_rows() {
  static const std::vector<std::string> rows{
      "YNYNYN",  // t1
      "NYNNNN",  // t2
      "NNYNNN",  // t3
      "YYNYNN",  // t1&t2
      "YNYNYN",  // t1&t3
      "NYYNNY",  // t2&t3
  };
  return rows;
}

}  // namespace nmir::oracle
