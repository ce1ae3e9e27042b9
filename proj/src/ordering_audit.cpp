#include "nmir/ordering_audit.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "nmir/error.hpp"

namespace nmir {

std::string_view to_string(AxiomSystem system) {
  switch (system) {
    case AxiomSystem::priority: return "priority";
    case AxiomSystem::preferential: return "preferential";
    case AxiomSystem::rational: return "rational";
  }
  return "priority";
}

AxiomSystem parse_axiom_system(std::string_view text) {
  if (text == "priority") return AxiomSystem::priority;
  if (text == "preferential") return AxiomSystem::preferential;
  if (text == "rational") return AxiomSystem::rational;
  throw DomainError("unknown axiom system '" + std::string(text) + "'");
}

bool AxiomReport::satisfied() const {
  return std::all_of(totals.begin(), totals.end(), [](const auto& kv) { return kv.second == 0; });
}

bool AxiomReport::satisfied(const std::string& axiom) const {
  auto it = totals.find(axiom);
  return it == totals.end() || it->second == 0;
}

SetRelationSample::SetRelationSample(Universe universe)
    : universe_(std::move(universe)) {
  if (universe_.size() > max_terms)
    throw DomainError("set relation universe limited to " + std::to_string(max_terms) + " terms");
  matrix_ = BoolMatrix(universe_.subset_count());
}

SetRelationSample::SetRelationSample(Universe universe,
                                     const std::vector<std::pair<TermSet, TermSet>>& pairs)
    : SetRelationSample(std::move(universe)) {
  for (const auto& [lhs, rhs] : pairs) {
    if (lhs.empty() || rhs.empty()) throw DomainError("set relation pairs must be non-empty");
    add(universe_.to_mask(lhs), universe_.to_mask(rhs));
  }
}

SetRelationSample SetRelationSample::lift(const TermPreorder& order, Execution exec) {
  SetRelationSample out(order.universe());
  const auto count = static_cast<std::ptrdiff_t>(out.subset_count());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i)
      for (std::ptrdiff_t j = 0; j < count; ++j)
        if (set_precedes_mask(order, static_cast<Universe::Mask>(i + 1),
                              static_cast<Universe::Mask>(j + 1)))
          out.matrix_.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < count; ++i)
      for (std::ptrdiff_t j = 0; j < count; ++j)
        if (set_precedes_mask(order, static_cast<Universe::Mask>(i + 1),
                              static_cast<Universe::Mask>(j + 1)))
          out.matrix_.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return out;
}

std::size_t SetRelationSample::pair_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < matrix_.size(); ++i)
    for (std::size_t j = 0; j < matrix_.size(); ++j) n += matrix_(i, j) ? 1 : 0;
  return n;
}

namespace {

std::vector<std::string> term_axioms(AxiomSystem system) {
  std::vector<std::string> out{"Reflexivity", "Monotonicity", "LogicalEquivalence"};
  if (system != AxiomSystem::priority) {
    out.emplace_back("RightConjunction");
    out.emplace_back("Transitivity");
  }
  if (system == AxiomSystem::rational) out.emplace_back("Connectivity");
  return out;
}

std::vector<std::string> set_axioms(AxiomSystem system) {
  std::vector<std::string> out{"Reflexivity", "Monotonicity"};
  if (system != AxiomSystem::priority) {
    out.emplace_back("RightUnion");
    out.emplace_back("Transitivity");
  }
  if (system == AxiomSystem::rational) out.emplace_back("Connectivity");
  return out;
}

AxiomReport empty_report(std::vector<std::string> axioms) {
  AxiomReport r;
  r.axioms = std::move(axioms);
  for (const auto& a : r.axioms) {
    r.counterexamples[a];
    r.totals[a] = 0;
  }
  return r;
}

void record(AxiomReport& r, const std::string& axiom, AxiomWitness w, std::size_t limit) {
  auto& list = r.counterexamples[axiom];
  if (list.size() < limit) list.push_back(std::move(w));
  ++r.totals[axiom];
}

using TermRel = std::function<bool(std::size_t, std::size_t)>;
using PairCover = std::function<bool(std::size_t, std::size_t, std::size_t)>;

// Singletons entail each other only when equal (superset reading of ⊨).
bool entails_term(std::size_t a, std::size_t b) { return a == b; }

AxiomReport audit_terms(const Universe& u, AxiomSystem system, const TermRel& rel,
                        const PairCover& covers_pair, std::size_t limit) {
  AxiomReport r = empty_report(term_axioms(system));
  const std::size_t n = u.size();
  auto one = [&](std::size_t i) { return TermSet{u[i]}; };
  const bool ordering = system != AxiomSystem::priority;

  for (std::size_t t = 0; t < n; ++t)
    if (!rel(t, t)) record(r, "Reflexivity", {one(t)}, limit);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (entails_term(a, b) && rel(b, c) && !rel(a, c))
          record(r, "Monotonicity", {one(a), one(b), one(c)}, limit);
        if (entails_term(a, b) && entails_term(b, a) && rel(c, a) != rel(c, b))
          record(r, "LogicalEquivalence", {one(a), one(b), one(c)}, limit);
        if (ordering && rel(c, a) && rel(c, b) && !covers_pair(c, a, b))
          record(r, "RightConjunction", {one(a), one(b), one(c)}, limit);
        if (ordering && rel(a, b) && rel(b, c) && !rel(a, c))
          record(r, "Transitivity", {one(a), one(b), one(c)}, limit);
      }

  if (system == AxiomSystem::rational)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (!rel(a, b) && !rel(b, a)) record(r, "Connectivity", {one(a), one(b)}, limit);
  return r;
}

// Per-subset violation buckets for the set-form kernel.
constexpr std::size_t kSetAxioms = 5;
enum SetAxiom : std::size_t { kRefl, kMono, kUnion, kTrans, kConn };
constexpr std::array<const char*, kSetAxioms> kSetAxiomNames{
    "Reflexivity", "Monotonicity", "RightUnion", "Transitivity", "Connectivity"};

using MaskWitness = std::array<Universe::Mask, 3>;

struct Buckets {
  std::array<std::vector<MaskWitness>, kSetAxioms> witnesses;
  std::array<std::size_t, kSetAxioms> totals{};

  void add(SetAxiom axiom, MaskWitness w, std::size_t limit) {
    if (witnesses[axiom].size() < limit) witnesses[axiom].push_back(w);
    ++totals[axiom];
  }
};

void audit_set_row(const SetRelationSample& s, std::array<bool, kSetAxioms> enabled,
                   Universe::Mask a, std::size_t limit, Buckets& out) {
  using Mask = Universe::Mask;
  const auto full = static_cast<Mask>(s.subset_count());
  if (enabled[kRefl] && !s.holds(a, a)) out.add(kRefl, {a, 0, 0}, limit);

  for (Mask b = 1; b <= full; ++b) {
    // Monotonicity: a ⊆ b, a ≺ c  ⇒  b ≺ c.
    if (enabled[kMono] && (a & b) == a && a != b)
      for (Mask c = 1; c <= full; ++c)
        if (s.holds(a, c) && !s.holds(b, c)) out.add(kMono, {a, b, c}, limit);

    if (!s.holds(a, b)) {
      if (enabled[kConn] && a < b && !s.holds(b, a)) out.add(kConn, {a, b, 0}, limit);
      continue;
    }
    for (Mask c = 1; c <= full; ++c) {
      if (enabled[kUnion] && b < c && s.holds(a, c) && !s.holds(a, b | c))
        out.add(kUnion, {a, b, c}, limit);
      if (enabled[kTrans] && s.holds(b, c) && !s.holds(a, c)) out.add(kTrans, {a, b, c}, limit);
    }
  }
}

}  // namespace

AxiomReport audit_ordering(const TermPreorder& order, AxiomSystem system, std::size_t limit) {
  const auto& u = order.universe();
  auto rel = [&](std::size_t a, std::size_t b) { return order.precedes(a, b); };
  auto covers = [&](std::size_t c, std::size_t a, std::size_t b) {
    const auto bit = [](std::size_t i) { return Universe::Mask{1} << i; };
    if (u.size() <= Universe::max_mask_terms)
      return set_precedes_mask(order, bit(c), bit(a) | bit(b));
    return set_precedes(order, TermSet{u[c]}, TermSet{u[a], u[b]});
  };
  return audit_terms(u, system, rel, covers, limit);
}

AxiomReport audit_ordering(const TermRelationSample& sample, AxiomSystem system,
                           std::size_t limit) {
  const auto& u = sample.universe;
  BoolMatrix m(u.size());
  for (const auto& [a, b] : sample.pairs) {
    auto ia = u.index_of(a);
    auto ib = u.index_of(b);
    if (!ia || !ib) throw DomainError("pair (" + a + ", " + b + ") outside the universe");
    m.set(*ia, *ib);
  }
  auto rel = [&](std::size_t a, std::size_t b) { return m(a, b); };
  auto covers = [&](std::size_t c, std::size_t a, std::size_t b) { return m(c, a) && m(c, b); };
  return audit_terms(u, system, rel, covers, limit);
}

AxiomReport audit_ordering(const SetRelationSample& sample, AxiomSystem system, Execution exec,
                           std::size_t limit) {
  const auto names = set_axioms(system);
  AxiomReport r = empty_report(names);
  std::array<bool, kSetAxioms> enabled{};
  for (std::size_t i = 0; i < kSetAxioms; ++i)
    enabled[i] = std::find(names.begin(), names.end(), kSetAxiomNames[i]) != names.end();

  const auto count = static_cast<std::ptrdiff_t>(sample.subset_count());
  std::vector<Buckets> rows(static_cast<std::size_t>(count));
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i)
      audit_set_row(sample, enabled, static_cast<Universe::Mask>(i + 1), limit,
                    rows[static_cast<std::size_t>(i)]);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i)
      audit_set_row(sample, enabled, static_cast<Universe::Mask>(i + 1), limit,
                    rows[static_cast<std::size_t>(i)]);
  }

  const auto& u = sample.universe();
  for (const auto& row : rows) {
    for (std::size_t ax = 0; ax < kSetAxioms; ++ax) {
      if (!enabled[ax]) continue;
      const std::string name = kSetAxiomNames[ax];
      r.totals[name] += row.totals[ax];
      auto& list = r.counterexamples[name];
      for (const auto& w : row.witnesses[ax]) {
        if (list.size() >= limit) break;
        AxiomWitness witness;
        for (auto m : w)
          if (m != 0) witness.push_back(u.to_set(m));
        list.push_back(std::move(witness));
      }
    }
  }
  return r;
}

}  // namespace nmir
