#include <gtest/gtest.h>

#include "generators.hpp"
#include "nmir/error.hpp"
#include "nmir/ordering.hpp"
#include "oracles.hpp"

using namespace nmir;

namespace {

// Row a, column b: a precedes b. Counts (+: 0,2,1,1; -: 1,0,1,2) worked by hand.
const std::vector<std::string> kPositive{"1111", "0100", "0111", "0111"};
const std::vector<std::string> kNegative{"1110", "0100", "1110", "1111"};
const std::vector<std::string> kCombined{"1110", "0100", "0110", "0111"};

std::vector<std::string> matrix(const TermPreorder& o) {
  std::vector<std::string> rows;
  for (std::size_t a = 0; a < o.universe().size(); ++a) {
    std::string row;
    for (std::size_t b = 0; b < o.universe().size(); ++b) row += o.precedes(a, b) ? '1' : '0';
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(PositiveOrder, ExampleChain) {
  const auto p = positive_order(gen::example_corpus());
  EXPECT_EQ(p.kind(), OrderKind::rational);
  EXPECT_EQ(matrix(p), kPositive);
  EXPECT_TRUE(p.precedes("t1", "t3"));
  EXPECT_TRUE(p.precedes("t3", "t2"));
  EXPECT_TRUE(p.precedes("t4", "t2"));
  EXPECT_TRUE(p.precedes("t3", "t4") && p.precedes("t4", "t3"));
}

TEST(PositiveOrder, NoPositiveDocumentsIsTotalTie) {
  const auto c = parse_corpus("doc_id,a,b,c,label\nx,1,0,1,-\n");
  const auto p = positive_order(c);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) EXPECT_TRUE(p.precedes(a, b));
}

TEST(NegativeOrder, ExampleChain) {
  const auto n = negative_order(gen::example_corpus());
  EXPECT_EQ(n.kind(), OrderKind::rational);
  EXPECT_EQ(matrix(n), kNegative);
  EXPECT_TRUE(n.precedes("t1", "t3") && n.precedes("t3", "t1"));
}

TEST(NegativeOrder, NoNegativeDocumentsIsTotalTie) {
  const auto n = negative_order(parse_corpus("doc_id,a,b,label\nx,1,0,+\n"));
  EXPECT_TRUE(n.precedes("a", "b") && n.precedes("b", "a"));
}

TEST(CombinedOrder, ExamplePairs) {
  const auto c = gen::example_corpus();
  const auto o = combined_order(positive_order(c), negative_order(c));
  EXPECT_EQ(o.kind(), OrderKind::preferential);
  EXPECT_EQ(matrix(o), kCombined);
  EXPECT_TRUE(o.precedes("t1", "t3"));
  EXPECT_TRUE(o.precedes("t3", "t2"));
  EXPECT_TRUE(o.precedes("t4", "t2"));
  EXPECT_TRUE(o.precedes("t4", "t3"));
  EXPECT_FALSE(o.precedes("t1", "t4"));
  EXPECT_FALSE(o.precedes("t4", "t1"));
}

TEST(CombinedOrder, UniverseMismatch) {
  const auto a = positive_order(parse_corpus("doc_id,a,b\n"));
  const auto b = positive_order(parse_corpus("doc_id,a,c\n"));
  EXPECT_THROW(combined_order(a, b), DomainError);
}

TEST(Precedes, ClosureAndReflexivity) {
  // Only t1<t3 and t3<t2 given; t1<t2 comes from the closure.
  const TermPreorder o(Universe(gen::terms(4)), {{"t1", "t3"}, {"t3", "t2"}, {"t4", "t2"}},
                       OrderKind::preferential);
  EXPECT_TRUE(o.precedes("t1", "t2"));
  EXPECT_FALSE(o.precedes("t2", "t1"));
  for (const auto& t : o.universe().terms()) EXPECT_TRUE(o.precedes(t, t));
  EXPECT_THROW(o.precedes("t1", "zz"), DomainError);
}

TEST(SetPrecedes, ExampleClaims) {
  const auto c = gen::example_corpus();
  const auto o = combined_order(positive_order(c), negative_order(c));
  EXPECT_TRUE(set_precedes(o, {"t3", "t4"}, {"t2", "t4"}));
  EXPECT_FALSE(set_precedes(o, {"t3", "t4"}, {"t1", "t4"}));
  EXPECT_TRUE(set_precedes(o, {"t1", "t2"}, {"t2", "t3"}));
  EXPECT_TRUE(set_precedes(o, {"t1", "t4"}, {"t1", "t2"}));
  EXPECT_TRUE(set_precedes(o, {"t2", "t3"}, {"t2", "t3"}));
}

TEST(SetPrecedes, Errors) {
  const auto o = positive_order(gen::example_corpus());
  EXPECT_THROW(set_precedes(o, {}, {"t1"}), DomainError);
  EXPECT_THROW(set_precedes(o, {"t1"}, {}), DomainError);
  EXPECT_THROW(set_precedes(o, {"t1"}, {"nope"}), DomainError);
}

// Exhaustive over all subset pairs of universes up to 4 terms.
TEST(SetPrecedesProperty, AgreesWithFourRuleClosure) {
  gen::Rng rng(3);
  auto check = [](const TermPreorder& o) {
    const std::size_t n = o.universe().size();
    const auto oracle = oracle::four_rule_closure(n, oracle::base_indices(o));
    const Universe::Mask count = (Universe::Mask{1} << n) - 1;
    for (Universe::Mask u = 1; u <= count; ++u)
      for (Universe::Mask v = 1; v <= count; ++v)
        ASSERT_EQ(set_precedes(o, o.universe().to_set(u), o.universe().to_set(v)),
                  oracle[u - 1][v - 1])
            << o.universe().label(u) << " vs " << o.universe().label(v);
  };
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 1 + iter % 4;
    check(gen::random_ordering(rng, n, 0.3));
    const auto c = gen::corpus(rng, 4, 10);
    check(combined_order(positive_order(c), negative_order(c)));
  }
}

TEST(SetPrecedesProperty, RationalOrderingsCompareMinima) {
  gen::Rng rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + iter % 6;
    const auto o = gen::rational_ordering(rng, n);
    const auto& u = o.universe();
    const Universe::Mask count = (Universe::Mask{1} << n) - 1;
    auto minimum = [&](Universe::Mask m) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i)
        if ((m >> i) & 1u)
          if (best == n || o.precedes(i, best)) best = i;
      return best;
    };
    for (Universe::Mask a = 1; a <= count; ++a)
      for (Universe::Mask b = 1; b <= count; ++b) {
        const bool ab = set_precedes(o, u.to_set(a), u.to_set(b));
        const bool ba = set_precedes(o, u.to_set(b), u.to_set(a));
        ASSERT_TRUE(ab || ba);
        ASSERT_EQ(ab, o.precedes(minimum(a), minimum(b)));
      }
  }
}

TEST(Export, PairsAndDot) {
  const TermPreorder o(Universe({"a", "b", "c"}), {{"b", "c"}, {"a", "b"}, {"a", "a"}},
                       OrderKind::preferential);
  EXPECT_EQ(export_pairs(o), "# kind: preferential\na < b\nb < c\n");
  const auto dot = export_dot(o, "g");
  EXPECT_NE(dot.find("digraph \"g\""), std::string::npos);
  EXPECT_NE(dot.find("\"a\" -> \"b\";"), std::string::npos);
  EXPECT_NE(dot.find("\"b\" -> \"c\";"), std::string::npos);
}
