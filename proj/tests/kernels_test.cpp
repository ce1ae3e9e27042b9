#include <gtest/gtest.h>

#include <random>

#include "nmir/kernels.hpp"

using namespace nmir;

namespace {

BoolMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) m.set(i, j);
  return m;
}

// Reflexive start, then composition until stable.
BoolMatrix naive_closure(BoolMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (m(i, k) && m(k, j) && !m(i, j)) {
            m.set(i, j);
            changed = true;
          }
  }
  return m;
}

}  // namespace

TEST(TransitiveClosure, ChainAndCycle) {
  BoolMatrix m(4);
  m.set(0, 1);
  m.set(1, 2);
  m.set(2, 0);
  transitive_closure(m, Execution::serial);
  EXPECT_TRUE(m(0, 0));
  EXPECT_TRUE(m(2, 1));
  EXPECT_FALSE(m(0, 3));
  EXPECT_TRUE(m(3, 3));
}

TEST(TransitiveClosure, SerialParallelAndNaiveAgree) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + i % 40;
    const auto m = random_matrix(rng, n, 0.08);
    auto serial = m;
    auto parallel = m;
    transitive_closure(serial, Execution::serial);
    transitive_closure(parallel, Execution::parallel);
    EXPECT_EQ(serial, parallel);
    EXPECT_EQ(serial, naive_closure(m));
  }
}
