#include <cstddef>

#include "nmir/kernels.hpp"

namespace nmir {

namespace {

void closure_serial(BoolMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint8_t* rk = m.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (!m(i, k)) continue;
      std::uint8_t* ri = m.row(i);
      for (std::size_t j = 0; j < n; ++j) ri[j] |= rk[j];
    }
  }
}

void closure_parallel(BoolMatrix& m) {
  const auto n = static_cast<std::ptrdiff_t>(m.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const std::uint8_t* rk = m.row(static_cast<std::size_t>(k));
    // Row k is unchanged during step k (it would only OR itself), so rows
    // can be updated independently.
#pragma omp parallel for schedule(static) if (n > 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (!m(static_cast<std::size_t>(i), static_cast<std::size_t>(k))) continue;
      std::uint8_t* ri = m.row(static_cast<std::size_t>(i));
      for (std::ptrdiff_t j = 0; j < n; ++j) ri[j] |= rk[j];
    }
  }
}

}  // namespace

void transitive_closure(BoolMatrix& m, Execution exec) {
  for (std::size_t i = 0; i < m.size(); ++i) m.set(i, i);
  if (exec == Execution::serial) closure_serial(m);
  else closure_parallel(m);
}

}  // namespace nmir
