#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nmir {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both produce identical results; the serial path exists for testing and
/// benchmarking.
enum class Execution { serial, parallel };

/// Dense square boolean matrix, row-major.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { cells_[i * n_ + j] = v ? 1 : 0; }
  std::uint8_t* row(std::size_t i) { return cells_.data() + i * n_; }
  const std::uint8_t* row(std::size_t i) const { return cells_.data() + i * n_; }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Reflexive-transitive closure in place (Warshall).
void transitive_closure(BoolMatrix& m, Execution exec = Execution::parallel);

}  // namespace nmir
