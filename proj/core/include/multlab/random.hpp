#pragma once

// Portable counter-based random numbers. Every draw is a pure function of
// (seed, stream, counter), so instances generated in parallel reproduce
// exactly regardless of scheduling or platform.

#include "multlab/numerics.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace multlab {

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next_u64() noexcept { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform on [0, 1).
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  int below(int n) noexcept {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  double normal() noexcept {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Complex complex_normal() noexcept { return {normal(), normal()}; }

  bool coin(double p = 0.5) noexcept { return uniform() < p; }

  Matrix complex_matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_normal();
    return m;
  }

  Matrix hermitian(Eigen::Index n) {
    const Matrix a = complex_matrix(n, n);
    return 0.5 * (a + a.adjoint());
  }

  Vector complex_vector(Eigen::Index n) { return complex_matrix(n, 1).col(0); }

 private:
  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace multlab
