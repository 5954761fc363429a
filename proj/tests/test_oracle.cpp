#include "doctest.h"

#include "multlab/schur.hpp"
#include "schur_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

using namespace multlab;

namespace {

Matrix pattern_matrix(int bits, int m, int n) {
  Matrix p = Matrix::Zero(m, n);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y)
      if (bits >> (x * n + y) & 1) p(x, y) = 1.0;
  return p;
}

// Smallest encoding over row/column permutations and (for square) transposition.
int canonical(int bits, int n) {
  std::array<int, 3> rp{0, 1, 2}, cp{0, 1, 2};
  int best = bits;
  const auto encode = [&](const std::array<int, 3>& r, const std::array<int, 3>& c, bool tr) {
    int out = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int sx = tr ? c[y] : r[x], sy = tr ? r[x] : c[y];
        const int src = tr ? (bits >> (sy * n + sx) & 1) : (bits >> (sx * n + sy) & 1);
        if (src) out |= 1 << (x * n + y);
      }
    return out;
  };
  std::sort(rp.begin(), rp.begin() + n);
  do {
    std::sort(cp.begin(), cp.begin() + n);
    do {
      best = std::min({best, encode(rp, cp, false), encode(rp, cp, true)});
    } while (std::next_permutation(cp.begin(), cp.begin() + n));
  } while (std::next_permutation(rp.begin(), rp.begin() + n));
  return best;
}

}  // namespace

TEST_CASE("oracle brackets the triangle value") {
  Matrix t(2, 2);
  t << 1, 1, 0, 1;
  const oracle::Bounds b = oracle::schur_bounds(t);
  CHECK(b.upper - b.lower <= 1e-6);
  CHECK(std::abs(b.lower - 1.1547005383792515) <= 1e-6);
}

TEST_CASE("SDP norm agrees with the oracle on all 2x2 and 3x3 0/1 patterns") {
  for (int n : {2, 3}) {
    std::map<int, double> by_class;
    for (int bits = 0; bits < (1 << (n * n)); ++bits) {
      const int c = canonical(bits, n);
      if (!by_class.count(c)) {
        const Matrix p = pattern_matrix(c, n, n);
        const oracle::Bounds b = oracle::schur_bounds(p, 4, static_cast<std::uint64_t>(c) + 1);
        CHECK_MESSAGE(b.upper - b.lower <= 1e-5, "class " << c);
        by_class[c] = 0.5 * (b.upper + b.lower);
      }
      const double sdp = schur::norm(schur::ScalarMultiplier(pattern_matrix(bits, n, n)));
      CHECK_MESSAGE(std::abs(sdp - by_class[c]) <= 1e-5, "pattern " << bits);
    }
    MESSAGE(n << "x" << n << ": " << by_class.size() << " pattern classes");
  }
}

TEST_CASE("SDP norm lies inside the oracle bracket for random complex inputs") {
  std::uint64_t seed = 3;
  for (int trial = 0; trial < 4; ++trial) {
    Matrix phi(3, 3);
    for (int i = 0; i < 9; ++i) phi.data()[i] = std::polar(1.0 + (i % 3), 0.7 * i + trial);
    const oracle::Bounds b = oracle::schur_bounds(phi, 4, seed++);
    const double sdp = schur::norm(schur::ScalarMultiplier(phi));
    CHECK(sdp >= b.lower - 1e-6);
    CHECK(sdp <= b.upper + 1e-6);
  }
}
