#pragma once

// Central Schur C(Z)-multipliers for a finite set Z: scalar functions
// phi(x,y,z), acting slice by slice on Z-indexed families of kernels.

#include "multlab/schur.hpp"

#include <vector>

namespace multlab::central {

class CentralMultiplier {
 public:
  CentralMultiplier() = default;
  // One x_size x y_size slice per z; throws DimensionMismatch on ragged
  // input and InvalidInput on non-finite entries or an empty Z.
  explicit CentralMultiplier(std::vector<Matrix> slices);

  int x_size() const noexcept { return static_cast<int>(slices_.front().rows()); }
  int y_size() const noexcept { return static_cast<int>(slices_.front().cols()); }
  int z_size() const noexcept { return static_cast<int>(slices_.size()); }
  Complex operator()(int x, int y, int z) const { return slices_[z](x, y); }
  schur::ScalarMultiplier slice(int z) const { return schur::ScalarMultiplier(slices_[z]); }
  const std::vector<Matrix>& slices() const noexcept { return slices_; }

 private:
  std::vector<Matrix> slices_;
};

// Pointwise product.
CentralMultiplier operator*(const CentralMultiplier& a, const CentralMultiplier& b);

struct CentralNorm {
  double value = 0.0;
  double lower = 0.0;
  int argmax_z = 0;  // smallest z attaining the maximum
  std::vector<schur::NormResult> per_slice;
};

CentralNorm central_norm(const CentralMultiplier& phi, const schur::NormOptions& options = {});

// Block z is a y_size x x_size kernel.
using BlockKernel = std::vector<Matrix>;

BlockKernel apply_block(const CentralMultiplier& phi, const BlockKernel& h);

// out(z,x) = sum_y phi(x,y,z) h(z,y) k(y,x); h is Z x Y, k is Y x X.
Matrix bilinear_apply(const CentralMultiplier& phi, const Matrix& h, const Matrix& k);

bool is_positive_central(const CentralMultiplier& phi, double tol = numerics::kPsdTol);

// The slices placed on the diagonal of a (z_size*x_size) x (z_size*y_size)
// matrix, zero elsewhere: D_phi as a scalar multiplier on the disjoint union
// of the X x Y.
Matrix block_diagonal_embedding(const CentralMultiplier& phi);

// Operator families x -> (V_i(x))_i with each V_i(x) a z_size x z_size
// matrix, so that phi(x,y) = sum_i W_i(y)* V_i(x) as multiplication operators
// on C(Z).
struct OperatorFactorization {
  std::vector<std::vector<Matrix>> v;  // [x][i]
  std::vector<std::vector<Matrix>> w;  // [y][i]
};

// Checks sum_i W_i(y)* V_i(x) = diag(phi(x,y,.)) to `tol` (NotAFactorization
// with witness (x, y, row, col) otherwise) and returns
// max_x |sum_i V_i(x)* V_i(x)|^(1/2) * max_y |sum_i W_i(y)* W_i(y)|^(1/2).
double factorization_upper_bound(const CentralMultiplier& phi, const OperatorFactorization& f,
                                 double tol = 1e-7);

// Per-slice factorizations placed on the diagonal: V_(z,k)(x) = v_z,k(x) e_z e_z*.
OperatorFactorization assemble_diagonal(const std::vector<schur::Factorization>& per_slice);

}  // namespace multlab::central
