#pragma once

// Scalar Schur multipliers on finite X x Y. A multiplier phi is stored with
// rows indexed by X and columns by Y; kernels k are Y x X matrices and phi
// acts by (phi.k)(y,x) = phi(x,y) k(y,x).

#include "multlab/numerics.hpp"
#include "multlab/sdp.hpp"

namespace multlab::schur {

class ScalarMultiplier {
 public:
  ScalarMultiplier() = default;
  // Throws InvalidInput on non-finite entries.
  explicit ScalarMultiplier(Matrix values);

  int x_size() const noexcept { return static_cast<int>(values_.rows()); }
  int y_size() const noexcept { return static_cast<int>(values_.cols()); }
  Complex operator()(int x, int y) const { return values_(x, y); }
  const Matrix& values() const noexcept { return values_; }

 private:
  Matrix values_;
};

// phi(x,y) = <v(x), w(y)> = sum_k v_k(x) conj(w_k(y)).
struct Factorization {
  int dim = 0;
  Matrix v;  // x_size x dim, row x is v(x)
  Matrix w;  // y_size x dim
  double bound = 0.0;  // max_x |v(x)| * max_y |w(y)|

  Matrix reproduce() const { return v * w.adjoint(); }
};

struct NormOptions {
  // Split the support into connected blocks and drop repeated rows and
  // columns before solving; exact, and much smaller SDPs for sparse or
  // highly symmetric inputs.
  bool presolve = true;
  sdp::SolverOptions solver;
};

struct NormResult {
  double value = 0.0;  // certified upper bound (primal)
  double lower = 0.0;  // certified lower bound (dual)
  double gap = 0.0;
  sdp::Status status = sdp::Status::Optimal;
  Factorization factorization;
};

inline constexpr double kMaxAcceptedGap = 1e-4;

Matrix apply(const ScalarMultiplier& phi, const Matrix& k);

// Throws SolverFailure when the solver stops with a gap above kMaxAcceptedGap
// or reports infeasibility; a smaller gap is returned as an interval.
NormResult solve_norm(const ScalarMultiplier& phi, const NormOptions& options = {});
double norm(const ScalarMultiplier& phi, const NormOptions& options = {});
Factorization factorization(const ScalarMultiplier& phi, const NormOptions& options = {});

// Max |phi - reproduce()| entrywise.
double reproduction_error(const ScalarMultiplier& phi, const Factorization& f);

// PSD test of the matrix P(y,x) = phi(x,y), i.e. phi transposed, so that a
// Gram multiplier phi(x,y) = <v(x), v(y)> is positive. Non-Hermitian P is
// not positive.
bool is_positive(const ScalarMultiplier& phi, double tol = numerics::kPsdTol);

}  // namespace multlab::schur
