#pragma once

// Small dense semidefinite programs in linear-matrix-inequality form:
//
//     minimize    sum_i objective[i] * y[i]
//     subject to  constant[b] + sum_i y[i] * F_i[b]  is PSD for every block b
//
// Blocks are complex Hermitian. The solver realifies them and runs a
// primal-dual interior-point method with Nesterov-Todd scaling.

#include "multlab/numerics.hpp"

#include <optional>
#include <vector>

namespace multlab::sdp {

// One entry of a sparse Hermitian coefficient. An off-diagonal entry (r, c)
// stands for both (r, c) -> value and (c, r) -> conj(value).
struct Entry {
  int row = 0;
  int col = 0;
  Complex value;
};

struct Term {
  int block = 0;
  std::vector<Entry> entries;
};

struct SdpProblem {
  std::vector<int> block_dims;
  std::vector<double> objective;
  std::vector<Matrix> constant;
  std::vector<std::vector<Term>> coefficients;  // one list of terms per variable

  // Optional strictly feasible starting points. `start` must make every
  // block positive definite; `dual_start` must be positive definite with
  // Re tr(F_i X) = objective[i].
  std::optional<std::vector<double>> start;
  std::optional<std::vector<Matrix>> dual_start;

  int variable_count() const { return static_cast<int>(objective.size()); }
  int total_dim() const;
  // Throws InvalidInput on out-of-range references, non-Hermitian data or
  // variables that appear in no block.
  void validate() const;
};

enum class Status { Optimal, MaxIterations, Infeasible };

const char* status_name(Status s);

struct IterationRecord {
  double primal = 0.0;  // objective at y
  double dual = 0.0;    // lower bound from the dual matrix
  double mu = 0.0;
  double primal_step = 0.0;
  double dual_step = 0.0;
};

struct SdpSolution {
  Status status = Status::MaxIterations;
  double optimum = 0.0;     // objective . y
  double dual_bound = 0.0;  // -Re tr(constant X)
  double duality_gap = 0.0;
  double feasibility_residual = 0.0;
  int iterations = 0;
  std::vector<double> y;
  std::vector<Matrix> block_values;  // constant + sum y_i F_i
  std::vector<Matrix> dual_blocks;
  std::vector<IterationRecord> trace;
};

struct SolverOptions {
  int max_iterations = 200;
  double gap_tol = 1e-9;          // relative to 1 + |primal|
  double feasibility_tol = 1e-9;  // relative residuals
  double step_fraction = 0.95;
  bool record_trace = false;
};

inline constexpr int kMaxTotalDim = 256;

SdpSolution solve(const SdpProblem& problem, const SolverOptions& options = {});

/// Program whose optimum is the Schur multiplier norm of phi (rows X,
/// columns Y): minimise t over PSD matrices [[R, phi], [phi*, S]] whose
/// diagonal entries all equal t. Variable 0 is t; the remaining variables
/// are the real and imaginary parts of the free off-diagonal entries of R
/// and S. Both starting points are filled in and strictly feasible.
SdpProblem schur_norm_program(const Matrix& phi);

}  // namespace multlab::sdp
