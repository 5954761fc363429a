#include "multlab/schur.hpp"

#include "multlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace multlab::schur {

namespace {

struct Piece {
  double value = 0.0;
  double lower = 0.0;
  sdp::Status status = sdp::Status::Optimal;
  Matrix v;
  Matrix w;
};

// A single row (or column) multiplier has norm max |entry| exactly.
Piece solve_degenerate(const Matrix& phi) {
  Piece p;
  const double m = numerics::max_abs(phi);
  p.value = p.lower = m;
  if (m == 0.0) {
    p.v = Matrix::Zero(phi.rows(), 0);
    p.w = Matrix::Zero(phi.cols(), 0);
    return p;
  }
  const double r = std::sqrt(m);
  if (phi.rows() == 1) {
    p.v = Matrix::Constant(1, 1, r);
    p.w = phi.adjoint() / r;
  } else {
    p.w = Matrix::Constant(phi.cols(), 1, r);
    p.v = phi / r;
  }
  return p;
}

Piece solve_sdp(const Matrix& phi, const sdp::SolverOptions& options) {
  if (phi.rows() == 1 || phi.cols() == 1) return solve_degenerate(phi);
  const double scale = numerics::max_abs(phi);
  if (scale == 0.0) return solve_degenerate(phi);

  const sdp::SdpSolution sol = sdp::solve(sdp::schur_norm_program(phi / scale), options);
  if (sol.status == sdp::Status::Infeasible) {
    throw Error(ErrorCode::SolverFailure, "Schur norm program reported infeasibility");
  }
  Piece p;
  p.status = sol.status;
  p.value = scale * sol.optimum;
  p.lower = scale * std::min(sol.dual_bound, sol.optimum);

  const Eigen::Index m = phi.rows();
  const Eigen::Index n = phi.cols();
  const Matrix g = numerics::gram_factor(sol.block_values[0], 1e-6);
  const double root = std::sqrt(scale);
  p.v = root * g.leftCols(m).transpose().conjugate();
  p.w = root * g.rightCols(n).transpose().conjugate();
  return p;
}

struct Components {
  std::vector<std::vector<int>> rows, cols;
};

Components support_components(const Matrix& phi) {
  const int m = static_cast<int>(phi.rows());
  const int n = static_cast<int>(phi.cols());
  std::vector<int> parent(m + n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y)
      if (phi(x, y) != Complex(0.0, 0.0)) {
        const int a = find(x), b = find(m + y);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::map<int, int> slot;
  Components c;
  for (int x = 0; x < m; ++x) {
    bool nonzero = false;
    for (int y = 0; y < n && !nonzero; ++y) nonzero = phi(x, y) != Complex(0.0, 0.0);
    if (!nonzero) continue;
    const int root = find(x);
    if (!slot.count(root)) {
      slot[root] = static_cast<int>(c.rows.size());
      c.rows.emplace_back();
      c.cols.emplace_back();
    }
    c.rows[slot[root]].push_back(x);
  }
  for (int y = 0; y < n; ++y) {
    const int root = find(m + y);
    if (slot.count(root)) c.cols[slot[root]].push_back(y);
  }
  return c;
}

// Indices of distinct rows of `a` and, for every row, the index of its
// representative among them.
std::pair<std::vector<int>, std::vector<int>> distinct_rows(const Matrix& a) {
  std::vector<int> reps, which(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    int found = -1;
    for (std::size_t k = 0; k < reps.size() && found < 0; ++k)
      if (a.row(i) == a.row(reps[k])) found = static_cast<int>(k);
    if (found < 0) {
      found = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(i));
    }
    which[i] = found;
  }
  return {reps, which};
}

Piece solve_presolved(const Matrix& phi, const sdp::SolverOptions& options) {
  const Components comps = support_components(phi);
  Piece total;
  std::vector<Piece> pieces;
  std::vector<std::vector<int>> row_rep, col_rep;
  Eigen::Index dim = 0;
  for (std::size_t c = 0; c < comps.rows.size(); ++c) {
    const auto& rows = comps.rows[c];
    const auto& cols = comps.cols[c];
    Matrix block(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) block(i, j) = phi(rows[i], cols[j]);
    const auto [rreps, rwhich] = distinct_rows(block);
    const Matrix bt = block.transpose();
    const auto [creps, cwhich] = distinct_rows(bt);
    Matrix reduced(rreps.size(), creps.size());
    for (std::size_t i = 0; i < rreps.size(); ++i)
      for (std::size_t j = 0; j < creps.size(); ++j) reduced(i, j) = block(rreps[i], creps[j]);
    pieces.push_back(solve_sdp(reduced, options));
    row_rep.push_back(rwhich);
    col_rep.push_back(cwhich);
    dim += pieces.back().v.cols();
  }

  total.v = Matrix::Zero(phi.rows(), dim);
  total.w = Matrix::Zero(phi.cols(), dim);
  Eigen::Index offset = 0;
  for (std::size_t c = 0; c < pieces.size(); ++c) {
    const Piece& p = pieces[c];
    const Eigen::Index d = p.v.cols();
    for (std::size_t i = 0; i < comps.rows[c].size(); ++i)
      total.v.block(comps.rows[c][i], offset, 1, d) = p.v.row(row_rep[c][i]);
    for (std::size_t j = 0; j < comps.cols[c].size(); ++j)
      total.w.block(comps.cols[c][j], offset, 1, d) = p.w.row(col_rep[c][j]);
    offset += d;
    total.value = std::max(total.value, p.value);
    total.lower = std::max(total.lower, p.lower);
    if (p.status != sdp::Status::Optimal) total.status = p.status;
  }
  return total;
}

double max_row_norm(const Matrix& a) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) r = std::max(r, a.row(i).norm());
  return r;
}

}  // namespace

ScalarMultiplier::ScalarMultiplier(Matrix values) : values_(std::move(values)) {
  numerics::require_finite(values_, "Schur multiplier");
}

Matrix apply(const ScalarMultiplier& phi, const Matrix& k) {
  if (k.rows() != phi.y_size() || k.cols() != phi.x_size()) {
    throw Error(ErrorCode::DimensionMismatch, "kernel must be y_size x x_size");
  }
  return phi.values().transpose().cwiseProduct(k);
}

NormResult solve_norm(const ScalarMultiplier& phi, const NormOptions& options) {
  if (phi.x_size() == 0 || phi.y_size() == 0) {
    throw Error(ErrorCode::InvalidInput, "empty multiplier");
  }
  const Piece p = options.presolve ? solve_presolved(phi.values(), options.solver)
                                   : solve_sdp(phi.values(), options.solver);
  NormResult r;
  r.value = p.value;
  r.lower = p.lower;
  r.gap = p.value - p.lower;
  r.status = p.status;
  if (r.status != sdp::Status::Optimal && r.gap > kMaxAcceptedGap * std::max(1.0, r.value)) {
    std::ostringstream msg;
    msg << "solver stopped with bounds [" << r.lower << ", " << r.value << "]";
    throw Error(ErrorCode::SolverFailure, msg.str());
  }
  r.factorization.dim = static_cast<int>(p.v.cols());
  r.factorization.v = p.v;
  r.factorization.w = p.w;
  r.factorization.bound = max_row_norm(p.v) * max_row_norm(p.w);
  return r;
}

double norm(const ScalarMultiplier& phi, const NormOptions& options) {
  return solve_norm(phi, options).value;
}

Factorization factorization(const ScalarMultiplier& phi, const NormOptions& options) {
  return solve_norm(phi, options).factorization;
}

double reproduction_error(const ScalarMultiplier& phi, const Factorization& f) {
  if (f.v.rows() != phi.x_size() || f.w.rows() != phi.y_size() || f.v.cols() != f.w.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "factorization does not match the multiplier");
  }
  if (f.dim == 0) return numerics::max_abs(phi.values());
  return numerics::max_abs(phi.values() - f.reproduce());
}

bool is_positive(const ScalarMultiplier& phi, double tol) {
  if (phi.x_size() != phi.y_size()) {
    throw Error(ErrorCode::DimensionMismatch, "positivity needs a square multiplier");
  }
  const Matrix p = phi.values().transpose();
  if (!numerics::is_hermitian(p, std::max(tol, numerics::kHermitianTol))) return false;
  return numerics::is_psd(0.5 * (p + p.adjoint()), tol);
}

}  // namespace multlab::schur
