#include "multlab/numerics.hpp"

#include "multlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace multlab::numerics {

bool all_finite(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex v = m.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

void require_finite(const Matrix& m, std::string_view what) {
  if (!all_finite(m)) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + " has non-finite entries");
  }
}

double max_abs(const Matrix& m) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) r = std::max(r, std::abs(m.data()[i]));
  return r;
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

bool is_hermitian(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.norm());
  return max_abs(m - m.adjoint()) <= rel_tol * scale;
}

Eigensystem herm_eig(const Matrix& m) {
  if (!is_hermitian(m)) {
    throw Error(ErrorCode::NotHermitian, "herm_eig requires a square Hermitian matrix");
  }
  if (m.rows() == 0) return {RealVector(0), Matrix(0, 0)};
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver did not converge");
  }
  const Eigen::Index n = m.rows();
  Eigensystem out{RealVector(n), Matrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

bool is_psd(const Matrix& m, double tol) {
  if (!is_hermitian(m)) {
    throw Error(ErrorCode::NotHermitian, "is_psd requires a square Hermitian matrix");
  }
  if (m.rows() == 0) return true;
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver did not converge");
  }
  const RealVector& ev = solver.eigenvalues();
  const double scale = std::max(1.0, std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))));
  return ev(0) >= -tol * scale;
}

Matrix gram_factor(const Matrix& m, double tol) {
  if (!is_psd(m, tol)) {
    throw Error(ErrorCode::NotPSD, "gram_factor requires a positive semidefinite matrix");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return Matrix(0, 0);
  const Eigensystem es = herm_eig(m);
  const double lmax = es.values(0);
  if (lmax <= 0.0) return Matrix(0, n);
  Eigen::Index rank = 0;
  while (rank < n && es.values(rank) > kRankCutoff * lmax) ++rank;

  Matrix v(rank, n);
  for (Eigen::Index k = 0; k < rank; ++k) {
    v.row(k) = std::sqrt(es.values(k)) * es.vectors.col(k).adjoint();
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double a = std::abs(v(k, j));
      if (a > best * (1.0 + 1e-12)) {
        best = a;
        arg = j;
      }
    }
    if (best > 0.0) v.row(k) *= std::conj(v(k, arg)) / best;
  }
  return v;
}

RealVector singular_values(const Matrix& m) {
  if (m.size() == 0) return RealVector(0);
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues();
}

double op_norm(const Matrix& m) {
  const RealVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(0);
}

double trace_norm(const Matrix& m) { return singular_values(m).sum(); }

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "hadamard product of differently shaped matrices");
  }
  return a.cwiseProduct(b);
}

}  // namespace multlab::numerics
