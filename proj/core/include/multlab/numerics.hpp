#pragma once

// Dense complex linear algebra shared by the multiplier modules.

#include <Eigen/Dense>

#include <complex>
#include <string_view>

namespace multlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace numerics {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-8;
inline constexpr double kRankCutoff = 1e-10;

struct Eigensystem {
  RealVector values;  // descending
  Matrix vectors;     // columns are eigenvectors, unitary
};

bool all_finite(const Matrix& m);
// Throws InvalidInput when any entry is NaN or infinite.
void require_finite(const Matrix& m, std::string_view what);

double max_abs(const Matrix& m);
double frobenius_norm(const Matrix& m);

// ||M - M*||_max <= rel_tol * max(1, ||M||_F)
bool is_hermitian(const Matrix& m, double rel_tol = kHermitianTol);

/// Hermitian eigendecomposition M = U diag(values) U*, values sorted
/// descending. Throws NotHermitian or NoConvergence.
Eigensystem herm_eig(const Matrix& m);

/// Smallest eigenvalue >= -tol * max(1, ||M||). Throws NotHermitian.
bool is_psd(const Matrix& m, double tol = kPsdTol);

/// V with V* V = M for PSD M. Eigenvalues below kRankCutoff * lambda_max are
/// dropped, so V has rank(M) rows. Each row's largest-modulus entry is made
/// real positive. Throws NotPSD.
Matrix gram_factor(const Matrix& m, double tol = kPsdTol);

RealVector singular_values(const Matrix& m);
double op_norm(const Matrix& m);
double trace_norm(const Matrix& m);

Matrix hadamard(const Matrix& a, const Matrix& b);

}  // namespace numerics
}  // namespace multlab
