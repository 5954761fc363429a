#include "multlab/herz_schur.hpp"

#include "multlab/error.hpp"

#include <cmath>

namespace multlab::herz_schur {

namespace {

void require_same(const GroupAction& a, const GroupAction& b) {
  if (!(a == b)) throw Error(ErrorCode::Mismatch, "elements belong to different dynamical systems");
}

void require_translation(const GroupAction& a) {
  if (!a.is_translation()) {
    throw Error(ErrorCode::NotTranslationAction, "expected the translation action of G on itself");
  }
}

}  // namespace

CentralHSMultiplier::CentralHSMultiplier(GroupAction action, Matrix values)
    : action_(std::move(action)), values_(std::move(values)) {
  if (values_.rows() != action_.group().order() || values_.cols() != action_.space_size()) {
    throw Error(ErrorCode::DimensionMismatch, "Herz-Schur multiplier must be |G| x |Z|");
  }
  numerics::require_finite(values_, "Herz-Schur multiplier");
}

schur::ScalarMultiplier transference_scalar(const FiniteGroup& g, const Vector& u) {
  const int n = g.order();
  if (u.size() != n) throw Error(ErrorCode::DimensionMismatch, "function length differs from group order");
  Matrix phi(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) phi(s, t) = u(g.div(t, s));
  return schur::ScalarMultiplier(std::move(phi));
}

schur::NormResult hs_norm_scalar(const FiniteGroup& g, const Vector& u, const schur::NormOptions& options) {
  return schur::solve_norm(transference_scalar(g, u), options);
}

central::CentralMultiplier transference_central(const CentralHSMultiplier& f) {
  const GroupAction& act = f.action();
  const FiniteGroup& g = act.group();
  const int n = g.order();
  std::vector<Matrix> slices;
  for (int z = 0; z < act.space_size(); ++z) {
    Matrix phi(n, n);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) phi(s, t) = f(g.div(t, s), act.act(z, g.inv(t)));
    slices.push_back(std::move(phi));
  }
  return central::CentralMultiplier(std::move(slices));
}

central::CentralNorm hs_norm_central(const CentralHSMultiplier& f, const schur::NormOptions& options) {
  return central::central_norm(transference_central(f), options);
}

CrossedProductElement::CrossedProductElement(GroupAction action, Matrix coefficients)
    : action_(std::move(action)), coefficients_(std::move(coefficients)) {
  if (coefficients_.rows() != action_.group().order() || coefficients_.cols() != action_.space_size()) {
    throw Error(ErrorCode::DimensionMismatch, "coefficients must be |G| x |Z|");
  }
  numerics::require_finite(coefficients_, "crossed-product coefficients");
}

Matrix CrossedProductElement::matrix() const {
  const FiniteGroup& g = action_.group();
  const int n = g.order(), nz = action_.space_size();
  Matrix m = Matrix::Zero(n * nz, n * nz);
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      for (int z = 0; z < nz; ++z) m(t * nz + z, s * nz + z) = coefficients_(g.div(t, s), action_.act(z, g.inv(t)));
  return m;
}

CrossedProductElement CrossedProductElement::from_matrix(GroupAction action, const Matrix& m, double tol) {
  const FiniteGroup& g = action.group();
  const int n = g.order(), nz = action.space_size();
  if (m.rows() != n * nz || m.cols() != n * nz) {
    throw Error(ErrorCode::DimensionMismatch, "matrix size differs from |G||Z|");
  }
  Matrix coeff(n, nz);
  for (int r = 0; r < n; ++r)
    for (int z = 0; z < nz; ++z) coeff(r, z) = m(g.identity() * nz + z, g.inv(r) * nz + z);
  CrossedProductElement e(std::move(action), std::move(coeff));
  const Matrix back = e.matrix();
  const double scale = std::max(1.0, numerics::max_abs(m));
  if (numerics::max_abs(back - m) > tol * scale) {
    throw Error(ErrorCode::Mismatch, "matrix is not in the crossed product");
  }
  return e;
}

CrossedProductElement multiply(const CrossedProductElement& a, const CrossedProductElement& b) {
  require_same(a.action(), b.action());
  return CrossedProductElement::from_matrix(a.action(), a.matrix() * b.matrix());
}

CrossedProductElement adjoint(const CrossedProductElement& a) {
  return CrossedProductElement::from_matrix(a.action(), a.matrix().adjoint());
}

CrossedProductElement apply_SF(const CentralHSMultiplier& f, const CrossedProductElement& e) {
  require_same(f.action(), e.action());
  return CrossedProductElement(e.action(), f.values().cwiseProduct(e.coefficients()));
}

Matrix psi_matrix(const CentralHSMultiplier& f) {
  const GroupAction& act = f.action();
  const FiniteGroup& g = act.group();
  const int n = g.order(), nz = act.space_size();
  Matrix psi(n * nz, n * nz);
  for (int t = 0; t < n; ++t)
    for (int z = 0; z < nz; ++z) {
      const int zt = act.act(z, g.inv(t));
      for (int s = 0; s < n; ++s)
        for (int z2 = 0; z2 < nz; ++z2) psi(t * nz + z, s * nz + z2) = f(g.div(t, s), zt);
    }
  return psi;
}

Matrix psi_block_diagonal(const CentralHSMultiplier& f) {
  const int n = f.group().order(), nz = f.action().space_size();
  const Matrix psi = psi_matrix(f);
  Matrix out = Matrix::Zero(n * nz, n * nz);
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      for (int z = 0; z < nz; ++z) {
        // Reorder so block z is contiguous: row z*|G| + t.
        out(z * n + t, z * n + s) = psi(t * nz + z, s * nz + z);
      }
  return out;
}

schur::ScalarMultiplier to_schur(const CentralHSMultiplier& a) {
  require_translation(a.action());
  const FiniteGroup& g = a.group();
  const int n = g.order();
  Matrix phi(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) phi(s, t) = a(g.div(t, s), g.inv(t));
  return schur::ScalarMultiplier(std::move(phi));
}

CentralHSMultiplier from_schur(const FiniteGroup& g, const schur::ScalarMultiplier& phi) {
  const int n = g.order();
  if (phi.x_size() != n || phi.y_size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "multiplier must be |G| x |G|");
  }
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int p = 0; p < n; ++p) a(r, p) = phi(g.mul(g.inv(r), g.inv(p)), g.inv(p));
  return CentralHSMultiplier(groups::action_from_translation(g), std::move(a));
}

}  // namespace multlab::herz_schur
