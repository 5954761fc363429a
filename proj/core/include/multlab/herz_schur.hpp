#pragma once

// Herz-Schur multipliers of a finite dynamical system (C(Z), G, alpha) with
// alpha_t(f)(z) = f(z.t). Crossed-product elements sum_r pi(a_r) lambda_r are
// realized on l2(G x Z), index t*|Z| + z.

#include "multlab/central.hpp"
#include "multlab/groups.hpp"

namespace multlab::herz_schur {

using groups::FiniteGroup;
using groups::GroupAction;

// F(r, z) = a_r(z); values is |G| x |Z|.
class CentralHSMultiplier {
 public:
  CentralHSMultiplier(GroupAction action, Matrix values);

  const GroupAction& action() const noexcept { return action_; }
  const FiniteGroup& group() const noexcept { return action_.group(); }
  Complex operator()(int r, int z) const { return values_(r, z); }
  const Matrix& values() const noexcept { return values_; }

 private:
  GroupAction action_;
  Matrix values_;
};

// phi(s,t) = u(t s^-1).
schur::ScalarMultiplier transference_scalar(const FiniteGroup& g, const Vector& u);
schur::NormResult hs_norm_scalar(const FiniteGroup& g, const Vector& u, const schur::NormOptions& options = {});

// phi(s,t,z) = F(t s^-1, z.t^-1).
central::CentralMultiplier transference_central(const CentralHSMultiplier& f);
central::CentralNorm hs_norm_central(const CentralHSMultiplier& f, const schur::NormOptions& options = {});

class CrossedProductElement {
 public:
  // coefficients row r is the function a_r on Z.
  CrossedProductElement(GroupAction action, Matrix coefficients);

  // Recovers the coefficients from a_r(z) = M[(e,z),(r^-1,z)]; throws
  // Mismatch when M is not the matrix of any element.
  static CrossedProductElement from_matrix(GroupAction action, const Matrix& m, double tol = 1e-9);

  const GroupAction& action() const noexcept { return action_; }
  const Matrix& coefficients() const noexcept { return coefficients_; }

  // M[(t,z),(s,z')] = a_{t s^-1}(z.t^-1) delta_{z z'}.
  Matrix matrix() const;

 private:
  GroupAction action_;
  Matrix coefficients_;
};

CrossedProductElement multiply(const CrossedProductElement& a, const CrossedProductElement& b);
CrossedProductElement adjoint(const CrossedProductElement& a);

// a_r -> F(r,.) a_r. Throws Mismatch for differing systems.
CrossedProductElement apply_SF(const CentralHSMultiplier& f, const CrossedProductElement& e);

// Psi((t,z),(s,z')) = F(t s^-1, z.t^-1), constant in z'.
Matrix psi_matrix(const CentralHSMultiplier& f);

// Blocks {(.,z)} x {(.,z)} of Psi on the diagonal, zero elsewhere. Block z
// is the transpose of the transference slice z.
Matrix psi_block_diagonal(const CentralHSMultiplier& f);

// Translation action only (NotTranslationAction otherwise):
// phi_a(s,t) = a_{t s^-1}(t^-1) and a_r(p) = phi(r^-1 p^-1, p^-1).
schur::ScalarMultiplier to_schur(const CentralHSMultiplier& a);
CentralHSMultiplier from_schur(const FiniteGroup& g, const schur::ScalarMultiplier& phi);

}  // namespace multlab::herz_schur
