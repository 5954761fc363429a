#pragma once

// Measures on finite groups acting by right convolution, convolution
// multipliers {mu_t}, and the abelian identification with B(G x Gamma).

#include "multlab/groups.hpp"
#include "multlab/herz_schur.hpp"
#include "multlab/schur.hpp"

#include <vector>

namespace multlab::convolution {

using groups::DualGroup;
using groups::FiniteGroup;

class Measure {
 public:
  Measure(FiniteGroup group, Vector weights);

  const FiniteGroup& group() const noexcept { return group_; }
  const Vector& weights() const noexcept { return weights_; }
  Complex operator()(int t) const { return weights_(t); }
  double norm1() const { return weights_.cwiseAbs().sum(); }

 private:
  FiniteGroup group_;
  Vector weights_;
};

// (mu * nu)(r) = sum_{st = r} mu(s) nu(t). Throws GroupMismatch.
Measure convolve(const Measure& mu, const Measure& nu);

// theta(mu) f (s) = sum_t f(st) mu(t).
Vector theta_apply(const Measure& mu, const Vector& f);
// Matrix of theta(mu) in the point-mass basis: M[s', t'] = mu(s'^-1 t').
Matrix theta_matrix(const Measure& mu);
// Norm of theta(mu) on (functions, sup norm): the largest row l1 sum.
double theta_norm(const Measure& mu);

class ConvolutionFamily {
 public:
  // measures[t] is mu_t.
  ConvolutionFamily(FiniteGroup group, std::vector<Vector> measures);

  const FiniteGroup& group() const noexcept { return group_; }
  Measure measure(int t) const { return Measure(group_, measures_[t]); }
  const std::vector<Vector>& measures() const noexcept { return measures_; }

 private:
  FiniteGroup group_;
  std::vector<Vector> measures_;
};

// N(s,t) stored at s*|G| + t, each a |G| x |G| matrix acting on functions.
struct OperatorTable {
  int order = 0;
  std::vector<Matrix> entries;

  const Matrix& at(int s, int t) const { return entries[static_cast<std::size_t>(s) * order + t]; }
  Matrix& at(int s, int t) { return entries[static_cast<std::size_t>(s) * order + t]; }
};

// N(s,t) = theta(mu_{t s^-1}).
OperatorTable conv_transference(const ConvolutionFamily& family);

// R(f (x) lambda_r) = theta(mu_r) f (x) lambda_r.
std::pair<Vector, int> r_map(const ConvolutionFamily& family, const Vector& f, int r);

struct RightMultiplierReport {
  bool holds = false;
  double invariance_residual = 0.0;  // max |N(s,t) - N(sr,tr)|
  double module_residual = 0.0;      // max |P(d_a * h) - d_a * P(h)|, P the predual of N(e,r)
};

// N(s,t) depends on t s^-1 only, and every T_r = N(e,r) has a predual
// commuting with left convolution by point masses, i.e. T_r is right
// convolution by a measure.
RightMultiplierReport right_multiplier_check(const FiniteGroup& g, const OperatorTable& table, double tol = 1e-10);
RightMultiplierReport right_multiplier_check(const ConvolutionFamily& family, double tol = 1e-10);

class AdmissiblePair {
 public:
  // values(s, x) = psi(s, x) over G x Gamma. Throws NotAbelian.
  AdmissiblePair(FiniteGroup group, Matrix values);

  const FiniteGroup& group() const noexcept { return group_; }
  const DualGroup& dual() const noexcept { return dual_; }
  const Matrix& values() const noexcept { return values_; }

  // The product group G x Gamma and psi as a function on it.
  const FiniteGroup& product() const noexcept { return product_; }
  Vector as_function() const;

 private:
  FiniteGroup group_;
  DualGroup dual_;
  FiniteGroup product_;
  Matrix values_;
};

struct ConvNorms {
  double fourier = 0.0;
  double sdp = 0.0;
  schur::NormResult sdp_detail;
};

// fourier: l1 norm of the Fourier coefficients of psi over G x Gamma;
// sdp: Schur norm of Psi((t,x),(s,y)) = psi(t s^-1, x y^-1).
ConvNorms conv_norm_abelian(const AdmissiblePair& psi, const schur::NormOptions& options = {});
Matrix conv_schur_matrix(const AdmissiblePair& psi);

struct IdempotentClass {
  enum class Kind { NotIdempotent, NormOne, NormGreaterOne };
  Kind kind = Kind::NotIdempotent;
  double norm1 = 0.0;
  double residual = 0.0;   // max |mu * mu - mu|
  std::vector<int> subgroup;  // NormOne: support H, ascending
  Vector character;           // NormOne: gamma on H, in subgroup order
  bool positive = false;      // NormOne with gamma = 1
};

const char* kind_name(IdempotentClass::Kind k);

IdempotentClass classify_idempotent_measure(const Measure& mu, double tol = 1e-10);

// F over the translation action and Lambda induce the same map on
// crossed-product coefficients (diag F(r,.) = theta(mu_r)) and every F(r,.)
// is constant.
bool central_conv_intersection_check(const herz_schur::CentralHSMultiplier& f, const ConvolutionFamily& family,
                                     double tol = 1e-10);

}  // namespace multlab::convolution
