#include "multlab/convolution.hpp"

#include "multlab/error.hpp"

#include <algorithm>
#include <cmath>

namespace multlab::convolution {

namespace {

void require_same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (!(a == b)) throw Error(ErrorCode::GroupMismatch, "measures live on different groups");
}

void require_length(const FiniteGroup& g, const Vector& v, const char* what) {
  if (v.size() != g.order()) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " length differs from group order");
}

}  // namespace

Measure::Measure(FiniteGroup group, Vector weights) : group_(std::move(group)), weights_(std::move(weights)) {
  require_length(group_, weights_, "measure");
  numerics::require_finite(weights_, "measure");
}

Measure convolve(const Measure& mu, const Measure& nu) {
  require_same_group(mu.group(), nu.group());
  const FiniteGroup& g = mu.group();
  Vector out = Vector::Zero(g.order());
  for (int s = 0; s < g.order(); ++s)
    for (int t = 0; t < g.order(); ++t) out(g.mul(s, t)) += mu(s) * nu(t);
  return Measure(g, std::move(out));
}

Vector theta_apply(const Measure& mu, const Vector& f) {
  const FiniteGroup& g = mu.group();
  require_length(g, f, "function");
  Vector out = Vector::Zero(g.order());
  for (int s = 0; s < g.order(); ++s)
    for (int t = 0; t < g.order(); ++t) out(s) += f(g.mul(s, t)) * mu(t);
  return out;
}

Matrix theta_matrix(const Measure& mu) {
  const FiniteGroup& g = mu.group();
  Matrix m(g.order(), g.order());
  for (int s = 0; s < g.order(); ++s)
    for (int t = 0; t < g.order(); ++t) m(s, t) = mu(g.mul(g.inv(s), t));
  return m;
}

double theta_norm(const Measure& mu) {
  const Matrix m = theta_matrix(mu);
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

ConvolutionFamily::ConvolutionFamily(FiniteGroup group, std::vector<Vector> measures)
    : group_(std::move(group)), measures_(std::move(measures)) {
  if (static_cast<int>(measures_.size()) != group_.order()) {
    throw Error(ErrorCode::DimensionMismatch, "convolution family must have one measure per group element");
  }
  for (const Vector& m : measures_) {
    require_length(group_, m, "measure");
    numerics::require_finite(m, "measure");
  }
}

OperatorTable conv_transference(const ConvolutionFamily& family) {
  const FiniteGroup& g = family.group();
  const int n = g.order();
  std::vector<Matrix> by_element;
  for (int r = 0; r < n; ++r) by_element.push_back(theta_matrix(family.measure(r)));
  OperatorTable table{n, std::vector<Matrix>(static_cast<std::size_t>(n) * n)};
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) table.at(s, t) = by_element[g.div(t, s)];
  return table;
}

std::pair<Vector, int> r_map(const ConvolutionFamily& family, const Vector& f, int r) {
  return {theta_apply(family.measure(r), f), r};
}

RightMultiplierReport right_multiplier_check(const FiniteGroup& g, const OperatorTable& table, double tol) {
  const int n = g.order();
  if (table.order != n || table.entries.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::DimensionMismatch, "operator table does not match the group");
  }
  for (const Matrix& m : table.entries)
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "operators must be |G| x |G|");

  RightMultiplierReport rep;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int r = 0; r < n; ++r)
        rep.invariance_residual = std::max(
            rep.invariance_residual, numerics::max_abs(table.at(s, t) - table.at(g.mul(s, r), g.mul(t, r))));

  // The predual of T acts on l1(G) by P = T^T. Test P(d_a * d_b) = d_a * P(d_b),
  // where (d_a * h)(x) = h(a^-1 x).
  for (int r = 0; r < n; ++r) {
    const Matrix p = table.at(g.identity(), r).transpose();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Vector lhs = p.col(g.mul(a, b));
        const Vector pb = p.col(b);
        for (int x = 0; x < n; ++x)
          rep.module_residual = std::max(rep.module_residual, std::abs(lhs(x) - pb(g.mul(g.inv(a), x))));
      }
  }
  rep.holds = rep.invariance_residual <= tol && rep.module_residual <= tol;
  return rep;
}

RightMultiplierReport right_multiplier_check(const ConvolutionFamily& family, double tol) {
  return right_multiplier_check(family.group(), conv_transference(family), tol);
}

AdmissiblePair::AdmissiblePair(FiniteGroup group, Matrix values)
    : group_(std::move(group)),
      dual_(groups::dual_abelian(group_)),
      product_(groups::direct_product({group_, dual_.group()})),
      values_(std::move(values)) {
  if (values_.rows() != group_.order() || values_.cols() != dual_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "psi must be |G| x |Gamma|");
  }
  numerics::require_finite(values_, "admissible pair");
}

Vector AdmissiblePair::as_function() const {
  const int m = dual_.size();
  Vector u(product_.order());
  for (int s = 0; s < group_.order(); ++s)
    for (int x = 0; x < m; ++x) u(s * m + x) = values_(s, x);
  return u;
}

Matrix conv_schur_matrix(const AdmissiblePair& psi) {
  const FiniteGroup& h = psi.product();
  const Vector u = psi.as_function();
  Matrix phi(h.order(), h.order());
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b) phi(a, b) = u(h.div(a, b));
  return phi;
}

ConvNorms conv_norm_abelian(const AdmissiblePair& psi, const schur::NormOptions& options) {
  ConvNorms out;
  const DualGroup dual = groups::dual_abelian(psi.product());
  out.fourier = groups::fourier_coefficients(dual, psi.as_function()).cwiseAbs().sum();
  out.sdp_detail = schur::solve_norm(schur::ScalarMultiplier(conv_schur_matrix(psi)), options);
  out.sdp = out.sdp_detail.value;
  return out;
}

const char* kind_name(IdempotentClass::Kind k) {
  switch (k) {
    case IdempotentClass::Kind::NotIdempotent: return "NotIdempotent";
    case IdempotentClass::Kind::NormOne: return "NormOne";
    case IdempotentClass::Kind::NormGreaterOne: return "NormGreaterOne";
  }
  return "Unknown";
}

IdempotentClass classify_idempotent_measure(const Measure& mu, double tol) {
  IdempotentClass c;
  const FiniteGroup& g = mu.group();
  c.norm1 = mu.norm1();
  c.residual = numerics::max_abs(convolve(mu, mu).weights() - mu.weights());
  if (c.residual > tol) {
    c.kind = IdempotentClass::Kind::NotIdempotent;
    return c;
  }
  if (c.norm1 > 1.0 + 1e-8) {
    c.kind = IdempotentClass::Kind::NormGreaterOne;
    return c;
  }
  for (int t = 0; t < g.order(); ++t)
    if (std::abs(mu(t)) > 1e-9) c.subgroup.push_back(t);
  const double h = static_cast<double>(c.subgroup.size());
  std::vector<Complex> gamma(g.order(), 0.0);
  for (int t : c.subgroup) gamma[t] = h * mu(t);

  bool ok = !c.subgroup.empty() && g.is_subgroup(c.subgroup);
  for (int s : c.subgroup) {
    if (!ok) break;
    ok = std::abs(std::abs(gamma[s]) - 1.0) <= 1e-8;
    for (int t : c.subgroup) ok = ok && std::abs(gamma[g.mul(s, t)] - gamma[s] * gamma[t]) <= 1e-8;
  }
  if (!ok) {
    throw Error(ErrorCode::InvalidInput, "contractive idempotent is not a character times a normalized Haar measure");
  }
  c.kind = IdempotentClass::Kind::NormOne;
  c.character.resize(static_cast<Eigen::Index>(c.subgroup.size()));
  c.positive = true;
  for (std::size_t i = 0; i < c.subgroup.size(); ++i) {
    c.character(static_cast<Eigen::Index>(i)) = gamma[c.subgroup[i]];
    c.positive = c.positive && std::abs(gamma[c.subgroup[i]] - 1.0) <= 1e-8;
  }
  return c;
}

bool central_conv_intersection_check(const herz_schur::CentralHSMultiplier& f, const ConvolutionFamily& family,
                                     double tol) {
  if (!(f.group() == family.group())) throw Error(ErrorCode::GroupMismatch, "multiplier and family use different groups");
  if (!f.action().is_translation()) {
    throw Error(ErrorCode::NotTranslationAction, "expected the translation action of G on itself");
  }
  const int n = f.group().order();
  for (int r = 0; r < n; ++r) {
    const Matrix diag = f.values().row(r).transpose().asDiagonal();
    if (numerics::max_abs(diag - theta_matrix(family.measure(r))) > tol) return false;
    for (int z = 1; z < n; ++z)
      if (std::abs(f(r, z) - f(r, 0)) > tol) return false;
  }
  return true;
}

}  // namespace multlab::convolution
