#include "multlab/sdp.hpp"

#include "multlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace multlab::sdp {

namespace {

using BlockMat = std::vector<RealMatrix>;

struct RealEntry {
  int block;
  int row;
  int col;
  double value;
};

// Real symmetric problem in standard primal-dual form:
//   P: min <C, X>  s.t. <A_i, X> = b_i, X psd
//   D: max b.y     s.t. sum_i y_i A_i + Z = C, Z psd
// The LMI problem maps to D with A_i = -realify(F_i), C = realify(constant)
// and b = -objective.
struct RealProblem {
  std::vector<int> dims;
  std::vector<std::vector<RealEntry>> a;  // both triangles listed
  BlockMat c;
  RealVector b;
  int total = 0;
};

RealMatrix realify(const Matrix& h) {
  const Eigen::Index n = h.rows();
  RealMatrix r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = h.real();
  r.bottomRightCorner(n, n) = h.real();
  r.topRightCorner(n, n) = -h.imag();
  r.bottomLeftCorner(n, n) = h.imag();
  return r;
}

Matrix complexify(const RealMatrix& r) {
  const Eigen::Index n = r.rows() / 2;
  const RealMatrix p = r.topLeftCorner(n, n);
  const RealMatrix q = r.topRightCorner(n, n);
  const RealMatrix s = r.bottomRightCorner(n, n);
  Matrix out(n, n);
  out.real() = p + s;
  out.imag() = q.transpose() - q;
  return out;
}

void push_realified(std::vector<RealEntry>& out, int block, int n, const Entry& e0, double sign) {
  Entry e = e0;
  if (e.row > e.col) {
    std::swap(e.row, e.col);
    e.value = std::conj(e.value);
  }
  const int r = e.row;
  const int c = e.col;
  const double re = sign * e.value.real();
  const double im = sign * e.value.imag();
  if (r == c) {
    if (re != 0.0) {
      out.push_back({block, r, r, re});
      out.push_back({block, r + n, r + n, re});
    }
    return;
  }
  if (re != 0.0) {
    out.push_back({block, r, c, re});
    out.push_back({block, c, r, re});
    out.push_back({block, r + n, c + n, re});
    out.push_back({block, c + n, r + n, re});
  }
  if (im != 0.0) {
    out.push_back({block, r, c + n, -im});
    out.push_back({block, c + n, r, -im});
    out.push_back({block, c, r + n, im});
    out.push_back({block, r + n, c, im});
  }
}

RealProblem realify_problem(const SdpProblem& p) {
  RealProblem rp;
  for (int d : p.block_dims) {
    rp.dims.push_back(2 * d);
    rp.total += 2 * d;
  }
  for (const Matrix& c : p.constant) rp.c.push_back(realify(0.5 * (c + c.adjoint())));
  const int m = p.variable_count();
  rp.b = RealVector(m);
  rp.a.resize(m);
  for (int i = 0; i < m; ++i) {
    rp.b(i) = -p.objective[i];
    for (const Term& t : p.coefficients[i]) {
      for (const Entry& e : t.entries) {
        push_realified(rp.a[i], t.block, p.block_dims[t.block], e, -1.0);
      }
    }
  }
  return rp;
}

double inner(const BlockMat& x, const BlockMat& y) {
  double s = 0.0;
  for (std::size_t b = 0; b < x.size(); ++b) s += x[b].cwiseProduct(y[b]).sum();
  return s;
}

double frob(const BlockMat& x) { return std::sqrt(inner(x, x)); }

RealVector apply_a(const RealProblem& p, const BlockMat& x) {
  RealVector out = RealVector::Zero(static_cast<Eigen::Index>(p.a.size()));
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    double s = 0.0;
    for (const RealEntry& e : p.a[i]) s += e.value * x[e.block](e.row, e.col);
    out(static_cast<Eigen::Index>(i)) = s;
  }
  return out;
}

BlockMat apply_at(const RealProblem& p, const RealVector& y) {
  BlockMat out;
  for (int d : p.dims) out.push_back(RealMatrix::Zero(d, d));
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    const double yi = y(static_cast<Eigen::Index>(i));
    if (yi == 0.0) continue;
    for (const RealEntry& e : p.a[i]) out[e.block](e.row, e.col) += yi * e.value;
  }
  return out;
}

BlockMat sub(const BlockMat& x, const BlockMat& y) {
  BlockMat out = x;
  for (std::size_t b = 0; b < x.size(); ++b) out[b] -= y[b];
  return out;
}

void symmetrize(BlockMat& x) {
  for (RealMatrix& m : x) m = 0.5 * (m + m.transpose()).eval();
}

struct Scaling {
  RealMatrix g;
  RealMatrix ginv;
  RealMatrix w;
  RealVector lambda;
};

bool nt_scaling(const RealMatrix& x, const RealMatrix& z, Scaling& out) {
  Eigen::LLT<RealMatrix> lx(x);
  if (lx.info() != Eigen::Success) return false;
  const RealMatrix l = lx.matrixL();
  const RealMatrix s = l.transpose() * z * l;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (s + s.transpose()));
  if (es.info() != Eigen::Success) return false;
  const Eigen::Index n = x.rows();
  out.lambda = RealVector(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double ev = es.eigenvalues()(k);
    if (!(ev > 0.0)) return false;
    out.lambda(k) = std::sqrt(ev);
  }
  const RealVector inv_sqrt = out.lambda.array().rsqrt();
  const RealVector sqrt_l = out.lambda.array().sqrt();
  out.g = l * es.eigenvectors() * inv_sqrt.asDiagonal();
  const RealMatrix linv = l.triangularView<Eigen::Lower>().solve(RealMatrix::Identity(n, n));
  out.ginv = sqrt_l.asDiagonal() * es.eigenvectors().transpose() * linv;
  out.w = out.g * out.g.transpose();
  return true;
}

// Largest alpha with x + alpha dx psd (infinity if unbounded).
double max_step(const RealMatrix& x, const RealMatrix& dx) {
  Eigen::LLT<RealMatrix> lx(x);
  if (lx.info() != Eigen::Success) return 0.0;
  const auto l = lx.matrixL();
  RealMatrix t = l.solve(dx);
  t = l.solve(t.transpose().eval());
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (t + t.transpose()), Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  if (lmin >= 0.0) return std::numeric_limits<double>::infinity();
  return -1.0 / lmin;
}

// Schur complement M_ij = <A_i, W A_j W>.
RealMatrix schur_complement(const RealProblem& p, const std::vector<Scaling>& sc) {
  const Eigen::Index m = static_cast<Eigen::Index>(p.a.size());
  RealMatrix mat = RealMatrix::Zero(m, m);
  std::vector<std::vector<int>> nnz_per_block(p.a.size(), std::vector<int>(p.dims.size(), 0));
  for (std::size_t j = 0; j < p.a.size(); ++j)
    for (const RealEntry& e : p.a[j]) ++nnz_per_block[j][e.block];

  BlockMat bj;
  for (int d : p.dims) bj.push_back(RealMatrix::Zero(d, d));
  std::vector<RealMatrix> dense_a(p.dims.size());

  for (std::size_t j = 0; j < p.a.size(); ++j) {
    std::vector<bool> touched(p.dims.size(), false);
    for (std::size_t b = 0; b < p.dims.size(); ++b) {
      if (nnz_per_block[j][b] == 0) continue;
      touched[b] = true;
      const RealMatrix& w = sc[b].w;
      if (nnz_per_block[j][b] > 2 * p.dims[b]) {
        dense_a[b] = RealMatrix::Zero(p.dims[b], p.dims[b]);
        for (const RealEntry& e : p.a[j])
          if (e.block == static_cast<int>(b)) dense_a[b](e.row, e.col) += e.value;
        bj[b].noalias() = w * dense_a[b] * w;
      } else {
        bj[b].setZero();
        for (const RealEntry& e : p.a[j]) {
          if (e.block != static_cast<int>(b)) continue;
          bj[b].noalias() += e.value * w.col(e.row) * w.row(e.col);
        }
      }
    }
    for (std::size_t i = 0; i < p.a.size(); ++i) {
      double s = 0.0;
      for (const RealEntry& e : p.a[i]) {
        if (touched[e.block]) s += e.value * bj[e.block](e.row, e.col);
      }
      mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
    }
  }
  return 0.5 * (mat + mat.transpose());
}

struct SchurSolver {
  Eigen::LLT<RealMatrix> llt;
  Eigen::LDLT<RealMatrix> ldlt;
  bool use_ldlt = false;

  bool factor(const RealMatrix& m) {
    llt.compute(m);
    if (llt.info() == Eigen::Success) return true;
    const double reg = 1e-13 * std::max(1.0, m.diagonal().cwiseAbs().maxCoeff());
    RealMatrix mr = m;
    mr.diagonal().array() += reg;
    llt.compute(mr);
    if (llt.info() == Eigen::Success) return true;
    ldlt.compute(mr);
    use_ldlt = true;
    return ldlt.info() == Eigen::Success;
  }
  RealVector solve(const RealVector& r) const {
    if (use_ldlt) return ldlt.solve(r);
    return llt.solve(r);
  }
};

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Optimal: return "Optimal";
    case Status::MaxIterations: return "MaxIterations";
    case Status::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

int SdpProblem::total_dim() const {
  int t = 0;
  for (int d : block_dims) t += d;
  return t;
}

void SdpProblem::validate() const {
  const auto bad = [](const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); };
  if (block_dims.empty()) bad("problem has no blocks");
  for (int d : block_dims)
    if (d <= 0) bad("block dimensions must be positive");
  if (constant.size() != block_dims.size()) bad("one constant matrix per block required");
  for (std::size_t b = 0; b < block_dims.size(); ++b) {
    if (constant[b].rows() != block_dims[b] || constant[b].cols() != block_dims[b])
      bad("constant matrix has wrong dimensions");
    numerics::require_finite(constant[b], "constant block");
    if (!numerics::is_hermitian(constant[b], 1e-12)) bad("constant block is not Hermitian");
  }
  if (coefficients.size() != objective.size()) bad("one coefficient list per variable required");
  if (objective.empty()) bad("problem has no variables");
  for (double c : objective)
    if (!std::isfinite(c)) bad("objective has non-finite entries");
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    bool any = false;
    for (const Term& t : coefficients[i]) {
      if (t.block < 0 || t.block >= static_cast<int>(block_dims.size()))
        bad("term references undeclared block");
      const int n = block_dims[t.block];
      for (const Entry& e : t.entries) {
        if (e.row < 0 || e.col < 0 || e.row >= n || e.col >= n) bad("entry index out of range");
        if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()))
          bad("coefficient has non-finite entries");
        if (e.row == e.col && std::abs(e.value.imag()) > 1e-14 * std::max(1.0, std::abs(e.value)))
          bad("diagonal coefficient entries must be real");
        if (e.value != Complex(0.0, 0.0)) any = true;
      }
    }
    if (!any) bad("variable " + std::to_string(i) + " appears in no block");
  }
  if (start && start->size() != objective.size()) bad("start has wrong length");
  if (dual_start && dual_start->size() != block_dims.size()) bad("dual start has wrong block count");
}

SdpSolution solve(const SdpProblem& problem, const SolverOptions& options) {
  problem.validate();
  if (problem.total_dim() > kMaxTotalDim) {
    throw Error(ErrorCode::InvalidInput, "total block dimension exceeds " + std::to_string(kMaxTotalDim));
  }
  const RealProblem rp = realify_problem(problem);
  const Eigen::Index m = static_cast<Eigen::Index>(rp.a.size());
  const std::size_t nb = rp.dims.size();
  const double n_total = static_cast<double>(rp.total);

  const double norm_b = rp.b.norm();
  const double norm_c = frob(rp.c);

  // Starting point.
  RealVector y = RealVector::Zero(m);
  BlockMat x, z;
  bool z_from_start = false;
  if (problem.start) {
    for (Eigen::Index i = 0; i < m; ++i) y(i) = (*problem.start)[i];
    z = sub(rp.c, apply_at(rp, y));
    symmetrize(z);
    z_from_start = true;
    for (const RealMatrix& zb : z) {
      Eigen::LLT<RealMatrix> chk(zb);
      if (chk.info() != Eigen::Success) z_from_start = false;
    }
  }
  double max_a = 0.0;
  for (const auto& ai : rp.a) {
    double s = 0.0;
    for (const RealEntry& e : ai) s += e.value * e.value;
    max_a = std::max(max_a, std::sqrt(s));
  }
  if (!z_from_start) {
    y.setZero();
    const double rho = std::max({10.0, std::sqrt(n_total), norm_c, max_a});
    z.clear();
    for (int d : rp.dims) z.push_back(rho * RealMatrix::Identity(d, d));
  }
  bool x_from_start = false;
  if (problem.dual_start) {
    x.clear();
    x_from_start = true;
    for (std::size_t b = 0; b < nb; ++b) {
      const Matrix& xc = (*problem.dual_start)[b];
      if (xc.rows() != problem.block_dims[b] || xc.cols() != problem.block_dims[b]) {
        x_from_start = false;
        break;
      }
      x.push_back(0.5 * realify(0.5 * (xc + xc.adjoint())));
      Eigen::LLT<RealMatrix> chk(x.back());
      if (chk.info() != Eigen::Success) x_from_start = false;
    }
  }
  if (!x_from_start) {
    double ratio = 1.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      double s = 0.0;
      for (const RealEntry& e : rp.a[i]) s += e.value * e.value;
      ratio = std::max(ratio, (1.0 + std::abs(rp.b(i))) / (1.0 + std::sqrt(s)));
    }
    const double rho = std::max(10.0, std::sqrt(n_total) * ratio);
    x.clear();
    for (int d : rp.dims) x.push_back(rho * RealMatrix::Identity(d, d));
  }
  const double initial_trace = [&] {
    double t = 0.0;
    for (const RealMatrix& xb : x) t += xb.trace();
    return t;
  }();

  SdpSolution sol;
  bool converged = false;
  bool infeasible = false;
  int stalls = 0;
  double pinf = 0.0, dinf = 0.0, pobj = 0.0, dobj = 0.0, gap = 0.0;

  const auto evaluate = [&] {
    const RealVector rpv = rp.b - apply_a(rp, x);
    const BlockMat rd = sub(sub(rp.c, z), apply_at(rp, y));
    pinf = rpv.norm() / (1.0 + norm_b);
    dinf = frob(rd) / (1.0 + norm_c);
    pobj = -rp.b.dot(y);
    dobj = -inner(rp.c, x);
    gap = pobj - dobj;
    return std::make_pair(rpv, rd);
  };

  int iter = 0;
  for (; iter <= options.max_iterations; ++iter) {
    auto [rpv, rd] = evaluate();
    const double mu = inner(x, z) / n_total;
    if (options.record_trace) sol.trace.push_back({pobj, dobj, mu, 0.0, 0.0});

    const double gap_measure = std::max(std::abs(gap), inner(x, z));
    if (gap_measure <= options.gap_tol * (1.0 + std::abs(pobj)) && pinf <= options.feasibility_tol &&
        dinf <= options.feasibility_tol) {
      converged = true;
      break;
    }
    double trace_x = 0.0;
    for (const RealMatrix& xb : x) trace_x += xb.trace();
    if (trace_x > 1e10 * std::max(1.0, initial_trace)) {
      // Unbounded dual matrices: check for a certificate that the LMI is empty.
      BlockMat xn = x;
      for (RealMatrix& xb : xn) xb /= trace_x;
      const double a_res = apply_a(rp, xn).norm();
      if (a_res <= 1e-8 && inner(rp.c, xn) < -1e-10) infeasible = true;
      break;
    }
    if (y.norm() > 1e14) break;
    if (iter == options.max_iterations) break;

    std::vector<Scaling> sc(nb);
    bool ok = true;
    for (std::size_t b = 0; b < nb && ok; ++b) ok = nt_scaling(x[b], z[b], sc[b]);
    if (!ok) break;

    const RealMatrix schur = schur_complement(rp, sc);
    SchurSolver solver;
    if (!solver.factor(schur)) break;

    const bool dual_infeasible_step = dinf > 0.0;
    BlockMat wrdw(nb);
    for (std::size_t b = 0; b < nb; ++b) wrdw[b] = sc[b].w * rd[b] * sc[b].w;
    const RealVector a_wrdw = dual_infeasible_step ? apply_a(rp, wrdw) : RealVector::Zero(m);

    // Solve the Newton system for a given scaled complementarity right-hand side.
    const auto direction = [&](const std::vector<RealMatrix>& rhs, BlockMat& dx, RealVector& dy, BlockMat& dz) {
      BlockMat rc(nb);
      for (std::size_t b = 0; b < nb; ++b) {
        const RealVector& lam = sc[b].lambda;
        RealMatrix k = rhs[b];
        for (Eigen::Index i = 0; i < k.rows(); ++i)
          for (Eigen::Index j = 0; j < k.cols(); ++j) k(i, j) /= (lam(i) + lam(j));
        rc[b] = sc[b].g * k * sc[b].g.transpose();
      }
      dy = solver.solve(rpv - apply_a(rp, rc) + a_wrdw);
      dz = sub(rd, apply_at(rp, dy));
      dx.resize(nb);
      for (std::size_t b = 0; b < nb; ++b) dx[b] = rc[b] - sc[b].w * dz[b] * sc[b].w;
      symmetrize(dx);
      symmetrize(dz);
    };
    const auto steps = [&](const BlockMat& dx, const BlockMat& dz) {
      double ap = std::numeric_limits<double>::infinity();
      double ad = std::numeric_limits<double>::infinity();
      for (std::size_t b = 0; b < nb; ++b) {
        ap = std::min(ap, max_step(x[b], dx[b]));
        ad = std::min(ad, max_step(z[b], dz[b]));
      }
      return std::make_pair(ap, ad);
    };

    // Predictor.
    std::vector<RealMatrix> rhs(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      const RealVector& lam = sc[b].lambda;
      rhs[b] = RealMatrix::Zero(lam.size(), lam.size());
      rhs[b].diagonal() = -2.0 * lam.array().square();
    }
    BlockMat dx, dz;
    RealVector dy;
    direction(rhs, dx, dy, dz);
    auto [ap_aff, ad_aff] = steps(dx, dz);
    ap_aff = std::min(1.0, ap_aff);
    ad_aff = std::min(1.0, ad_aff);
    double mu_aff = 0.0;
    for (std::size_t b = 0; b < nb; ++b)
      mu_aff += (x[b] + ap_aff * dx[b]).cwiseProduct(z[b] + ad_aff * dz[b]).sum();
    mu_aff /= n_total;
    const double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0);

    // Corrector with the second-order term in the scaled space.
    for (std::size_t b = 0; b < nb; ++b) {
      const RealVector& lam = sc[b].lambda;
      const RealMatrix dxs = sc[b].ginv * dx[b] * sc[b].ginv.transpose();
      const RealMatrix dzs = sc[b].g.transpose() * dz[b] * sc[b].g;
      rhs[b] = -(dxs * dzs + dzs * dxs);
      rhs[b].diagonal().array() += 2.0 * sigma * mu - 2.0 * lam.array().square();
    }
    direction(rhs, dx, dy, dz);
    auto [ap, ad] = steps(dx, dz);
    ap = std::min(1.0, options.step_fraction * ap);
    ad = std::min(1.0, options.step_fraction * ad);
    if (options.record_trace) {
      sol.trace.back().primal_step = ap;
      sol.trace.back().dual_step = ad;
    }

    for (std::size_t b = 0; b < nb; ++b) {
      x[b] += ap * dx[b];
      z[b] += ad * dz[b];
    }
    y += ad * dy;
    symmetrize(x);
    symmetrize(z);

    if (ap < 1e-10 && ad < 1e-10) {
      if (++stalls >= 3) break;
    } else {
      stalls = 0;
    }
  }
  evaluate();

  sol.iterations = iter;
  sol.optimum = pobj;
  sol.dual_bound = dobj;
  sol.duality_gap = gap;
  sol.feasibility_residual = std::max(pinf, dinf);
  if (converged) {
    sol.status = Status::Optimal;
  } else if (infeasible) {
    sol.status = Status::Infeasible;
  } else if (std::abs(gap) <= 1e-7 * (1.0 + std::abs(pobj)) && sol.feasibility_residual <= 1e-8) {
    sol.status = Status::Optimal;
  } else {
    sol.status = Status::MaxIterations;
  }

  sol.y.assign(y.data(), y.data() + y.size());
  for (std::size_t b = 0; b < nb; ++b) {
    Matrix val = problem.constant[b];
    for (Eigen::Index i = 0; i < m; ++i) {
      for (const Term& t : problem.coefficients[i]) {
        if (t.block != static_cast<int>(b)) continue;
        for (const Entry& e : t.entries) {
          val(e.row, e.col) += y(i) * e.value;
          if (e.row != e.col) val(e.col, e.row) += y(i) * std::conj(e.value);
        }
      }
    }
    sol.block_values.push_back(std::move(val));
    sol.dual_blocks.push_back(complexify(x[b]));
  }
  return sol;
}

SdpProblem schur_norm_program(const Matrix& phi) {
  numerics::require_finite(phi, "Schur multiplier");
  const int rows = static_cast<int>(phi.rows());
  const int cols = static_cast<int>(phi.cols());
  const int n = rows + cols;
  if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidInput, "empty multiplier");

  SdpProblem p;
  p.block_dims = {n};
  Matrix c = Matrix::Zero(n, n);
  c.topRightCorner(rows, cols) = phi;
  c.bottomLeftCorner(cols, rows) = phi.adjoint();
  p.constant = {c};

  Term diag{0, {}};
  for (int i = 0; i < n; ++i) diag.entries.push_back({i, i, Complex(1.0, 0.0)});
  p.objective.push_back(1.0);
  p.coefficients.push_back({diag});

  const auto add_free_block = [&](int offset, int size) {
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) {
        p.objective.push_back(0.0);
        p.coefficients.push_back({Term{0, {{offset + a, offset + b, Complex(1.0, 0.0)}}}});
        p.objective.push_back(0.0);
        p.coefficients.push_back({Term{0, {{offset + a, offset + b, Complex(0.0, 1.0)}}}});
      }
    }
  };
  add_free_block(0, rows);
  add_free_block(rows, cols);

  const double t0 = 1.0 + phi.norm();
  std::vector<double> start(p.objective.size(), 0.0);
  start[0] = t0;
  p.start = std::move(start);
  p.dual_start = std::vector<Matrix>{Matrix::Identity(n, n) / static_cast<double>(n)};
  return p;
}

}  // namespace multlab::sdp
