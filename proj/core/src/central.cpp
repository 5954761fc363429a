#include "multlab/central.hpp"

#include "multlab/error.hpp"

#include <algorithm>
#include <cmath>

namespace multlab::central {

CentralMultiplier::CentralMultiplier(std::vector<Matrix> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) throw Error(ErrorCode::InvalidInput, "central multiplier needs a nonempty Z");
  for (const Matrix& s : slices_) {
    if (s.rows() != slices_.front().rows() || s.cols() != slices_.front().cols()) {
      throw Error(ErrorCode::DimensionMismatch, "central multiplier slices differ in shape");
    }
    numerics::require_finite(s, "central multiplier");
  }
}

CentralMultiplier operator*(const CentralMultiplier& a, const CentralMultiplier& b) {
  if (a.z_size() != b.z_size() || a.x_size() != b.x_size() || a.y_size() != b.y_size()) {
    throw Error(ErrorCode::DimensionMismatch, "central multipliers differ in shape");
  }
  std::vector<Matrix> out;
  for (int z = 0; z < a.z_size(); ++z) out.push_back(a.slices()[z].cwiseProduct(b.slices()[z]));
  return CentralMultiplier(std::move(out));
}

CentralNorm central_norm(const CentralMultiplier& phi, const schur::NormOptions& options) {
  CentralNorm out;
  out.value = -1.0;
  for (int z = 0; z < phi.z_size(); ++z) {
    out.per_slice.push_back(schur::solve_norm(phi.slice(z), options));
    const schur::NormResult& r = out.per_slice.back();
    if (r.value > out.value) {
      out.value = r.value;
      out.argmax_z = z;
    }
    out.lower = std::max(out.lower, r.lower);
  }
  return out;
}

BlockKernel apply_block(const CentralMultiplier& phi, const BlockKernel& h) {
  if (static_cast<int>(h.size()) != phi.z_size()) {
    throw Error(ErrorCode::DimensionMismatch, "block kernel has the wrong number of blocks");
  }
  BlockKernel out;
  for (int z = 0; z < phi.z_size(); ++z) out.push_back(schur::apply(phi.slice(z), h[z]));
  return out;
}

Matrix bilinear_apply(const CentralMultiplier& phi, const Matrix& h, const Matrix& k) {
  const int nx = phi.x_size(), ny = phi.y_size(), nz = phi.z_size();
  if (h.rows() != nz || h.cols() != ny || k.rows() != ny || k.cols() != nx) {
    throw Error(ErrorCode::DimensionMismatch, "bilinear map needs h: Z x Y and k: Y x X");
  }
  Matrix out = Matrix::Zero(nz, nx);
  for (int z = 0; z < nz; ++z)
    for (int x = 0; x < nx; ++x) {
      Complex acc = 0.0;
      for (int y = 0; y < ny; ++y) acc += phi(x, y, z) * h(z, y) * k(y, x);
      out(z, x) = acc;
    }
  return out;
}

bool is_positive_central(const CentralMultiplier& phi, double tol) {
  for (int z = 0; z < phi.z_size(); ++z)
    if (!schur::is_positive(phi.slice(z), tol)) return false;
  return true;
}

Matrix block_diagonal_embedding(const CentralMultiplier& phi) {
  const int nx = phi.x_size(), ny = phi.y_size(), nz = phi.z_size();
  Matrix out = Matrix::Zero(nz * nx, nz * ny);
  for (int z = 0; z < nz; ++z) out.block(z * nx, z * ny, nx, ny) = phi.slices()[z];
  return out;
}

double factorization_upper_bound(const CentralMultiplier& phi, const OperatorFactorization& f, double tol) {
  const int nx = phi.x_size(), ny = phi.y_size(), nz = phi.z_size();
  if (static_cast<int>(f.v.size()) != nx || static_cast<int>(f.w.size()) != ny) {
    throw Error(ErrorCode::DimensionMismatch, "operator families must be indexed by X and Y");
  }
  const std::size_t terms = nx > 0 ? f.v.front().size() : 0;
  const auto check_family = [&](const std::vector<std::vector<Matrix>>& fam) {
    for (const auto& list : fam) {
      if (list.size() != terms) throw Error(ErrorCode::DimensionMismatch, "operator families differ in length");
      for (const Matrix& m : list)
        if (m.rows() != nz || m.cols() != nz) throw Error(ErrorCode::DimensionMismatch, "operators must be z_size x z_size");
    }
  };
  check_family(f.v);
  check_family(f.w);

  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      Matrix s = Matrix::Zero(nz, nz);
      for (std::size_t i = 0; i < terms; ++i) s += f.w[y][i].adjoint() * f.v[x][i];
      for (int a = 0; a < nz; ++a)
        for (int b = 0; b < nz; ++b) {
          const Complex target = a == b ? phi(x, y, a) : Complex(0.0, 0.0);
          if (std::abs(s(a, b) - target) > tol) {
            throw Error(ErrorCode::NotAFactorization, "families do not reproduce the multiplier", {x, y, a, b});
          }
        }
    }

  const auto column_norm = [&](const std::vector<std::vector<Matrix>>& fam) {
    double best = 0.0;
    for (const auto& list : fam) {
      Matrix s = Matrix::Zero(nz, nz);
      for (const Matrix& m : list) s += m.adjoint() * m;
      best = std::max(best, std::sqrt(numerics::op_norm(s)));
    }
    return best;
  };
  return column_norm(f.v) * column_norm(f.w);
}

OperatorFactorization assemble_diagonal(const std::vector<schur::Factorization>& per_slice) {
  if (per_slice.empty()) throw Error(ErrorCode::InvalidInput, "no slices to assemble");
  const int nz = static_cast<int>(per_slice.size());
  const Eigen::Index nx = per_slice.front().v.rows();
  const Eigen::Index ny = per_slice.front().w.rows();
  OperatorFactorization out;
  out.v.assign(nx, {});
  out.w.assign(ny, {});
  for (int z = 0; z < nz; ++z) {
    const schur::Factorization& f = per_slice[z];
    if (f.v.rows() != nx || f.w.rows() != ny) {
      throw Error(ErrorCode::DimensionMismatch, "slice factorizations differ in shape");
    }
    for (Eigen::Index k = 0; k < f.v.cols(); ++k) {
      for (Eigen::Index x = 0; x < nx; ++x) {
        Matrix m = Matrix::Zero(nz, nz);
        m(z, z) = f.v(x, k);
        out.v[x].push_back(std::move(m));
      }
      for (Eigen::Index y = 0; y < ny; ++y) {
        Matrix m = Matrix::Zero(nz, nz);
        m(z, z) = f.w(y, k);
        out.w[y].push_back(std::move(m));
      }
    }
  }
  return out;
}

}  // namespace multlab::central
