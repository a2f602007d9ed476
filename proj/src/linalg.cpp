#include "sepdisc/linalg.hpp"

#include <cmath>

namespace sepdisc {

namespace {

constexpr double kHermTol = 1e-12;

bool all_finite(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

// Off-diagonal Frobenius norm of the strict lower triangle, doubled.
double offdiag_norm(const Matrix& m) {
  double s = 0.0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = j + 1; i < m.rows(); ++i) s += 2.0 * std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianMatrix::HermitianMatrix(Matrix raw, std::optional<BipartiteDims> parts)
    : m_(std::move(raw)), parts_(parts) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw std::invalid_argument("HermitianMatrix: matrix must be square and nonempty");
  if (!all_finite(m_))
    throw std::invalid_argument("HermitianMatrix: non-finite entry");
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  const double asym = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermTol * scale)
    throw std::invalid_argument("HermitianMatrix: input is not Hermitian");
  if (asym > 0.0) m_ = ((m_ + m_.adjoint()) / 2.0).eval();
  if (parts_) {
    if (parts_->a <= 0 || parts_->b <= 0 || parts_->a * parts_->b != m_.rows())
      throw std::invalid_argument("HermitianMatrix: bipartite dims do not match");
  }
}

HermitianMatrix HermitianMatrix::Identity(Index d, std::optional<BipartiteDims> parts) {
  return HermitianMatrix(Matrix::Identity(d, d), parts);
}

HermitianMatrix HermitianMatrix::Zero(Index d, std::optional<BipartiteDims> parts) {
  return HermitianMatrix(Matrix::Zero(d, d), parts);
}

HermitianMatrix HermitianMatrix::withParts(BipartiteDims parts) const {
  return HermitianMatrix(m_, parts);
}

HermitianMatrix tensor(const HermitianMatrix& x, const HermitianMatrix& y) {
  const Index da = x.dim(), db = y.dim();
  Matrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = x.mat()(i, j) * y.mat();
  return HermitianMatrix(std::move(out), BipartiteDims{da, db});
}

HermitianMatrix partial_transpose(const HermitianMatrix& x) {
  if (!x.parts())
    throw std::invalid_argument("partial_transpose: bipartite dims required");
  const Index da = x.parts()->a, db = x.parts()->b;
  Matrix out(x.dim(), x.dim());
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) =
          x.mat().block(i * db, j * db, db, db).transpose();
  return HermitianMatrix(std::move(out), *x.parts());
}

EigResult eig_hermitian(const HermitianMatrix& x) {
  const Index n = x.dim();
  Matrix a = x.mat();
  Matrix v = Matrix::Identity(n, n);
  const double norm = std::max(a.norm(), 1e-300);
  const double target = 1e-14 * norm;

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) <= target) {
      converged = true;
      break;
    }
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        // Exact 2x2 diagonalization of [[app, apq], [conj(apq), aqq]].
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double d = (app - aqq) / 2.0;
        const double r = std::hypot(d, std::abs(apq));
        // Eigenvector (apq, lam - app) for the eigenvalue lam closer to app
        // keeps rotations small; lam - app is computed as
        // sign(d) |apq|^2 / (r + |d|) to avoid the cancellation in the
        // naive difference when |apq| << |d|.
        Complex u0 = apq;
        double u1 = (d >= 0.0 ? 1.0 : -1.0) * std::norm(apq) / (r + std::abs(d));
        double nrm = std::sqrt(std::norm(u0) + u1 * u1);
        Complex c, s;
        if (nrm <= 1e-300) {
          c = 1.0;
          s = 0.0;
        } else {
          c = u0 / nrm;
          s = u1 / nrm;
        }
        // Unitary U2 = [[c, -conj(s)], [s, conj(c)]]; apply A <- U2^H A U2.
        for (Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * c + akq * s;
          a(k, q) = -akp * std::conj(s) + akq * std::conj(c);
        }
        for (Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(c) * apk + std::conj(s) * aqk;
          a(q, k) = -s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * c + vkq * s;
          v(k, q) = -vkp * std::conj(s) + vkq * std::conj(c);
        }
      }
    }
  }
  if (!converged && offdiag_norm(a) > target)
    throw std::runtime_error("eig_hermitian: Jacobi iteration did not converge");

  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](Index i, Index j) { return a(i, i).real() < a(j, j).real(); });

  EigResult res;
  res.values.resize(n);
  res.vectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    res.values(k) = a(order[static_cast<std::size_t>(k)],
                      order[static_cast<std::size_t>(k)]).real();
    res.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return res;
}

bool is_psd(const HermitianMatrix& x, double tol) {
  if (tol < 0.0) throw std::invalid_argument("is_psd: tol must be nonnegative");
  return eig_hermitian(x).values.minCoeff() >= -tol;
}

bool is_psd(const HermitianMatrix& x) {
  return is_psd(x, 1e-9 * std::max(1.0, x.normF()));
}

HermitianMatrix principal_submatrix(const HermitianMatrix& x,
                                    const std::vector<Index>& J) {
  if (J.empty()) throw std::invalid_argument("principal_submatrix: empty index set");
  for (Index j : J)
    if (j < 0 || j >= x.dim())
      throw std::out_of_range("principal_submatrix: index out of range");
  const Index k = static_cast<Index>(J.size());
  Matrix out(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      out(i, j) = x.mat()(J[static_cast<std::size_t>(i)], J[static_cast<std::size_t>(j)]);
  return HermitianMatrix(std::move(out));
}

namespace {

Complex det_cofactor(const Matrix& m) {
  const Index n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Complex det = 0.0;
  Matrix minor(n - 1, n - 1);
  double sign = 1.0;
  for (Index c = 0; c < n; ++c) {
    for (Index i = 1; i < n; ++i) {
      Index jj = 0;
      for (Index j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    det += sign * m(0, c) * det_cofactor(minor);
    sign = -sign;
  }
  return det;
}

}  // namespace

Complex determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
  if (m.rows() <= 4) return det_cofactor(m);
  return m.partialPivLu().determinant();
}

bool minor_psd_check(const HermitianMatrix& x, Index r) {
  if (r < 1 || r > x.dim())
    throw std::invalid_argument("minor_psd_check: r out of range");
  std::vector<Index> J;
  for (Index k = 1; k <= r; ++k) {
    J.push_back(k - 1);
    const Complex d = determinant(principal_submatrix(x, J).mat());
    if (d.real() <= 0.0) return false;
  }
  return true;
}

double trace_product(const HermitianMatrix& x, const HermitianMatrix& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("trace_product: dimension mismatch");
  const Complex t = (x.mat() * y.mat()).trace();
  if (std::abs(t.imag()) > 1e-10 * std::max(1.0, std::abs(t.real())))
    throw std::runtime_error("trace_product: unexpected imaginary trace");
  return t.real();
}

}  // namespace sepdisc
