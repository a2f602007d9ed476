#ifndef SEPDISC_LINALG_HPP
#define SEPDISC_LINALG_HPP

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sepdisc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Dimensions of the two tensor factors of a bipartite operator.
struct BipartiteDims {
  Index a = 0;
  Index b = 0;
};

/// Dense complex Hermitian matrix with optional bipartite factor metadata.
///
/// Construction validates finiteness and Hermiticity: an asymmetry up to
/// 1e-12 (relative to the largest entry) is symmetrized away as (X+X')/2,
/// anything larger is rejected.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  explicit HermitianMatrix(Matrix raw,
                           std::optional<BipartiteDims> parts = std::nullopt);

  static HermitianMatrix Identity(Index d,
                                  std::optional<BipartiteDims> parts = std::nullopt);
  static HermitianMatrix Zero(Index d,
                              std::optional<BipartiteDims> parts = std::nullopt);

  const Matrix& mat() const { return m_; }
  Index dim() const { return m_.rows(); }
  const std::optional<BipartiteDims>& parts() const { return parts_; }

  /// Same matrix, re-tagged with factor dimensions.
  HermitianMatrix withParts(BipartiteDims parts) const;

  double normF() const { return m_.norm(); }

 private:
  Matrix m_;
  std::optional<BipartiteDims> parts_;
};

/// Result of a Hermitian eigendecomposition, eigenvalues ascending.
struct EigResult {
  Eigen::VectorXd values;
  Matrix vectors;  // columns, orthonormal, vectors.col(k) belongs to values(k)
};

/// Kronecker product; the result carries (dim X, dim Y) as factor dims.
HermitianMatrix tensor(const HermitianMatrix& x, const HermitianMatrix& y);

/// Partial transpose on the B factor. Requires bipartite metadata.
HermitianMatrix partial_transpose(const HermitianMatrix& x);

/// Cyclic Jacobi eigensolver for Hermitian matrices. Iteration cap 100
/// sweeps; stops once the off-diagonal Frobenius mass drops below
/// 1e-14 * ||X||_F. Throws std::runtime_error on non-convergence.
EigResult eig_hermitian(const HermitianMatrix& x);

bool is_psd(const HermitianMatrix& x, double tol);

/// Default tolerance: 1e-9 relative to ||X||_F.
bool is_psd(const HermitianMatrix& x);

/// Rows and columns restricted to J (order preserved).
HermitianMatrix principal_submatrix(const HermitianMatrix& x,
                                    const std::vector<Index>& J);

/// Determinant of a complex square matrix: exact cofactor expansion for
/// dim <= 4, LU with partial pivoting above.
Complex determinant(const Matrix& m);

/// Leading-principal-minor PSD test: true iff det X(1..k) > 0 for all
/// 1 <= k <= r. The caller asserts rank(X) <= r.
bool minor_psd_check(const HermitianMatrix& x, Index r);

/// Re(Tr XY). Asserts the imaginary part is negligible for Hermitian input.
double trace_product(const HermitianMatrix& x, const HermitianMatrix& y);

}  // namespace sepdisc

#endif  // SEPDISC_LINALG_HPP
