#include "sepdisc/states.hpp"

#include <cmath>
#include <random>

namespace sepdisc {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kPurityTol = 1e-8;

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// Orthonormal frame for one side: column 0 is u1, column 1 completes the
// span of {u1, u2} with the relative phase absorbed so that u2's second
// amplitude is real and nonnegative. alpha = 1 - |<u1|u2>|^2.
struct SideFrame {
  Matrix basis;
  double alpha;
  double beta;
};

SideFrame side_frame(const PureState& u1, const PureState& u2) {
  const Index d = u1.dim();
  if (d < 2) throw std::invalid_argument("canonicalize: factor dimension must be >= 2");
  if (u2.dim() != d) throw std::invalid_argument("canonicalize: factor dimensions differ");

  const Complex c = u1.amps().dot(u2.amps());  // <u1|u2>
  Vector w = u2.amps() - c * u1.amps();
  const double s = w.norm();

  Matrix basis(d, 2);
  basis.col(0) = u1.amps();
  if (s > kPurityTol) {
    // Rotate the frame vector so the off-diagonal of rho2 comes out real >= 0.
    const Complex phase = (std::abs(c) > 0.0) ? std::conj(c) / std::abs(c)
                                              : Complex(1.0, 0.0);
    basis.col(1) = (w / s) * phase;
  } else {
    // Parallel states: complete with the lowest-index standard basis vector
    // not parallel to u1, Gram-Schmidt orthonormalized.
    for (Index k = 0; k < d; ++k) {
      Vector e = Vector::Zero(d);
      e(k) = 1.0;
      e -= u1.amps() * (u1.amps().dot(e));
      if (e.squaredNorm() >= 0.5) {
        basis.col(1) = e / e.norm();
        break;
      }
    }
  }

  const double overlap2 = std::min(1.0, std::norm(c));
  SideFrame f;
  f.basis = basis;
  f.alpha = 1.0 - overlap2;
  f.beta = std::sqrt(std::max(0.0, f.alpha * (1.0 - f.alpha)));
  return f;
}

Matrix qubit_density(double alpha, double beta) {
  Matrix m(2, 2);
  m << Complex(1.0 - alpha), Complex(beta), Complex(beta), Complex(alpha);
  return m;
}

}  // namespace

PureState::PureState(Vector amplitudes) : v_(std::move(amplitudes)) {
  if (v_.size() == 0) throw std::invalid_argument("PureState: empty amplitude vector");
  for (Index i = 0; i < v_.size(); ++i)
    if (!std::isfinite(v_(i).real()) || !std::isfinite(v_(i).imag()))
      throw std::invalid_argument("PureState: non-finite amplitude");
  if (std::abs(v_.squaredNorm() - 1.0) > kNormTol)
    throw std::invalid_argument("PureState: amplitudes are not normalized");
}

void validate(const ProductMixedState& m) {
  auto in01 = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!in01(m.p1) || !in01(m.p2) || !in01(m.alpha1) || !in01(m.alpha2))
    throw std::invalid_argument("ProductMixedState: p, alpha must lie in [0,1]");
  if (m.beta1 < 0.0 || m.beta2 < 0.0)
    throw std::invalid_argument("ProductMixedState: beta must be nonnegative");
  if (m.beta1 * m.beta1 > m.alpha1 * (1.0 - m.alpha1) + 1e-12 ||
      m.beta2 * m.beta2 > m.alpha2 * (1.0 - m.alpha2) + 1e-12)
    throw std::invalid_argument("ProductMixedState: beta^2 exceeds alpha(1-alpha)");
}

HermitianMatrix density(const PureProductState& s) {
  const Vector v = kron_vec(s.a.amps(), s.b.amps());
  return HermitianMatrix(v * v.adjoint(), BipartiteDims{s.a.dim(), s.b.dim()});
}

CanonicalPair canonicalize(const PureProductState& s1, const PureProductState& s2) {
  const SideFrame fa = side_frame(s1.a, s2.a);
  const SideFrame fb = side_frame(s1.b, s2.b);
  CanonicalPair c;
  c.alpha1 = fa.alpha;
  c.alpha2 = fb.alpha;
  c.beta1 = fa.beta;
  c.beta2 = fb.beta;
  c.basis_a = fa.basis;
  c.basis_b = fb.basis;
  return c;
}

CanonicalPair from_bloch(BlochAngle theta_a, BlochAngle theta_b) {
  const double pi = std::acos(-1.0);
  if (theta_a.theta < 0.0 || theta_a.theta > pi || theta_b.theta < 0.0 ||
      theta_b.theta > pi)
    throw std::invalid_argument("from_bloch: angles must lie in [0, pi]");
  const double sa = std::sin(theta_a.theta / 2.0);
  const double sb = std::sin(theta_b.theta / 2.0);
  return canonical_from_alphas(sa * sa, sb * sb);
}

CanonicalPair canonical_from_alphas(double alpha1, double alpha2) {
  if (alpha1 < 0.0 || alpha1 > 1.0 || alpha2 < 0.0 || alpha2 > 1.0)
    throw std::invalid_argument("canonical pair: alpha must lie in [0,1]");
  CanonicalPair c;
  c.alpha1 = alpha1;
  c.alpha2 = alpha2;
  c.beta1 = std::sqrt(std::max(0.0, alpha1 * (1.0 - alpha1)));
  c.beta2 = std::sqrt(std::max(0.0, alpha2 * (1.0 - alpha2)));
  c.basis_a = Matrix::Identity(2, 2);
  c.basis_b = Matrix::Identity(2, 2);
  return c;
}

std::pair<PureProductState, PureProductState> canonical_states(const CanonicalPair& c) {
  Vector e0(2), psi_a(2), psi_b(2);
  e0 << 1.0, 0.0;
  psi_a << std::sqrt(1.0 - c.alpha1), std::sqrt(c.alpha1);
  psi_b << std::sqrt(1.0 - c.alpha2), std::sqrt(c.alpha2);
  PureProductState s1{PureState(e0), PureState(e0)};
  PureProductState s2{PureState(psi_a), PureState(psi_b)};
  return {s1, s2};
}

PureProductState random_pure_product(std::uint64_t seed, Index d_a, Index d_b) {
  if (d_a < 1 || d_b < 1)
    throw std::invalid_argument("random_pure_product: dims must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto sample = [&](Index d) {
    Vector v(d);
    for (Index i = 0; i < d; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return PureState(Vector(v / v.norm()));
  };
  PureState a = sample(d_a);
  PureState b = sample(d_b);
  return PureProductState{std::move(a), std::move(b)};
}

std::pair<HermitianMatrix, HermitianMatrix> mixed_density(const ProductMixedState& m) {
  validate(m);
  Matrix d1(2, 2), d2(2, 2);
  d1 << Complex(1.0 - m.p1), Complex(0.0), Complex(0.0), Complex(m.p1);
  d2 << Complex(1.0 - m.p2), Complex(0.0), Complex(0.0), Complex(m.p2);
  HermitianMatrix rho1 = tensor(HermitianMatrix(d1), HermitianMatrix(d2));
  HermitianMatrix rho2 = tensor(HermitianMatrix(qubit_density(m.alpha1, m.beta1)),
                                HermitianMatrix(qubit_density(m.alpha2, m.beta2)));
  return {rho1, rho2};
}

}  // namespace sepdisc
