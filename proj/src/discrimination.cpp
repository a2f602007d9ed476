#include "sepdisc/discrimination.hpp"

#include <cmath>

namespace sepdisc {

namespace {

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Effect make_effect(const Matrix& t_raw, BipartiteDims parts) {
  HermitianMatrix t(t_raw, parts);
  HermitianMatrix m(t.mat() + partial_transpose(t).mat(), parts);
  return Effect{std::move(m), Certificate{t, t}};
}

// Example-1 measurement: constant T_1, T_2 valid at gamma = 1.
Measurement example1_measurement() {
  const BipartiteDims parts{2, 2};
  Matrix t1 = Matrix::Zero(4, 4), t2 = Matrix::Zero(4, 4);
  t1(0, 0) = t1(3, 3) = 0.5;
  t1(0, 3) = t1(3, 0) = -0.5;
  t2(1, 1) = t2(2, 2) = 0.5;
  t2(1, 2) = t2(2, 1) = 0.5;
  Measurement m;
  m.effects.push_back(make_effect(t1, parts));
  m.effects.push_back(make_effect(t2, parts));
  return m;
}

}  // namespace

bool DiscriminationReport::perfect(double tol) const {
  if (completeness_residual > tol) return false;
  for (Eigen::Index i = 0; i < probability_matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < probability_matrix.cols(); ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(probability_matrix(i, j) - target) > tol) return false;
    }
  for (const ConeMembership& c : cone_results)
    if (!c.member) return false;
  return true;
}

Verdict decide_canonical(double alpha1, double alpha2) {
  Verdict v;
  v.lhs_sep = (1.0 - alpha1) + (1.0 - alpha2);
  v.lhs_qt = (1.0 - alpha1) * (1.0 - alpha2);
  v.sep_distinguishable = v.lhs_sep <= 1.0 + kVerdictTol;
  v.qt_distinguishable = v.lhs_qt <= kVerdictTol;
  return v;
}

Verdict decide_sep(const PureProductState& s1, const PureProductState& s2) {
  const CanonicalPair c = canonicalize(s1, s2);
  return decide_canonical(c.alpha1, c.alpha2);
}

Measurement construct_measurement(const CanonicalPair& c) {
  const double gamma = c.alpha1 + c.alpha2;
  if (gamma < 1.0 - kVerdictTol)
    throw std::domain_error("construct_measurement: alpha1 + alpha2 < 1");
  if (std::abs(gamma - 1.0) <= 1e-12) return example1_measurement();

  const double a1 = c.alpha1, a2 = c.alpha2;
  const double b1 = c.beta1, b2 = c.beta2;
  // gamma > 1 forces alpha_i > 0.
  const double q = b1 * b2 * gamma / (a1 * a2);
  const double r1 = (gamma - 1.0) * b1 / a1;
  const double r2 = (gamma - 1.0) * b2 / a2;
  const double scale = 1.0 / (2.0 * gamma);

  Matrix t1 = Matrix::Zero(4, 4), t2 = Matrix::Zero(4, 4);
  t1(0, 0) = gamma;
  t1(1, 1) = gamma - 1.0;
  t1(2, 2) = gamma - 1.0;
  t1(3, 3) = 2.0 - gamma;
  t1(0, 3) = t1(3, 0) = -q;
  t1(1, 3) = t1(3, 1) = -r1;
  t1(2, 3) = t1(3, 2) = -r2;
  t1 *= scale;

  t2(1, 1) = 1.0;
  t2(2, 2) = 1.0;
  t2(3, 3) = 2.0 * (gamma - 1.0);
  t2(1, 2) = t2(2, 1) = q;
  t2(1, 3) = t2(3, 1) = r1;
  t2(2, 3) = t2(3, 2) = r2;
  t2 *= scale;

  const BipartiteDims parts{2, 2};
  Measurement m;
  m.effects.push_back(make_effect(t1, parts));
  m.effects.push_back(make_effect(t2, parts));
  return m;
}

Measurement extend_to_full(const Measurement& m, const CanonicalPair& c) {
  const Index da = c.dimA(), db = c.dimB();
  if (da < 2 || db < 2)
    throw std::invalid_argument("extend_to_full: embedding dims must be >= 2");
  auto check_frame = [](const Matrix& f) {
    if ((f.adjoint() * f - Matrix::Identity(2, 2)).norm() > 1e-10)
      throw std::invalid_argument("extend_to_full: frame is not orthonormal");
  };
  check_frame(c.basis_a);
  check_frame(c.basis_b);

  if (da == 2 && db == 2 &&
      (c.basis_a - Matrix::Identity(2, 2)).norm() == 0.0 &&
      (c.basis_b - Matrix::Identity(2, 2)).norm() == 0.0)
    return m;

  const BipartiteDims parts{da, db};
  // W carries the canonical 2 (x) 2 space into the original basis; the
  // conjugated B factor realizes the partial transpose compatibly:
  // Gamma(W Gamma(X) W^H) = Wc X Wc^H.
  Matrix w(da * db, 4), wc(da * db, 4);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      w.col(i * 2 + j) = kron_vec(c.basis_a.col(i), c.basis_b.col(j));
      wc.col(i * 2 + j) = kron_vec(c.basis_a.col(i), c.basis_b.col(j).conjugate());
    }

  const Matrix pa = c.basis_a * c.basis_a.adjoint();
  const Matrix pb = c.basis_b * c.basis_b.adjoint();
  Matrix complement = Matrix::Identity(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      complement.block(i * db, j * db, db, db) -= pa(i, j) * pb;

  Measurement out;
  bool first = true;
  for (const Effect& e : m.effects) {
    if (!e.certificate)
      throw std::invalid_argument("extend_to_full: effect without certificate");
    Matrix t_full = w * e.certificate->T.mat() * w.adjoint();
    const Matrix tp_full = wc * e.certificate->Tprime.mat() * wc.adjoint();
    if (first) t_full += complement;
    HermitianMatrix t(std::move(t_full), parts);
    HermitianMatrix tp(tp_full, parts);
    HermitianMatrix full(t.mat() + partial_transpose(tp).mat(), parts);
    out.effects.push_back(Effect{std::move(full), Certificate{t, tp}});
    first = false;
  }
  return out;
}

DiscriminationReport verify_perfect(const HermitianMatrix& rho1,
                                    const HermitianMatrix& rho2,
                                    const Measurement& m, double tol,
                                    std::uint64_t seesaw_seed) {
  if (m.effects.empty())
    throw std::invalid_argument("verify_perfect: empty measurement");
  const Index d = rho1.dim();
  if (rho2.dim() != d)
    throw std::invalid_argument("verify_perfect: state dimensions differ");

  DiscriminationReport rep;
  const auto n = static_cast<Eigen::Index>(m.effects.size());
  rep.probability_matrix.resize(2, n);
  Matrix sum = Matrix::Zero(d, d);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Effect& e = m.effects[static_cast<std::size_t>(j)];
    if (e.matrix.dim() != d)
      throw std::invalid_argument("verify_perfect: effect dimension mismatch");
    Effect tagged = e;
    if (!tagged.matrix.parts() && rho1.parts())
      tagged.matrix = tagged.matrix.withParts(*rho1.parts());
    rep.probability_matrix(0, j) = trace_product(rho1, tagged.matrix);
    rep.probability_matrix(1, j) = trace_product(rho2, tagged.matrix);
    sum += e.matrix.mat();
    if (tagged.certificate) {
      rep.cone_results.push_back(is_in_dual_cone(tagged, tol));
    } else {
      SeeSawOptions opts;
      opts.tol = tol;
      opts.seed = seesaw_seed;
      rep.cone_results.push_back(block_positivity_min(tagged.matrix, opts));
    }
  }
  rep.completeness_residual = (sum - Matrix::Identity(d, d)).norm();
  return rep;
}

int min_copies(double f) {
  if (f < 0.0 || f >= 1.0)
    throw std::domain_error("min_copies: overlap must lie in [0, 1)");
  if (f == 0.0) return 1;
  int n = std::max(
      1, static_cast<int>(std::ceil(std::log(2.0) / std::log(1.0 / f) - 1e-12)));
  // Guard the boundary 2 f^n = 1 against rounding in the logarithms.
  while (2.0 * std::pow(f, n) > 1.0 + 1e-12) ++n;
  while (n > 1 && 2.0 * std::pow(f, n - 1) <= 1.0 + 1e-12) --n;
  return n;
}

Measurement multicopy_measurement(const PureProductState& s1,
                                  const PureProductState& s2, int n,
                                  Index dim_cap) {
  if (n < 1) throw std::invalid_argument("multicopy_measurement: n must be >= 1");
  const double fa = std::norm(s1.a.amps().dot(s2.a.amps()));
  const double fb = std::norm(s1.b.amps().dot(s2.b.amps()));
  const double f = fa * fb;
  if (f >= 1.0 - 1e-14)
    throw std::domain_error("multicopy_measurement: states are identical");
  if (2.0 * std::pow(f, n) > 1.0 + 1e-12)
    throw std::domain_error("multicopy_measurement: 2 f^n <= 1 not met");

  const Index d_single = s1.a.dim() * s1.b.dim();
  double total_dim = 1.0;
  for (int k = 0; k < 2 * n; ++k) {
    total_dim *= static_cast<double>(d_single);
    if (total_dim > static_cast<double>(dim_cap))
      throw std::domain_error("multicopy_measurement: dimension cap exceeded");
  }

  // Each half of the bipartition holds one n-fold product vector.
  auto half_vector = [&](const PureProductState& s) {
    Vector v = kron_vec(s.a.amps(), s.b.amps());
    Vector acc = v;
    for (int k = 1; k < n; ++k) acc = kron_vec(acc, v);
    return PureState(std::move(acc));
  };
  PureState w1 = half_vector(s1);
  PureState w2 = half_vector(s2);
  PureProductState h1{w1, w1};
  PureProductState h2{w2, w2};
  const CanonicalPair c = canonicalize(h1, h2);
  return extend_to_full(construct_measurement(c), c);
}

CapacityFamily capacity_family(Index d_a, Index d_b) {
  if (d_a < 1 || d_b < 1)
    throw std::invalid_argument("capacity_family: dims must be >= 1");
  CapacityFamily fam;
  const BipartiteDims parts{d_a, d_b};
  for (Index i = 0; i < d_a; ++i)
    for (Index j = 0; j < d_b; ++j) {
      Vector ea = Vector::Zero(d_a), eb = Vector::Zero(d_b);
      ea(i) = 1.0;
      eb(j) = 1.0;
      fam.states.push_back(PureProductState{PureState(ea), PureState(eb)});
      HermitianMatrix proj = density(fam.states.back());
      fam.measurement.effects.push_back(
          Effect{proj, Certificate{proj, HermitianMatrix::Zero(d_a * d_b, parts)}});
    }
  return fam;
}

}  // namespace sepdisc
