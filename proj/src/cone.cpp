#include "sepdisc/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace sepdisc {

namespace {

// (<a| (x) I) Y (|a> (x) I), a d_B x d_B Hermitian contraction.
Matrix contract_a(const HermitianMatrix& y, const Vector& a) {
  const Index da = y.parts()->a, db = y.parts()->b;
  Matrix out = Matrix::Zero(db, db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      out += std::conj(a(i)) * a(j) * y.mat().block(i * db, j * db, db, db);
  return out;
}

// (I (x) <b|) Y (I (x) |b>), a d_A x d_A Hermitian contraction.
Matrix contract_b(const HermitianMatrix& y, const Vector& b) {
  const Index da = y.parts()->a, db = y.parts()->b;
  Matrix out(da, da);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      out(i, j) = b.dot(y.mat().block(i * db, j * db, db, db) * b);
  return out;
}

Vector min_eigvec(const Matrix& h, double* value) {
  EigResult e = eig_hermitian(HermitianMatrix(h));
  if (value) *value = e.values(0);
  return e.vectors.col(0);
}

// Deterministic A-side starting vectors: the 12 icosahedron vertices on the
// Bloch sphere for d = 2; basis vectors and pairwise superpositions above.
std::vector<Vector> deterministic_starts(Index d, int count) {
  std::vector<Vector> starts;
  if (d == 2) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double directions[12][3] = {
        {0, 1, phi},  {0, -1, phi},  {0, 1, -phi},  {0, -1, -phi},
        {1, phi, 0},  {-1, phi, 0},  {1, -phi, 0},  {-1, -phi, 0},
        {phi, 0, 1},  {-phi, 0, 1},  {phi, 0, -1},  {-phi, 0, -1}};
    for (const auto& dir : directions) {
      const double n = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
      const double x = dir[0] / n, y = dir[1] / n, z = dir[2] / n;
      const double theta = std::acos(std::clamp(z, -1.0, 1.0));
      const double az = std::atan2(y, x);
      Vector v(2);
      v << Complex(std::cos(theta / 2.0)),
          std::polar(std::sin(theta / 2.0), az);
      starts.push_back(v);
      if (static_cast<int>(starts.size()) >= count) break;
    }
    return starts;
  }
  for (Index k = 0; k < d && static_cast<int>(starts.size()) < count; ++k) {
    Vector v = Vector::Zero(d);
    v(k) = 1.0;
    starts.push_back(v);
  }
  for (Index i = 0; i < d && static_cast<int>(starts.size()) < count; ++i)
    for (Index j = i + 1; j < d && static_cast<int>(starts.size()) < count; ++j) {
      Vector v = Vector::Zero(d);
      v(i) = v(j) = 1.0 / std::sqrt(2.0);
      starts.push_back(v);
      Vector w = Vector::Zero(d);
      w(i) = 1.0 / std::sqrt(2.0);
      w(j) = Complex(0.0, 1.0 / std::sqrt(2.0));
      if (static_cast<int>(starts.size()) < count) starts.push_back(w);
    }
  return starts;
}

struct SeeSawRun {
  double value = 0.0;
  Vector a, b;
  bool converged = false;
};

SeeSawRun seesaw_run(const HermitianMatrix& y, Vector a, int iters,
                     std::vector<double>* trace) {
  SeeSawRun run;
  double prev = std::numeric_limits<double>::infinity();
  Vector b;
  for (int it = 0; it < iters; ++it) {
    double vb = 0.0, va = 0.0;
    b = min_eigvec(contract_a(y, a), &vb);
    if (trace) trace->push_back(vb);
    a = min_eigvec(contract_b(y, b), &va);
    if (trace) trace->push_back(va);
    if (std::abs(prev - va) < 1e-12) {
      run.converged = true;
      prev = va;
      break;
    }
    prev = va;
  }
  run.value = prev;
  run.a = a;
  run.b = b;
  return run;
}

}  // namespace

ConeMembership verify_certificate(const HermitianMatrix& y, const HermitianMatrix& t,
                                  const HermitianMatrix& tprime, double tol) {
  if (t.dim() != y.dim() || tprime.dim() != y.dim())
    throw std::invalid_argument("verify_certificate: dimension mismatch");
  if (!y.parts())
    throw std::invalid_argument("verify_certificate: bipartite dims required");
  const HermitianMatrix gtp =
      partial_transpose(tprime.parts() ? tprime : tprime.withParts(*y.parts()));
  const double residual = (y.mat() - t.mat() - gtp.mat()).norm();
  ConeMembership r;
  r.method = MembershipMethod::certificate;
  r.member = residual <= tol * std::max(1.0, y.normF()) && is_psd(t, tol) &&
             is_psd(tprime, tol);
  return r;
}

std::vector<double> seesaw_trace(const HermitianMatrix& y, const PureState& a0,
                                 int iters) {
  std::vector<double> trace;
  seesaw_run(y, a0.amps(), iters, &trace);
  return trace;
}

ConeMembership block_positivity_min(const HermitianMatrix& y,
                                    const SeeSawOptions& opts) {
  if (!y.parts())
    throw std::invalid_argument("block_positivity_min: bipartite dims required");
  const Index da = y.parts()->a;

  std::vector<Vector> starts = deterministic_starts(da, opts.restarts / 2);
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (static_cast<int>(starts.size()) < opts.restarts) {
    Vector v(da);
    for (Index i = 0; i < da; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    starts.push_back(v / v.norm());
  }

  ConeMembership best;
  best.method = MembershipMethod::see_saw;
  best.min_product_value = std::numeric_limits<double>::infinity();
  bool all_converged = true;
  for (const Vector& a0 : starts) {
    SeeSawRun run = seesaw_run(y, a0, opts.iters, nullptr);
    all_converged = all_converged && run.converged;
    if (run.value < best.min_product_value) {
      best.min_product_value = run.value;
      best.witness = PureProductState{PureState(run.a), PureState(run.b)};
    }
  }
  best.converged = all_converged;
  best.member = best.min_product_value >= -opts.tol;
  return best;
}

ConeMembership is_in_dual_cone(const Effect& e, double tol) {
  if (e.certificate)
    return verify_certificate(e.matrix, e.certificate->T, e.certificate->Tprime, tol);
  return is_in_dual_cone(e.matrix, tol);
}

ConeMembership is_in_dual_cone(const HermitianMatrix& y, double tol) {
  SeeSawOptions opts;
  opts.tol = tol;
  return block_positivity_min(y, opts);
}

std::vector<Effect> symmetrize(const std::vector<Effect>& effects) {
  std::vector<Effect> out;
  out.reserve(effects.size());
  for (const Effect& e : effects) {
    if (!e.certificate)
      throw std::invalid_argument("symmetrize: effect without certificate");
    const auto& parts = e.matrix.parts();
    if (!parts) throw std::invalid_argument("symmetrize: bipartite dims required");
    HermitianMatrix t((e.certificate->T.mat() + e.certificate->Tprime.mat()) / 2.0,
                      *parts);
    HermitianMatrix m(t.mat() + partial_transpose(t).mat(), *parts);
    out.push_back(Effect{std::move(m), Certificate{t, t}});
  }
  return out;
}

TParams extract_T_params(const HermitianMatrix& t) {
  if (t.dim() != 4)
    throw std::invalid_argument("extract_T_params: 4x4 matrix required");
  const BipartiteDims parts{2, 2};
  const HermitianMatrix tagged = t.parts() ? t : t.withParts(parts);
  const double completeness =
      (tagged.mat() + partial_transpose(tagged).mat() - Matrix::Identity(4, 4)).norm();
  if (completeness > 1e-9)
    throw std::invalid_argument("extract_T_params: T + Gamma(T) != I");

  const Matrix& m = t.mat();
  constexpr double kPatternTol = 1e-9;
  auto check_zero = [&](Index i, Index j) {
    if (std::abs(m(i, j)) > kPatternTol)
      throw std::invalid_argument("extract_T_params: pattern violation");
  };
  for (Index k = 0; k < 4; ++k)
    if (std::abs(m(k, k) - 0.5) > kPatternTol)
      throw std::invalid_argument("extract_T_params: diagonal is not 1/2");
  check_zero(0, 2);
  check_zero(1, 3);
  // (1,2) entry is -i x1 and (3,4) entry is -i x2, both purely imaginary.
  if (std::abs(m(0, 1).real()) > kPatternTol || std::abs(m(2, 3).real()) > kPatternTol)
    throw std::invalid_argument("extract_T_params: pattern violation");
  // (1,4) entry is -z and (2,3) entry is z.
  if (std::abs(m(1, 2) + m(0, 3)) > kPatternTol)
    throw std::invalid_argument("extract_T_params: pattern violation");

  TParams p;
  p.x1 = -m(0, 1).imag();
  p.x2 = -m(2, 3).imag();
  p.z = -m(0, 3);
  return p;
}

NecessityReport necessity_bound(const ProductMixedState& m) {
  validate(m);
  auto [rho1, rho2] = mixed_density(m);
  NecessityReport r;
  r.trace_overlap = trace_product(rho1, rho2);
  r.bound = m.beta1 * m.beta2 *
            std::abs((2.0 * m.p1 - 1.0) * (2.0 * m.p2 - 1.0));
  r.satisfied = r.trace_overlap <= r.bound + 1e-10;
  if (m.p1 == 0.0 && m.p2 == 0.0) r.pure_condition = m.alpha1 + m.alpha2;
  return r;
}

double verify_eqH2(const ProductMixedState& m, const Measurement& measurement) {
  if (measurement.effects.size() != 2)
    throw std::invalid_argument("verify_eqH2: two-effect measurement required");
  auto [rho1, rho2] = mixed_density(m);

  const double p11 = trace_product(rho1, measurement.effects[0].matrix);
  const double p22 = trace_product(rho2, measurement.effects[1].matrix);
  const double p12 = trace_product(rho1, measurement.effects[1].matrix);
  const double p21 = trace_product(rho2, measurement.effects[0].matrix);
  constexpr double kPerfectTol = 1e-8;
  if (std::abs(p11 - 1.0) > kPerfectTol || std::abs(p22 - 1.0) > kPerfectTol ||
      std::abs(p12) > kPerfectTol || std::abs(p21) > kPerfectTol)
    throw std::invalid_argument("verify_eqH2: measurement does not discriminate the pair");

  const std::vector<Effect> sym = symmetrize(measurement.effects);
  HermitianMatrix t(sym[0].certificate->T.mat() + sym[1].certificate->T.mat(),
                    BipartiteDims{2, 2});
  const TParams params = extract_T_params(t);

  const double overlap = trace_product(rho1, rho2);
  const double rhs = 2.0 * params.z.real() * m.beta1 * m.beta2 *
                     (2.0 * m.p1 - 1.0) * (2.0 * m.p2 - 1.0);
  return std::abs(overlap - rhs);
}

}  // namespace sepdisc
