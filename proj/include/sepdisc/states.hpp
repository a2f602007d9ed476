#ifndef SEPDISC_STATES_HPP
#define SEPDISC_STATES_HPP

#include <cstdint>
#include <utility>

#include "sepdisc/linalg.hpp"

namespace sepdisc {

/// Normalized complex vector.
class PureState {
 public:
  explicit PureState(Vector amplitudes);

  const Vector& amps() const { return v_; }
  Index dim() const { return v_.size(); }

 private:
  Vector v_;
};

/// A pure product state |a> (x) |b>.
struct PureProductState {
  PureState a;
  PureState b;
};

/// Canonical form of a state pair: rho1 = |00><00|, rho2 the
/// (alpha, beta) product form, expressed inside 2-dimensional frames of the
/// original factor spaces. 1 - alpha_i is the squared overlap on side i and
/// beta_i = sqrt(alpha_i (1 - alpha_i)) >= 0 by the frame phase convention.
struct CanonicalPair {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  Matrix basis_a;  // d_A x 2 isometry, column 0 is u1^A
  Matrix basis_b;  // d_B x 2 isometry, column 0 is u1^B

  Index dimA() const { return basis_a.rows(); }
  Index dimB() const { return basis_b.rows(); }
};

/// Product mixed-state pair: rho1 diagonal with weights (p1, p2), rho2 the
/// (alpha, beta) product form with beta_i^2 <= alpha_i (1 - alpha_i).
struct ProductMixedState {
  double p1 = 0.0;
  double p2 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
};

void validate(const ProductMixedState& m);

/// Polar angle on the Bloch sphere; alpha = sin^2(theta/2).
struct BlochAngle {
  double theta = 0.0;
};

/// Density matrix |a><a| (x) |b><b| with bipartite metadata.
HermitianMatrix density(const PureProductState& s);

/// Reduce a pair of pure product states to canonical (2,2) form.
CanonicalPair canonicalize(const PureProductState& s1, const PureProductState& s2);

/// Canonical pair from Bloch angles; alpha_i = sin^2(theta_i / 2).
CanonicalPair from_bloch(BlochAngle theta_a, BlochAngle theta_b);

/// Canonical pair straight from (alpha1, alpha2), pure case.
CanonicalPair canonical_from_alphas(double alpha1, double alpha2);

/// The two canonical pure product states on the 2 (x) 2 frame space.
std::pair<PureProductState, PureProductState> canonical_states(const CanonicalPair& c);

/// Unitary-invariant sampling of both factors; deterministic given seed.
PureProductState random_pure_product(std::uint64_t seed, Index d_a, Index d_b);

/// Densities (rho1, rho2) of a product mixed-state pair; both are fixed
/// points of the partial transpose.
std::pair<HermitianMatrix, HermitianMatrix> mixed_density(const ProductMixedState& m);

}  // namespace sepdisc

#endif  // SEPDISC_STATES_HPP
