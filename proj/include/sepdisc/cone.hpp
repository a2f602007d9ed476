#ifndef SEPDISC_CONE_HPP
#define SEPDISC_CONE_HPP

#include <optional>
#include <vector>

#include "sepdisc/measurement.hpp"
#include "sepdisc/states.hpp"

namespace sepdisc {

enum class MembershipMethod { certificate, see_saw };

/// Outcome of a dual-cone (block-positivity) membership test. A negative
/// min_product_value certifies non-membership through the witness vector;
/// a nonnegative one is multi-start evidence of membership.
struct ConeMembership {
  bool member = false;
  double min_product_value = 0.0;
  std::optional<PureProductState> witness;
  MembershipMethod method = MembershipMethod::see_saw;
  bool converged = true;
};

/// The (x1, x2, z) parameterization of a 4x4 PSD matrix T with
/// T + Gamma(T) = I.
struct TParams {
  double x1 = 0.0;
  double x2 = 0.0;
  Complex z{0.0, 0.0};
};

/// Evaluation of the necessity bound Tr rho1 rho2 <= beta1 beta2 |(2p1-1)(2p2-1)|.
struct NecessityReport {
  double trace_overlap = 0.0;
  double bound = 0.0;
  bool satisfied = false;
  std::optional<double> pure_condition;  // alpha1 + alpha2 when p1 = p2 = 0
};

/// Options for the see-saw block-positivity minimizer.
struct SeeSawOptions {
  int restarts = 24;
  int iters = 200;
  double tol = 1e-8;
  std::uint64_t seed = 0x5eed;
};

constexpr double kDefaultMembershipTol = 1e-8;

/// Checks Y = T + Gamma(Tprime) with both parts PSD within tol.
ConeMembership verify_certificate(const HermitianMatrix& y, const HermitianMatrix& t,
                                  const HermitianMatrix& tprime, double tol);

/// Alternating eigen-minimization of <a (x) b| Y |a (x) b> over product
/// vectors, from a deterministic grid of A-side starts plus seeded random
/// ones. Non-membership is certified by the returned witness; membership is
/// multi-start evidence.
ConeMembership block_positivity_min(const HermitianMatrix& y,
                                    const SeeSawOptions& opts = {});

/// One see-saw descent from a fixed A-side start; returns the objective
/// value after every half-step (non-increasing by construction).
std::vector<double> seesaw_trace(const HermitianMatrix& y, const PureState& a0,
                                 int iters);

/// Certificate path when the effect carries one, see-saw otherwise.
ConeMembership is_in_dual_cone(const Effect& e, double tol = kDefaultMembershipTol);
ConeMembership is_in_dual_cone(const HermitianMatrix& y,
                               double tol = kDefaultMembershipTol);

/// Replace each certificate (S, S') by the symmetric (T, T) with
/// T = (S + S')/2. Statistics on Gamma-invariant states are unchanged.
std::vector<Effect> symmetrize(const std::vector<Effect>& effects);

/// Read off (x1, x2, z) from a 4x4 T with T + Gamma(T) = I. The
/// pattern-forced zero entries are hard structural checks.
TParams extract_T_params(const HermitianMatrix& t);

NecessityReport necessity_bound(const ProductMixedState& m);

/// Residual |Tr rho1 rho2 - 2 Re(z) beta1 beta2 (2p1-1)(2p2-1)| for a
/// two-effect measurement in symmetric-certificate form that perfectly
/// discriminates the pair.
double verify_eqH2(const ProductMixedState& m, const Measurement& measurement);

}  // namespace sepdisc

#endif  // SEPDISC_CONE_HPP
