#ifndef SEPDISC_DISCRIMINATION_HPP
#define SEPDISC_DISCRIMINATION_HPP

#include "sepdisc/cone.hpp"
#include "sepdisc/measurement.hpp"
#include "sepdisc/states.hpp"

namespace sepdisc {

/// Distinguishability of a state pair under SEP and under quantum theory.
/// lhs_sep is Tr rho1^A rho2^A + Tr rho1^B rho2^B (perfect discrimination in
/// SEP iff <= 1); lhs_qt is the product of the two traces (quantum iff = 0).
struct Verdict {
  bool sep_distinguishable = false;
  bool qt_distinguishable = false;
  double lhs_sep = 0.0;
  double lhs_qt = 0.0;
};

constexpr double kVerdictTol = 1e-12;

/// Discrimination statistics for a pair of states under a measurement.
struct DiscriminationReport {
  Eigen::MatrixXd probability_matrix;  // Tr rho_i M_j
  double completeness_residual = 0.0;
  std::vector<ConeMembership> cone_results;

  bool perfect(double tol) const;
};

Verdict decide_sep(const PureProductState& s1, const PureProductState& s2);
Verdict decide_canonical(double alpha1, double alpha2);

/// Explicit two-effect measurement on the canonical 2 (x) 2
/// space: the constant pair at gamma = alpha1 + alpha2 = 1 and the
/// (1/2 gamma)-scaled closed forms for gamma > 1. Each effect is
/// T_i + Gamma(T_i) with certificate (T_i, T_i). Throws std::domain_error
/// when gamma < 1.
Measurement construct_measurement(const CanonicalPair& c);

/// Conjugate a canonical-subspace measurement into the original
/// (d_A, d_B) basis via the pair's frames; the subspace complement
/// I - P_A (x) P_B joins the first effect.
Measurement extend_to_full(const Measurement& m, const CanonicalPair& c);

DiscriminationReport verify_perfect(const HermitianMatrix& rho1,
                                    const HermitianMatrix& rho2,
                                    const Measurement& m,
                                    double tol = kDefaultMembershipTol,
                                    std::uint64_t seesaw_seed = 0x5eed);

/// Minimal n with 2 f^n <= 1 (boundary accepted), f = Tr rho1 rho2.
/// Throws std::domain_error for f >= 1 or f < 0.
int min_copies(double f);

/// Perfect-discrimination measurement for rho_i^{(x) 2n} under the
/// (n copies : n copies) bipartition.
Measurement multicopy_measurement(const PureProductState& s1,
                                  const PureProductState& s2, int n,
                                  Index dim_cap = 4096);

/// d_A * d_B simultaneously perfectly distinguishable states with the
/// projective product-basis measurement.
struct CapacityFamily {
  std::vector<PureProductState> states;
  Measurement measurement;
};

CapacityFamily capacity_family(Index d_a, Index d_b);

}  // namespace sepdisc

#endif  // SEPDISC_DISCRIMINATION_HPP
