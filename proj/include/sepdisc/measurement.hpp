#ifndef SEPDISC_MEASUREMENT_HPP
#define SEPDISC_MEASUREMENT_HPP

#include <optional>
#include <vector>

#include "sepdisc/linalg.hpp"

namespace sepdisc {

/// Dual-cone certificate: the effect equals T + Gamma(T') with both parts
/// positive semi-definite.
struct Certificate {
  HermitianMatrix T;
  HermitianMatrix Tprime;
};

/// A measurement element, optionally carrying a decomposability certificate.
struct Effect {
  HermitianMatrix matrix;
  std::optional<Certificate> certificate;
};

/// A finite family of effects summing to the identity.
struct Measurement {
  std::vector<Effect> effects;
};

}  // namespace sepdisc

#endif  // SEPDISC_MEASUREMENT_HPP
