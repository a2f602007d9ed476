#ifndef SEPDISC_IO_HPP
#define SEPDISC_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "sepdisc/discrimination.hpp"

namespace sepdisc {

using Json = nlohmann::json;

/// Formats a double with 17 significant digits so the binary value
/// round-trips exactly through the decimal text.
std::string format_real(double x);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json measurement_to_json(const Measurement& m);
Measurement measurement_from_json(const Json& j);

/// A parsed state-pair input: either two explicit pure product states, a
/// canonical-(alpha1, alpha2) shortcut, or a Theorem-4 mixed pair.
struct CanonicalInput {
  double alpha1;
  double alpha2;
};

using StatePairInput =
    std::variant<std::pair<PureProductState, PureProductState>, CanonicalInput,
                 ProductMixedState>;

PureProductState pure_product_from_json(const Json& j);

/// Parses --state1/--state2 content. The canonical and mixed shortcuts
/// describe the whole pair and admit no second state.
StatePairInput parse_state_pair(const Json& state1, const Json* state2);

/// The concrete pure pair an input denotes (throws for mixed inputs).
std::pair<PureProductState, PureProductState> resolve_pure_pair(
    const StatePairInput& input);

Json verdict_to_json(const Verdict& v, double alpha1, double alpha2);
Json report_to_json(const DiscriminationReport& rep);

}  // namespace sepdisc

#endif  // SEPDISC_IO_HPP
