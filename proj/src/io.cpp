#include "sepdisc/io.hpp"

#include <cstdio>

namespace sepdisc {

namespace {

Json vec_to_json(const Eigen::VectorXd& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Vector vector_from_json(const Json& j) {
  if (!j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("state JSON: expected re/im arrays");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty())
    throw std::invalid_argument("state JSON: malformed re/im arrays");
  Vector v(static_cast<Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i)
    v(static_cast<Index>(i)) = Complex(re[i].get<double>(), im[i].get<double>());
  return v;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Json matrix_to_json(const Matrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json rrow = Json::array(), irow = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const Json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || re.empty() || re.size() != im.size())
    throw std::invalid_argument("matrix JSON: malformed re/im grids");
  const auto n = static_cast<Index>(re.size());
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& rrow = re[static_cast<std::size_t>(i)];
    const auto& irow = im[static_cast<std::size_t>(i)];
    if (static_cast<Index>(rrow.size()) != n || static_cast<Index>(irow.size()) != n)
      throw std::invalid_argument("matrix JSON: non-square grid");
    for (Index jj = 0; jj < n; ++jj)
      m(i, jj) = Complex(rrow[static_cast<std::size_t>(jj)].get<double>(),
                         irow[static_cast<std::size_t>(jj)].get<double>());
  }
  return m;
}

Json measurement_to_json(const Measurement& m) {
  Json effects = Json::array();
  for (const Effect& e : m.effects) {
    Json je{{"matrix", matrix_to_json(e.matrix.mat())}};
    if (e.certificate)
      je["certificate"] = Json{{"T", matrix_to_json(e.certificate->T.mat())},
                               {"Tprime", matrix_to_json(e.certificate->Tprime.mat())}};
    effects.push_back(std::move(je));
  }
  return Json{{"effects", std::move(effects)}};
}

Measurement measurement_from_json(const Json& j) {
  if (!j.contains("effects") || !j.at("effects").is_array() || j.at("effects").empty())
    throw std::invalid_argument("measurement JSON: nonempty effects array required");
  Measurement m;
  for (const Json& je : j.at("effects")) {
    Effect e{HermitianMatrix(matrix_from_json(je.at("matrix"))), std::nullopt};
    if (je.contains("certificate"))
      e.certificate =
          Certificate{HermitianMatrix(matrix_from_json(je.at("certificate").at("T"))),
                      HermitianMatrix(matrix_from_json(je.at("certificate").at("Tprime")))};
    m.effects.push_back(std::move(e));
  }
  return m;
}

PureProductState pure_product_from_json(const Json& j) {
  return PureProductState{PureState(vector_from_json(j.at("a"))),
                          PureState(vector_from_json(j.at("b")))};
}

StatePairInput parse_state_pair(const Json& state1, const Json* state2) {
  if (state1.contains("canonical")) {
    if (state2)
      throw std::invalid_argument("canonical input describes the pair; drop --state2");
    const Json& c = state1.at("canonical");
    return CanonicalInput{c.at("alpha1").get<double>(), c.at("alpha2").get<double>()};
  }
  if (state1.contains("mixed")) {
    if (state2)
      throw std::invalid_argument("mixed input describes the pair; drop --state2");
    const Json& c = state1.at("mixed");
    ProductMixedState m;
    m.p1 = c.at("p1").get<double>();
    m.p2 = c.at("p2").get<double>();
    m.alpha1 = c.at("alpha1").get<double>();
    m.alpha2 = c.at("alpha2").get<double>();
    m.beta1 = c.at("beta1").get<double>();
    m.beta2 = c.at("beta2").get<double>();
    validate(m);
    return m;
  }
  if (!state2)
    throw std::invalid_argument("explicit state input requires both --state1 and --state2");
  return std::make_pair(pure_product_from_json(state1), pure_product_from_json(*state2));
}

std::pair<PureProductState, PureProductState> resolve_pure_pair(
    const StatePairInput& input) {
  if (const auto* pair = std::get_if<std::pair<PureProductState, PureProductState>>(&input))
    return *pair;
  if (const auto* canon = std::get_if<CanonicalInput>(&input))
    return canonical_states(canonical_from_alphas(canon->alpha1, canon->alpha2));
  throw std::invalid_argument("mixed-state input is not a pure pair");
}

Json verdict_to_json(const Verdict& v, double alpha1, double alpha2) {
  return Json{{"alpha1", alpha1},
              {"alpha2", alpha2},
              {"lhs_sep", v.lhs_sep},
              {"lhs_qt", v.lhs_qt},
              {"sep_distinguishable", v.sep_distinguishable},
              {"qt_distinguishable", v.qt_distinguishable}};
}

Json report_to_json(const DiscriminationReport& rep) {
  Json probs = Json::array();
  for (Index i = 0; i < rep.probability_matrix.rows(); ++i)
    probs.push_back(vec_to_json(rep.probability_matrix.row(i).transpose()));
  Json cones = Json::array();
  for (const ConeMembership& c : rep.cone_results) {
    Json jc{{"member", c.member},
            {"method", c.method == MembershipMethod::certificate ? "certificate" : "see_saw"}};
    if (c.method == MembershipMethod::see_saw)
      jc["min_product_value"] = c.min_product_value;
    cones.push_back(std::move(jc));
  }
  return Json{{"probability_matrix", std::move(probs)},
              {"completeness_residual", rep.completeness_residual},
              {"cone_results", std::move(cones)}};
}

}  // namespace sepdisc
