// Acceptance suite: one pass/fail line per criterion, covering the explicit
// constructions, the decision predicates, the dual-cone machinery, the
// multicopy thresholds, the capacity family, and the CLI end to end.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "sepdisc/io.hpp"

using namespace sepdisc;

namespace {

std::string g_cli;
std::filesystem::path g_data;
std::filesystem::path g_scratch;

int run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " > " +
                          (g_scratch / "out.txt").string() + " 2> /dev/null";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Matrix example1_t1() {
  Matrix t = Matrix::Zero(4, 4);
  t(0, 0) = t(3, 3) = 0.5;
  t(0, 3) = t(3, 0) = -0.5;
  return t;
}

Matrix example1_t2() {
  Matrix t = Matrix::Zero(4, 4);
  t(1, 1) = t(2, 2) = 0.5;
  t(1, 2) = t(2, 1) = 0.5;
  return t;
}

bool perfect_probabilities(const DiscriminationReport& rep, double tol) {
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < rep.probability_matrix.cols(); ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(rep.probability_matrix(i, j) - target) > tol) return false;
    }
  return true;
}

// Criterion 1: the boundary construction is the exact constant matrix pair
// and discriminates perfectly.
bool criterion_example1() {
  for (double a1 : {0.0, 0.25, 0.5}) {
    const double a2 = 1.0 - a1;
    const CanonicalPair c = canonical_from_alphas(a1, a2);
    const Measurement m = construct_measurement(c);
    if ((m.effects[0].certificate->T.mat() - example1_t1()).norm() != 0.0) return false;
    if ((m.effects[1].certificate->T.mat() - example1_t2()).norm() != 0.0) return false;
    const auto [s1, s2] = canonical_states(c);
    const DiscriminationReport rep = verify_perfect(density(s1), density(s2), m);
    if (!perfect_probabilities(rep, 1e-10)) return false;
    if (!rep.perfect(1e-10)) return false;
  }
  return true;
}

// Criterion 2: 1e4 seeded random pairs above the threshold all construct,
// with PSD certificate parts, exact completeness, and perfect statistics.
bool criterion_soundness_sweep() {
  std::mt19937_64 rng(0xacce5501);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int done = 0;
  while (done < 10000) {
    const double a1 = uni(rng), a2 = uni(rng);
    if (a1 + a2 <= 1.0) continue;
    ++done;
    const CanonicalPair c = canonical_from_alphas(a1, a2);
    Measurement m;
    try {
      m = construct_measurement(c);
    } catch (const std::exception&) {
      return false;
    }
    Matrix sum = Matrix::Zero(4, 4);
    for (const Effect& e : m.effects) {
      if (eig_hermitian(e.certificate->T).values.minCoeff() < -1e-9) return false;
      sum += e.matrix.mat();
    }
    if ((sum - Matrix::Identity(4, 4)).norm() > 1e-12) return false;
    const auto [s1, s2] = canonical_states(c);
    const HermitianMatrix rho1 = density(s1), rho2 = density(s2);
    if (std::abs(trace_product(rho1, m.effects[1].matrix)) > 1e-10) return false;
    if (std::abs(trace_product(rho2, m.effects[0].matrix)) > 1e-10) return false;
  }
  return true;
}

// Criterion 3: determinant identities of the closed-form second effect on a
// 50 x 50 grid, plus the exact spot value at alpha1 = alpha2 = 0.6.
bool criterion_minor_identities() {
  const int n = 50;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double a1 = static_cast<double>(i) / (n + 1);
      const double a2 = static_cast<double>(j) / (n + 1);
      const double g = a1 + a2;
      if (g <= 1.0 || g > 2.0) continue;
      const Measurement m = construct_measurement(canonical_from_alphas(a1, a2));
      const HermitianMatrix& t2 = m.effects[1].certificate->T;
      const double det23 = determinant(principal_submatrix(t2, {1, 2}).mat()).real();
      const double det234 =
          determinant(principal_submatrix(t2, {1, 2, 3}).mat()).real();
      const double rhs1 = (g - 1) * (-(1 + g) + g * g / (a1 * a2));
      const double rhs2 = g * (g - 1) / (a1 * a2);
      if (std::abs(std::pow(2 * g, 2) * det23 - rhs1) >
          1e-9 * std::max(1.0, std::abs(rhs1)))
        return false;
      if (std::abs(std::pow(2 * g, 3) / (g - 1) * det234 - rhs2) >
          1e-9 * std::max(1.0, std::abs(rhs2)))
        return false;
    }
  }
  const Measurement m = construct_measurement(canonical_from_alphas(0.6, 0.6));
  const double spot =
      determinant(principal_submatrix(m.effects[1].certificate->T, {1, 2}).mat())
          .real();
  return std::abs(spot - 0.0625) <= 1e-12;
}

// Criterion 4: the decision grid separates the two theories exactly as the
// threshold predicts.
bool criterion_separation() {
  const int n = 60;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double a1 = static_cast<double>(i) / n;
      const double a2 = static_cast<double>(j) / n;
      const double g = a1 + a2;
      const Verdict v = decide_canonical(a1, a2);
      if (g > 1.0 + 1e-12 && g < 2.0 - 1e-12 && a1 < 1.0 && a2 < 1.0) {
        if (!v.sep_distinguishable || v.qt_distinguishable) return false;
      }
      if (g < 1.0 - 1e-12 && v.sep_distinguishable) return false;
    }
  }
  return true;
}

// Criterion 5: the summed certificate of every constructed measurement has
// the forced (x1, x2, z) pattern with |z| <= 1/2 and reproduces the overlap.
bool criterion_eqh2() {
  std::mt19937_64 rng(0xacce5505);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int done = 0;
  while (done < 500) {
    double a1 = uni(rng), a2 = uni(rng);
    if (done == 0) a1 = a2 = 0.5;  // force the boundary branch once
    if (a1 + a2 < 1.0) continue;
    ++done;
    const Measurement m = construct_measurement(canonical_from_alphas(a1, a2));
    const HermitianMatrix t(
        m.effects[0].certificate->T.mat() + m.effects[1].certificate->T.mat(),
        BipartiteDims{2, 2});
    TParams p;
    try {
      p = extract_T_params(t);
    } catch (const std::exception&) {
      return false;
    }
    if (std::abs(p.z) > 0.5 + 1e-9) return false;
    ProductMixedState pm;
    pm.alpha1 = a1;
    pm.alpha2 = a2;
    pm.beta1 = std::sqrt(a1 * (1 - a1));
    pm.beta2 = std::sqrt(a2 * (1 - a2));
    if (verify_eqH2(pm, m) > 1e-9) return false;
  }
  return true;
}

// Criterion 6: the necessity chain holds on random distinguishable pairs and
// the pure condition fails exactly on the indistinguishable ones.
bool criterion_necessity() {
  std::mt19937_64 rng(0xacce5506);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int above = 0, below = 0;
  while (above < 1000 || below < 1000) {
    const double a1 = uni(rng), a2 = uni(rng);
    ProductMixedState pm;
    pm.alpha1 = a1;
    pm.alpha2 = a2;
    pm.beta1 = std::sqrt(a1 * (1 - a1));
    pm.beta2 = std::sqrt(a2 * (1 - a2));
    const NecessityReport r = necessity_bound(pm);
    if (a1 + a2 >= 1.0 && above < 1000) {
      ++above;
      if (!r.satisfied) return false;
      if (r.trace_overlap > pm.beta1 * pm.beta2 + 1e-10) return false;
      if (pm.beta1 * pm.beta2 > 0.25 + 1e-12) return false;
    } else if (a1 + a2 < 1.0 && below < 1000) {
      ++below;
      if (!r.pure_condition || *r.pure_condition >= 1.0) return false;
      if (decide_canonical(a1, a2).sep_distinguishable) return false;
    }
  }
  return true;
}

double grid_objective(const HermitianMatrix& y, double theta, double phi) {
  Vector a(2);
  a << Complex(std::cos(theta / 2.0)), std::polar(std::sin(theta / 2.0), phi);
  Matrix k = Matrix::Zero(2, 2);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      k += std::conj(a(i)) * a(j) * y.mat().block(i * 2, j * 2, 2, 2);
  const double tr = k.trace().real();
  const double det = (k(0, 0) * k(1, 1) - k(0, 1) * k(1, 0)).real();
  return tr / 2.0 - std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
}

// Independent refined-grid minimum of <a b| Y |a b> over product vectors.
double brute_force_min(const HermitianMatrix& y) {
  const double pi = std::acos(-1.0);
  double ct = pi / 2.0, cp = pi, half_t = pi / 2.0, half_p = pi;
  double best = std::numeric_limits<double>::infinity();
  const int steps = 48;
  for (int level = 0; level < 8; ++level) {
    double best_t = ct, best_p = cp;
    for (int it = -steps; it <= steps; ++it) {
      const double theta = std::clamp(ct + half_t * it / steps, 0.0, pi);
      for (int ip = -steps; ip <= steps; ++ip) {
        const double phi = cp + half_p * ip / steps;
        const double v = grid_objective(y, theta, phi);
        if (v < best) {
          best = v;
          best_t = theta;
          best_p = phi;
        }
      }
    }
    ct = best_t;
    cp = best_p;
    half_t /= steps / 3.0;
    half_p /= steps / 3.0;
  }
  return best;
}

// Criterion 7: the block-positivity checker against hand targets and the
// independent grid oracle.
bool criterion_dual_cone() {
  Vector phi(4);
  phi << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  const HermitianMatrix half_swap = partial_transpose(
      HermitianMatrix(phi * phi.adjoint(), BipartiteDims{2, 2}));
  if (is_psd(half_swap, 1e-10)) return false;
  const ConeMembership hs = block_positivity_min(half_swap);
  if (!hs.member || std::abs(hs.min_product_value) > 1e-8) return false;

  Matrix d = Matrix::Identity(4, 4);
  d(1, 1) = -0.1;
  const ConeMembership neg =
      block_positivity_min(HermitianMatrix(d, BipartiteDims{2, 2}));
  if (neg.member || !neg.witness) return false;
  if (std::abs(std::norm(neg.witness->a.amps()(0)) - 1.0) > 1e-8) return false;
  if (std::abs(std::norm(neg.witness->b.amps()(1)) - 1.0) > 1e-8) return false;

  std::mt19937_64 rng(0xacce5507);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a(4, 4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    const HermitianMatrix y((a + a.adjoint()) / 2.0, BipartiteDims{2, 2});
    const ConeMembership r = block_positivity_min(y);
    if (std::abs(r.min_product_value - brute_force_min(y)) > 1e-6) return false;
  }
  return true;
}

// Criterion 8: copy thresholds against an exhaustive scan, the f = 0.9
// endpoint, and a materialized single-copy verification at f = 0.16.
bool criterion_multicopy() {
  std::mt19937_64 rng(0xacce5508);
  std::uniform_real_distribution<double> uni(0.0, 0.9999);
  for (int trial = 0; trial < 1000; ++trial) {
    const double f = uni(rng);
    int expect = 1;
    while (2.0 * std::pow(f, expect) > 1.0 + 1e-12) ++expect;
    if (min_copies(f) != expect) return false;
  }
  if (min_copies(0.9) != 7) return false;

  const CanonicalPair c = canonical_from_alphas(0.6, 0.6);
  const auto [s1, s2] = canonical_states(c);
  if (min_copies(0.16) != 1) return false;
  const Measurement m = multicopy_measurement(s1, s2, 1);
  auto joint = [](const PureProductState& s) {
    Vector v(4);
    for (Index i = 0; i < 2; ++i) v.segment(i * 2, 2) = s.a.amps()(i) * s.b.amps();
    return PureState(v);
  };
  const PureState w1 = joint(s1), w2 = joint(s2);
  const DiscriminationReport rep =
      verify_perfect(density({w1, w1}), density({w2, w2}), m);
  return rep.perfect(1e-9);
}

// Criterion 9: the product-basis family verifies exactly for every dimension
// pair up to (4, 4).
bool criterion_capacity() {
  for (Index da = 1; da <= 4; ++da)
    for (Index db = 1; db <= 4; ++db) {
      const CapacityFamily fam = capacity_family(da, db);
      if (static_cast<Index>(fam.states.size()) != da * db) return false;
      Matrix sum = Matrix::Zero(da * db, da * db);
      for (std::size_t k = 0; k < fam.states.size(); ++k) {
        const HermitianMatrix rho = density(fam.states[k]);
        for (std::size_t l = 0; l < fam.measurement.effects.size(); ++l) {
          const double p = trace_product(rho, fam.measurement.effects[l].matrix);
          if (std::abs(p - (k == l ? 1.0 : 0.0)) > 1e-12) return false;
        }
        sum += fam.measurement.effects[k].matrix.mat();
      }
      if ((sum - Matrix::Identity(da * db, da * db)).norm() > 1e-12) return false;
    }
  return true;
}

// Criterion 10: the decide -> construct -> verify pipeline and the golden
// sweep CSV through the installed binary.
bool criterion_cli() {
  const std::string pair = "'{\"canonical\":{\"alpha1\":0.5,\"alpha2\":0.5}}'";
  if (run_cli("decide --state1 " + pair) != 0) return false;
  const std::filesystem::path mfile = g_scratch / "acceptance_measurement.json";
  if (run_cli("construct --state1 " + pair + " --out " + mfile.string()) != 0)
    return false;
  if (run_cli("verify --state1 " + pair + " --measurement " + mfile.string()) != 0)
    return false;

  const std::filesystem::path csv = g_scratch / "acceptance_sweep.csv";
  if (run_cli("sweep --grid-step 0.25 --out " + csv.string()) != 0) return false;
  const std::string produced = slurp(csv);
  const std::string golden = slurp(g_data / "sweep_step_0.25.csv");
  return !golden.empty() && produced == golden;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <cli-path> <data-dir>\n");
    return 1;
  }
  g_cli = argv[1];
  g_data = argv[2];
  g_scratch = std::filesystem::temp_directory_path() / "sepdisc_acceptance";
  std::filesystem::create_directories(g_scratch);

  struct Criterion {
    const char* name;
    bool (*fn)();
  };
  const Criterion criteria[] = {
      {"boundary construction matches the constant matrix pair", criterion_example1},
      {"soundness sweep over 10^4 random distinguishable pairs",
       criterion_soundness_sweep},
      {"determinant identities of the closed-form second effect",
       criterion_minor_identities},
      {"decision grid separates the two theories", criterion_separation},
      {"summed-certificate pattern reproduces the state overlap", criterion_eqh2},
      {"necessity bound chain on random pairs", criterion_necessity},
      {"block-positivity checker against the grid oracle", criterion_dual_cone},
      {"copy thresholds and materialized two-copy measurement",
       criterion_multicopy},
      {"product-basis capacity family up to (4, 4)", criterion_capacity},
      {"CLI pipeline and golden sweep CSV", criterion_cli},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %d threw: %s\n", index, e.what());
    }
    std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", index, c.name);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
