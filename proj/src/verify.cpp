#include "abcyl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "abcyl/constants.hpp"
#include "abcyl/currents.hpp"
#include "abcyl/errors.hpp"
#include "abcyl/fermi.hpp"
#include "abcyl/gamma.hpp"
#include "abcyl/quadrature.hpp"
#include "abcyl/spectrum.hpp"
#include "abcyl/spinors.hpp"

namespace abcyl {

namespace {

constexpr int kMaxN = 3;
constexpr int kMaxTwiceLambda = 5;

std::vector<ModeSpec> finite_modes() {
  std::vector<ModeSpec> modes;
  for (int n = 1; n <= kMaxN; ++n)
    for (int t = -kMaxTwiceLambda; t <= kMaxTwiceLambda; t += 2)
      for (Polarization s : {Polarization::plus, Polarization::minus})
        modes.push_back(ModeSpec::finite(n, HalfOdd::from_twice(t), s));
  return modes;
}

SuiteResult finish(std::string name, double tolerance, double worst, std::string detail = {}) {
  SuiteResult r{std::move(name), tolerance, worst, worst <= tolerance && std::isfinite(worst), std::move(detail)};
  return r;
}

SuiteResult clifford() {
  const auto& g = GammaSet::standard();
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Matrix4c expected = Matrix4c::Zero();
      if (a == b) expected = 2.0 * GammaSet::metric[a] * Matrix4c::Identity();
      const Matrix4c ac = g.gamma[a] * g.gamma[b] + g.gamma[b] * g.gamma[a];
      worst = std::max(worst, (ac - expected).cwiseAbs().maxCoeff());
    }
  return finish("clifford", 1e-15, worst);
}

SuiteResult orthonormality(const VerifyOptions& o) {
  const auto& d = o.params;
  const QuadratureRule rule = QuadratureRule::finite(d.length(), kMaxN, o.z_order, 64);
  const auto modes = finite_modes();
  std::vector<SampledField> fields;
  fields.reserve(modes.size());
  for (const auto& m : modes) fields.push_back(sample_mode(m, d, rule));
  double worst = 0.0;
  for (std::size_t i = 0; i < modes.size(); ++i)
    for (std::size_t j = i; j < modes.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner_product(fields[i], fields[j], rule) - expected));
    }
  return finish("orthonormality", 1e-10, worst, std::to_string(modes.size()) + " finite modes");
}

SuiteResult dirac_residual_suite(const VerifyOptions& o) {
  const auto& d = o.params;
  const double scale = o.fault == Fault::energy_off_by_1e_3 ? 1.001 : 1.0;
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> zdist(0.0, d.length());
  std::uniform_real_distribution<double> phidist(0.0, constants::two_pi);
  double worst = 0.0;  // residual / (R E)
  for (const auto& m : finite_modes()) {
    std::vector<double> z(32);
    for (double& x : z) x = zdist(rng);
    const double e = energy(m, d);
    worst = std::max(worst, dirac_residual(m, d, z, scale) / e);
    for (double zz : z) {
      const double phi = phidist(rng);
      const SpinorJet jet = eval_mode_jet(m, d, 0.0, phi, zz, scale);
      worst = std::max(worst, dirac_operator_residual(jet, phi, d).cwiseAbs().maxCoeff() / e);
    }
  }
  return finish("dirac_residual", 1e-12, worst);
}

SuiteResult k_operator(const VerifyOptions& o) {
  // the eigen-relation holds for stationary (k = 0) modes only
  const auto& d = o.params;
  double worst = 0.0;
  for (int t = -kMaxTwiceLambda; t <= kMaxTwiceLambda; t += 2)
    for (Polarization s : {Polarization::plus, Polarization::minus}) {
      const HalfOdd lam = HalfOdd::from_twice(t);
      const ModeSpec m = ModeSpec::infinite(0.0, lam, s);
      const double eig = (s == Polarization::plus ? 1.0 : -1.0) * lam.value();
      for (double phi : {0.0, 1.1, 2.9, 4.4}) {
        const SpinorValue u = eval_mode(m, d, 0.7, phi, 0.3);
        const SpinorValue ku = k_operator_apply(m, d, 0.7, phi, 0.3);
        worst = std::max(worst, (ku - eig * u).cwiseAbs().maxCoeff());
      }
    }
  return finish("k_operator", 1e-13, worst, "infinite-cylinder modes at k = 0");
}

SuiteResult circular_current(const VerifyOptions& o) {
  const auto& d = o.params;
  const QuadratureRule rule = QuadratureRule::finite(d.length(), kMaxN, o.z_order, 16);
  const std::vector<std::pair<complex, complex>> mixings = {
      {1.0, 0.0},
      {0.0, 1.0},
      {std::sqrt(0.5), complex(0.0, std::sqrt(0.5))},
      {0.6, -0.8},
      {complex(0.3, 0.4), complex(0.0, -std::sqrt(0.75))}};
  double worst = 0.0;
  for (int n = 1; n <= kMaxN; ++n)
    for (int t = -kMaxTwiceLambda; t <= kMaxTwiceLambda; t += 2)
      for (const auto& [cp, cm] : mixings) {
        const MixedState s = MixedState::normalized(n, HalfOdd::from_twice(t), cp, cm);
        worst = std::max(worst, std::abs(circular_current_mode(s, d) - circular_current_quadrature(s, d, rule)));
      }
  return finish("circular_current", 1e-9, worst);
}

SuiteResult derivative_identity(const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed + 1);
  // central differences lose ~1e-10 E^2/|lambda+beta| to rounding, so the
  // tuples stay at modest energies and beta keeps lambda+beta off zero
  std::uniform_int_distribution<int> ndist(1, 3);
  std::uniform_int_distribution<int> ldist(-4, 3);
  std::uniform_real_distribution<double> mdist(0.2, 2.0);
  std::uniform_real_distribution<double> bdist(-0.45, 0.45);
  const double h = 1e-6;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = ndist(rng);
    const HalfOdd lam = HalfOdd::from_twice(2 * ldist(rng) + 1);
    const double mu = mdist(rng), nu = mdist(rng), beta = bdist(rng);
    const auto at = [&](double b) { return DimensionlessParams::make(mu, nu, b, 0.0); };
    const ModeSpec m = ModeSpec::finite(n, lam, Polarization::plus);
    const double fd = (energy(m, at(beta + h)) - energy(m, at(beta - h))) / (2.0 * h);
    // R I^c = chi / 2pi and dE/dbeta = chi, so compare through chi
    const double analytic = chi(n, lam, at(beta));
    worst = std::max(worst, std::abs(fd - analytic) / std::max(std::abs(analytic), 1e-300));
  }
  return finish("derivative_identity", 1e-6, worst, "50 random tuples, h = 1e-6");
}

SuiteResult saturation() {
  const auto d = DimensionlessParams::make(1.0, 1.0, 0.0, 0.0);
  const HalfOdd lam = HalfOdd::from_twice(4001);
  const double bound = 2.0 / (2.0 * lam.value() * lam.value()) * (1.0 + 1e-3);
  const double worst = std::max(std::abs(chi(1, lam, d) - 1.0), std::abs(chi(1, -lam, d) + 1.0)) / bound;
  return finish("saturation", 1.0, worst, "fraction of the (mu^2 + nu^2 n^2)/(2 lambda^2) bound");
}

SuiteResult beta_expansion() {
  const auto residual = [](double beta) {
    const auto d = DimensionlessParams::make(1.0, 1.0, beta, 0.0);
    const HalfOdd lam = HalfOdd::from_twice(3);
    return std::abs(chi(1, lam, d) + chi(1, -lam, d) - 2.0 * j_coeff(1, lam, d) * beta);
  };
  const double ratio = residual(1e-2) / residual(1e-3);
  return finish("beta_expansion", 100.0, std::abs(ratio - 1000.0), "ratio " + std::to_string(ratio));
}

SuiteResult fermi_sea(const VerifyOptions& o) {
  double mismatches = 0.0;
  const DimensionlessParams cases[] = {o.params, DimensionlessParams::make(2.0, 0.7, 0.45, 6.3),
                                       DimensionlessParams::make(1.0, 0.3, -0.5, 2.5)};
  for (const auto& d : cases)
    for (auto crit : {OccupationCriterion::exact, OccupationCriterion::quadratic}) {
      const FermiSea sea = enumerate_fermi_sea(d, crit);
      const int nmax = static_cast<int>(std::ceil(d.alpha / d.nu)) + 2;
      const int tmax = 2 * static_cast<int>(std::ceil(d.alpha + std::abs(d.beta))) + 5;  // odd
      long long count = 0;
      for (int n = 1; n <= nmax; ++n)
        for (int t = -tmax; t <= tmax; t += 2) {
          const HalfOdd l = HalfOdd::from_twice(t);
          const bool occ = occupied(n, l, d, crit);
          count += occ;
          if (occ != sea.contains(n, l)) mismatches += 1.0;
        }
      if (count != sea.electron_count()) mismatches += 1.0;
    }
  return finish("fermi_sea", 0.0, mismatches, "brute-force enumeration mismatches");
}

SuiteResult antisymmetry() {
  auto d = DimensionlessParams::make(20.0, 0.8, 3e-3, 9.0);
  const double plus = persistent_exact(d).value;
  d.beta = -d.beta;
  const double minus = persistent_exact(d).value;
  return finish("beta_antisymmetry", 1e-12, std::abs(plus + minus) / std::abs(plus));
}

SuiteResult method_ladder() {
  const auto d = DimensionlessParams::make(250.0, 1.0, 1e-4, 50.0);
  const double exact = persistent_exact(d).value;
  const double lin = persistent_linearized(d).value;
  const double compact = persistent_compact(d).value;
  const double g1 = std::abs(exact - lin) / std::abs(lin) / (10.0 * d.beta * d.beta);
  const double g2 = std::abs(lin - compact) / std::abs(lin) / 0.02;
  return finish("method_ladder", 1.0, std::max(g1, g2), "worst gap as a fraction of its tolerance");
}

}  // namespace

std::optional<Fault> parse_fault(const std::string& name) {
  if (name.empty() || name == "none") return Fault::none;
  if (name == "energy-off-by-1e-3") return Fault::energy_off_by_1e_3;
  return std::nullopt;
}

std::string to_string(Fault f) { return f == Fault::none ? "none" : "energy-off-by-1e-3"; }

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.params.nu <= 0.0) throw RegimeError("verification needs a finite cylinder (nu > 0)");
  VerifyReport report;
  report.fault = options.fault;
  report.suites.push_back(clifford());
  report.suites.push_back(orthonormality(options));
  report.suites.push_back(dirac_residual_suite(options));
  report.suites.push_back(k_operator(options));
  report.suites.push_back(circular_current(options));
  report.suites.push_back(derivative_identity(options));
  report.suites.push_back(saturation());
  report.suites.push_back(beta_expansion());
  report.suites.push_back(fermi_sea(options));
  report.suites.push_back(antisymmetry());
  report.suites.push_back(method_ladder());
  return report;
}

}  // namespace abcyl
