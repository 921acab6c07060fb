#include "bellkit/bell.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bellkit/errors.hpp"
#include "bellkit/random.hpp"

namespace bellkit {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

void require_dichotomic(const ComplexMatrix& x, const char* name, double tol) {
  if (!x.is_square()) throw DimensionError(std::string("observable ") + name + " is not square");
  if (!is_hermitian(x, tol)) throw InvalidInput(std::string("observable ") + name + " is not Hermitian");
  if (max_abs_diff(x * x, ComplexMatrix::identity(x.rows())) > tol)
    throw InvalidInput(std::string("observable ") + name + " does not square to the identity");
}

using Tensor = std::array<std::array<double, 3>, 3>;

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3 times(const Tensor& t, const Vec3& v) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) out[i] = t[i][0] * v[0] + t[i][1] * v[1] + t[i][2] * v[2];
  return out;
}

Vec3 transpose_times(const Tensor& t, const Vec3& v) {
  Vec3 out{};
  for (int j = 0; j < 3; ++j) out[j] = t[0][j] * v[0] + t[1][j] * v[1] + t[2][j] * v[2];
  return out;
}

Vec3 add(const Vec3& u, const Vec3& v, double s = 1.0) { return {u[0] + s * v[0], u[1] + s * v[1], u[2] + s * v[2]}; }

// beta = a.T(b - d) + c.T(b + d) for spin observables.
double beta_from_tensor(const Tensor& t, const BellScenario::Settings& s) {
  return dot(s.a, times(t, add(s.b, s.d, -1.0))) + dot(s.c, times(t, add(s.b, s.d)));
}

// Normalized v scaled by sign, or fallback when v vanishes.
Vec3 unit_or(const Vec3& v, double sign, const Vec3& fallback) {
  const double n = std::sqrt(dot(v, v));
  if (n < 1e-300) return fallback;
  return {sign * v[0] / n, sign * v[1] / n, sign * v[2] / n};
}

struct Candidate {
  BellScenario::Settings settings;
  double objective;
};

// Angle tuple (theta, phi per direction) used for deterministic tie-breaking.
std::array<double, 8> angle_key(const BellScenario::Settings& s) {
  std::array<double, 8> k{};
  const Vec3* dirs[4] = {&s.a, &s.c, &s.b, &s.d};
  for (int i = 0; i < 4; ++i) {
    const auto ang = angles_from_direction(*dirs[i]);
    k[2 * i] = ang[0];
    k[2 * i + 1] = ang[1];
  }
  return k;
}

Candidate ascend(const Tensor& t, double sign, std::array<double, 8> angles) {
  // Grid stage: 12 values per angle, two passes of coordinate ascent.
  auto settings_of = [](const std::array<double, 8>& ang) {
    return BellScenario::Settings{direction_from_angles(ang[0], ang[1]), direction_from_angles(ang[2], ang[3]),
                                  direction_from_angles(ang[4], ang[5]), direction_from_angles(ang[6], ang[7])};
  };
  for (int pass = 0; pass < 2; ++pass) {
    for (int coord = 0; coord < 8; ++coord) {
      const bool polar = coord % 2 == 0;
      double best_value = angles[coord];
      double best = sign * beta_from_tensor(t, settings_of(angles));
      for (int k = 0; k < 12; ++k) {
        const double value = polar ? 180.0 * k / 11.0 : 360.0 * k / 12.0;
        auto trial = angles;
        trial[coord] = value;
        const double f = sign * beta_from_tensor(t, settings_of(trial));
        if (f > best) {
          best = f;
          best_value = value;
        }
      }
      angles[coord] = best_value;
    }
  }

  // Refinement: each direction enters linearly, so its optimum given the
  // other three is the normalized coefficient vector.
  BellScenario::Settings s = settings_of(angles);
  double current = sign * beta_from_tensor(t, s);
  for (int iter = 0; iter < 100000; ++iter) {
    s.a = unit_or(times(t, add(s.b, s.d, -1.0)), sign, s.a);
    s.c = unit_or(times(t, add(s.b, s.d)), sign, s.c);
    s.b = unit_or(transpose_times(t, add(s.a, s.c)), sign, s.b);
    s.d = unit_or(transpose_times(t, add(s.c, s.a, -1.0)), sign, s.d);
    const double next = sign * beta_from_tensor(t, s);
    const double gain = next - current;
    current = std::max(current, next);
    if (gain < 1e-10) break;
  }
  return {s, current};
}

}  // namespace

Vec3 direction_from_angles(double theta_deg, double phi_deg) {
  const double th = theta_deg * kDeg;
  const double ph = phi_deg * kDeg;
  return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
}

std::array<double, 2> angles_from_direction(const Vec3& n) {
  const double theta = std::acos(std::clamp(n[2], -1.0, 1.0)) / kDeg;
  double phi = std::atan2(n[1], n[0]) / kDeg;
  if (phi < 0.0) phi += 360.0;
  if (phi >= 360.0) phi -= 360.0;
  return {theta, phi};
}

ComplexMatrix spin_observable(const Vec3& n, double tol) {
  const double norm = std::sqrt(dot(n, n));
  if (std::abs(norm - 1.0) > tol) throw InvalidInput("spin direction is not a unit vector (|n| = " + std::to_string(norm) + ")");
  return {{n[2], Complex(n[0], -n[1])}, {Complex(n[0], n[1]), -n[2]}};
}

Proposition spin_projector(const Vec3& n, std::string label, double tol) {
  const ComplexMatrix s = spin_observable(n, tol);
  return Proposition(std::move(label), (ComplexMatrix::identity(2) + s) * Complex(0.5));
}

ComplexMatrix dichotomize(const Proposition& p) {
  return p.projector() * Complex(2.0) - ComplexMatrix::identity(p.dim());
}

Proposition projector_of(const ComplexMatrix& x, std::string label, double tol) {
  require_dichotomic(x, label.c_str(), tol);
  return Proposition(std::move(label), (x + ComplexMatrix::identity(x.rows())) * Complex(0.5), tol);
}

double chsh_value(const CorrelationSet& c, double tol) {
  for (const double v : {c.ab, c.bc, c.cd, c.ad})
    if (!(std::abs(v) <= 1.0 + tol)) throw InvalidInput("correlation " + std::to_string(v) + " outside [-1, 1]");
  return c.ab + c.bc + c.cd - c.ad;
}

double ch_value(const MarginalSet& m, double tol) {
  for (const double p : {m.pA, m.pB, m.pC, m.pD, m.pAB, m.pAD, m.pBC, m.pCD})
    if (!(p >= -tol && p <= 1.0 + tol)) throw InvalidInput("probability " + std::to_string(p) + " outside [0, 1]");
  return m.pAB + m.pBC + m.pCD - m.pAD - m.pB - m.pC;
}

BellScenario::BellScenario(ComplexMatrix a, ComplexMatrix c, ComplexMatrix b, ComplexMatrix d, DensityOperator state,
                           double tol)
    : a_(std::move(a)), c_(std::move(c)), b_(std::move(b)), d_(std::move(d)), state_(std::move(state)) {
  require_dichotomic(a_, "a", tol);
  require_dichotomic(c_, "c", tol);
  require_dichotomic(b_, "b", tol);
  require_dichotomic(d_, "d", tol);
  if (a_.rows() != c_.rows()) throw DimensionError("a and c must act on the same subsystem");
  if (b_.rows() != d_.rows()) throw DimensionError("b and d must act on the same subsystem");
  if (state_.dim() != a_.rows() * b_.rows())
    throw DimensionError("state dimension " + std::to_string(state_.dim()) + " != M*N = " +
                         std::to_string(a_.rows() * b_.rows()));
}

BellScenario BellScenario::from_settings(const DensityOperator& state, const Settings& s) {
  return BellScenario(spin_observable(s.a), spin_observable(s.c), spin_observable(s.b), spin_observable(s.d), state);
}

BellOperator bell_operator(const BellScenario& s) {
  ComplexMatrix m = tensor_product(s.a(), s.b());
  m += tensor_product(s.c(), s.b());
  m += tensor_product(s.c(), s.d());
  m -= tensor_product(s.a(), s.d());
  return {m};
}

CorrelationSet correlations(const BellScenario& s) {
  const auto& rho = s.state();
  return {rho.expectation(tensor_product(s.a(), s.b())), rho.expectation(tensor_product(s.c(), s.b())),
          rho.expectation(tensor_product(s.c(), s.d())), rho.expectation(tensor_product(s.a(), s.d()))};
}

double beta(const BellScenario& s) { return s.state().expectation(bell_operator(s).matrix); }

std::array<std::array<double, 3>, 3> correlation_tensor(const DensityOperator& state) {
  if (state.dim() != 4) throw DimensionError("correlation_tensor: two-qubit state required");
  const ComplexMatrix sig[3] = {pauli::x(), pauli::y(), pauli::z()};
  Tensor t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = state.expectation(tensor_product(sig[i], sig[j]));
  return t;
}

ViolationResult maximize_violation(const DensityOperator& state, std::uint64_t seed) {
  const Tensor t = correlation_tensor(state);

  std::vector<std::array<double, 8>> starts;
  starts.push_back({0, 0, 0, 0, 0, 0, 0, 0});
  starts.push_back({90, 0, 90, 90, 90, 0, 90, 90});
  Rng rng(seed);
  for (int r = 0; r < 4; ++r) {
    std::array<double, 8> ang{};
    for (int i = 0; i < 8; ++i) ang[i] = (i % 2 == 0 ? 180.0 : 360.0) * rng.uniform();
    starts.push_back(ang);
  }

  bool have = false;
  Candidate best{};
  for (const auto& start : starts) {
    for (const double sign : {1.0, -1.0}) {
      const Candidate c = ascend(t, sign, start);
      const bool better = !have || c.objective > best.objective + 1e-15 ||
                          (std::abs(c.objective - best.objective) <= 1e-15 &&
                           angle_key(c.settings) < angle_key(best.settings));
      if (better) {
        best = c;
        have = true;
      }
    }
  }

  const BellScenario scenario = BellScenario::from_settings(state, best.settings);
  const double b = beta(scenario);
  return {best.settings, b, std::abs(b)};
}

double epr_min_separation(double length_m, double velocity_mps) {
  if (!(length_m > 0.0)) throw InvalidInput("apparatus length must be positive");
  if (!(velocity_mps > 0.0)) throw InvalidInput("velocity must be positive");
  if (!(velocity_mps < kSpeedOfLight)) throw InvalidInput("velocity must be below the speed of light");
  return 2.0 * length_m * kSpeedOfLight / velocity_mps;
}

double velocity_from_energy(double energy_ev, double mass_amu) {
  constexpr double kElectronVolt = 1.602176634e-19;   // J, exact
  constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
  if (!(energy_ev > 0.0) || !(mass_amu > 0.0)) throw InvalidInput("energy and mass must be positive");
  return std::sqrt(2.0 * energy_ev * kElectronVolt / (mass_amu * kAtomicMassUnit));
}

}  // namespace bellkit
