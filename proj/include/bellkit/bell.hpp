#pragma once

#include <array>
#include <cstdint>

#include "bellkit/logic.hpp"
#include "bellkit/marginals.hpp"
#include "bellkit/matrix.hpp"
#include "bellkit/states.hpp"

namespace bellkit {

using Vec3 = std::array<double, 3>;

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact

/// Unit vector at polar angle theta (from +z) and azimuth phi, both in degrees.
Vec3 direction_from_angles(double theta_deg, double phi_deg);
/// Inverse of direction_from_angles: {theta, phi} in degrees, phi in [0, 360).
std::array<double, 2> angles_from_direction(const Vec3& n);

/// n . sigma
ComplexMatrix spin_observable(const Vec3& n, double tol = tol::validity);
/// (I + n . sigma) / 2. Throws InvalidInput when |n| != 1 within tol.
Proposition spin_projector(const Vec3& n, std::string label = "P", double tol = tol::validity);

/// 2P - I
ComplexMatrix dichotomize(const Proposition& p);
/// (x + I) / 2 for a +-1 observable x.
Proposition projector_of(const ComplexMatrix& x, std::string label = "P", double tol = tol::validity);

/// <ab>, <bc>, <cd>, <ad>, each the expectation of a side-1 observable times a
/// side-2 observable.
struct CorrelationSet {
  double ab = 0, bc = 0, cd = 0, ad = 0;
};

/// <ab> + <bc> + <cd> - <ad>. Local models keep |value| <= 2.
double chsh_value(const CorrelationSet& c, double tol = tol::validity);
/// pAB + pBC + pCD - pAD - pB - pC. Local models keep it in [-1, 0].
double ch_value(const MarginalSet& m, double tol = tol::validity);

/// Four dichotomic (+-1) observables, a and c on subsystem 1 (dimension M),
/// b and d on subsystem 2 (dimension N), and a joint state on M*N.
class BellScenario {
 public:
  BellScenario(ComplexMatrix a, ComplexMatrix c, ComplexMatrix b, ComplexMatrix d, DensityOperator state,
               double tol = tol::validity);

  struct Settings {
    Vec3 a, c, b, d;
  };
  /// Two-qubit scenario with spin observables along the given directions.
  static BellScenario from_settings(const DensityOperator& state, const Settings& s);

  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& b() const { return b_; }
  const ComplexMatrix& c() const { return c_; }
  const ComplexMatrix& d() const { return d_; }
  const DensityOperator& state() const { return state_; }
  Bipartition dims() const { return {a_.rows(), b_.rows()}; }

 private:
  ComplexMatrix a_, c_, b_, d_;
  DensityOperator state_;
};

struct BellOperator {
  ComplexMatrix matrix;
};

/// a(x)b + c(x)b + c(x)d - a(x)d
BellOperator bell_operator(const BellScenario& s);
CorrelationSet correlations(const BellScenario& s);
/// Tr(B rho)
double beta(const BellScenario& s);

struct ViolationResult {
  BellScenario::Settings directions;
  double beta = 0.0;      // signed value at the returned directions
  double beta_max = 0.0;  // |beta|
};

/// Maximize |beta| over spin directions for a two-qubit state. Each direction
/// is seeded from a 12-point grid per polar/azimuthal angle, then refined by
/// exact block-coordinate ascent (beta is linear in each direction) until an
/// iteration gains less than 1e-10. Extra random starts come from seed.
ViolationResult maximize_violation(const DensityOperator& state, std::uint64_t seed);

/// Correlation tensor T_ij = Tr(rho sigma_i (x) sigma_j) of a two-qubit state.
std::array<std::array<double, 3>, 3> correlation_tensor(const DensityOperator& state);

/// Minimal distance between two detectors of length L so that measurements by
/// particles flying apart at speed v are spacelike separated: 2 L c / v.
double epr_min_separation(double length_m, double velocity_mps);

/// Non-relativistic speed sqrt(2E/m) for kinetic energy in eV and mass in u.
double velocity_from_energy(double energy_ev, double mass_amu);

}  // namespace bellkit
