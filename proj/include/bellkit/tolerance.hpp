#pragma once

// Default numerical thresholds. Every predicate that uses one of these takes
// an explicit override parameter.
namespace bellkit::tol {

inline constexpr double validity = 1e-9;     // Hermitian / PSD / trace checks
inline constexpr double algebraic = 1e-10;   // identities that hold exactly
inline constexpr double commute = 1e-8;      // Frobenius norm of [A,B]
inline constexpr double degeneracy = 1e-7;   // eigenvalue clustering gap
inline constexpr double lp_feasible = 1e-9;  // phase-1 optimum
inline constexpr double clamp_eig = 1e-12;   // roundoff below zero in spectra

}  // namespace bellkit::tol
