#pragma once

// Numerical tolerances used across the library. Input validation is looser
// than internal identities so that hand-written instance files round-trip.
namespace fusd::tol {

inline constexpr double kValidation = 1e-9;   // norm = 1, priors sum to 1
inline constexpr double kInternal = 1e-12;    // algebraic identities
inline constexpr double kGap = 1e-9;          // P_s - P_s^SEP optimality gap
inline constexpr double kFuzzGap = 1e-7;      // gap threshold in fuzz sweeps
inline constexpr double kBoundaryBand = 1e-6; // excluded band around condition boundaries
inline constexpr double kAngle = 1e-7;        // phase-equality tolerance (radians)
inline constexpr double kNullOverlap = 1e-12; // magnitude floor for "null scalar product"
inline constexpr double kCondition = 1e-9;    // closed-form equality conditions

}  // namespace fusd::tol
