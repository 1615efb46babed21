#pragma once

// Numeric tolerances used by the verification checks. Every numeric test and
// suite compares against one of these.
namespace crown::tol {

inline constexpr double kFormPreservation = 1e-10;  // |Q(gv) - Q(v)|, |g^T J g - J|
inline constexpr double kOrbitIdentity = 1e-10;     // SO(1,2) orbit identity deviation
inline constexpr double kOrbitIdentityEdge = 1e-9;  // same, close to |t| = pi/4
inline constexpr double kBoundaryMap = 1e-10;
inline constexpr double kWitness = 1e-9;            // |z . xi - 1| for horocycle witnesses
inline constexpr double kConvexity = 1e-8;
inline constexpr double kPhaseSlack = 1e-12;
inline constexpr double kChartMinor = 1e-12;        // relative size of a leading principal minor
inline constexpr double kGridResolution = 1e-3;     // Sp(n) verdict flip
inline constexpr double kZeroLocus = 1e-9;          // |F| accepted as a zero of the region criterion

inline constexpr double kQuadratureAbs = 1e-9;
inline constexpr double kQuadratureRel = 1e-10;
inline constexpr unsigned kQuadratureDepth = 15;

inline constexpr double kSeriesTerm = 1e-16;
inline constexpr int kSeriesMaxTerms = 10000;
inline constexpr double kIntegerParameter = 1e-9;   // c-a-b treated as an integer below this

inline constexpr double kExponentFit = 0.05;
inline constexpr double kFitStability = 0.01;
inline constexpr double kDoubling = 1e-6;
inline constexpr double kSymmetry = 1e-9;           // phi_lambda = phi_-lambda

inline constexpr double kMaassTail = 1e-12;
inline constexpr double kBesselClosedForm = 1e-8;
inline constexpr double kStirlingRatio = 0.02;
inline constexpr double kPoleDistance = 1e-6;

}  // namespace crown::tol
