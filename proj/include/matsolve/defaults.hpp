#pragma once

namespace matsolve {

// Tolerances and caps shared across the toolkit. Values are pinned here;
// callers may override per call through the options structs.
inline constexpr double kRootResidualTol = 1e-10;  // relative backward root residual
inline constexpr double kRankTol = 1e-9;           // singular values <= tol * sigma_max
inline constexpr double kDedupTol = 1e-6;          // max-norm distance treated as equal
inline constexpr double kSolventTol = 1e-8;        // matrix equation residual, max-norm
inline constexpr double kPhiResidualTol = 1e-7;    // scalar-polynomial-at-matrix residual
inline constexpr double kCondCap = 1e12;           // eigenvector matrix condition gate
inline constexpr double kUGate = 1e-10;            // invertibility gate for subspace tops
inline constexpr double kCommuteTol = 1e-9;        // commutator norm for commuting outputs
inline constexpr double kTraceEvenTol = 1e-6;      // odd-coefficient bound, relative
inline constexpr double kRootGapTol = 1e-7;        // numeric distinctness of spectra
inline constexpr double kLeadingTol = 1e-12;       // relative trim for float polynomials
inline constexpr long kPairBudget = 200000;
inline constexpr long kEnumCap = 20000;            // solvent subset enumeration cap
inline constexpr int kGenericityRetries = 3;

}  // namespace matsolve
