#pragma once

#include <optional>
#include <string>

#include "fusd/discrimination.hpp"
#include "fusd/sectors.hpp"

namespace fusd {

/// Which closed-form regime a discrimination instance falls into, and how the
/// optimality verdict was reached.
enum class CaseTag {
  DifferentParity,   // opposite global parities: perfectly discriminable
  SameSectorOnly,    // both states in one sector: plain two-state problem
  PerfectOrtho,      // orthogonal globally and sector-wise
  Ternary,           // global ternary regime, sector-overlap conditions
  BinaryMixed,       // global binary, one sector ternary and one binary
  BinaryDegenerate,  // global binary, one conditional prior vanishes
  BinaryBoth,        // global binary, both sectors binary
  PhaseFail,         // sector scalar products disagree in phase
  ConditionFail,     // regime condition not met (tag detail names the regime)
};

std::string to_string(CaseTag tag);

struct OptimalityVerdict {
  bool locc_optimal = false;
  CaseTag case_tag = CaseTag::ConditionFail;
  int degenerate_case = 0;  // 1..4 when case_tag == BinaryDegenerate
  double p_s = 0.0;
  double p_s_sep = 0.0;
  double gap = 0.0;  // p_s - p_s_sep; the authoritative optimality measure
  bool checker_result = false;     // closed-form condition outcome
  bool condition_mismatch = false; // checker disagrees with the numeric gap
  std::string detail;
};

/// Sector scalar products must share a complex argument (or one be null) for
/// separable discrimination to reach the unconstrained optimum.
bool phase_condition(const SectorData& sd);

/// Ternary-regime condition: phase agreement plus per-sector overlap below
/// the sector threshold. Degenerate sectors pass vacuously.
bool check_ternary(const SectorData& sd, double p, double q);

/// sqrt(max{p||psi_i||^2, q||phi_i||^2} / max{p,q}) * (overlap_i - Xi(p_i,q_i)).
/// The slack a binary sector contributes to the mixed-regime condition.
double binary_sector_excess(double p, double q, double weight_psi, double weight_phi,
                            double overlap, double p_cond, double q_cond);

/// Mixed binary/ternary regime: optimal iff the global overlap exceeds the
/// global threshold by exactly the binary sector's excess. Returns the signed
/// condition residual alongside the boolean.
struct ConditionResult {
  bool ok = false;
  double residual = 0.0;
};
ConditionResult check_binary_mixed(const SectorData& sd, double p, double q);

/// Degenerate binary regime (exactly one of p_E, q_E, p_O, q_O is zero):
/// one of four closed-form conditions must hold.
struct DegenerateResult {
  bool ok = false;
  int case_index = 0;    // 1..4
  double residual = 0.0; // equality residual for cases 3/4, 0 otherwise
};
DegenerateResult check_binary_degenerate(const SectorData& sd, double p, double q);

/// sqrt(Pr(i)/max{p,q}) * sqrt((p_i - q_i)^{+/-} (1 - overlap_i^2)), the
/// imbalance term of sector i. `positive_part` selects (.)^+ over (.)^-.
/// The overlap is the sector's own normalized overlap.
double sector_imbalance(bool positive_part, double pr, double p_cond, double q_cond,
                        double overlap, double p, double q);

/// Both sectors binary: optimal iff the cross-norm overlap balance holds up
/// to the imbalance terms (either sign branch accepted).
ConditionResult check_binary_both(const SectorData& sd, double p, double q);

/// Coefficients of the general quadratic optimality condition in the two
/// normalized sector overlaps (x = even, y = odd).
struct QuadraticCoefficients {
  double a = 0, b = 0, c = 0, d = 0, f = 0, g = 0;
};

/// Coefficient set for the mixed regime with the given ternary sector.
QuadraticCoefficients mixed_regime_coefficients(const SectorData& sd, double p, double q,
                                                Sector ternary_sector);
/// Coefficient set for the regime where both sectors are binary.
QuadraticCoefficients both_binary_coefficients(const SectorData& sd, double p, double q);

/// a x^2 + b y^2 + c x + d y + f x y + g.
double quadratic_condition(const QuadraticCoefficients& k, double x, double y);

struct QuadraticRoots {
  std::optional<double> plus;
  std::optional<double> minus;
  bool real() const { return plus.has_value(); }
};

/// Roots of the condition read as a quadratic in x for fixed y (requires
/// a != 0) or in y for fixed x (requires b != 0). A negative discriminant
/// yields empty branches.
QuadraticRoots quadratic_solve_x(const QuadraticCoefficients& k, double y);
QuadraticRoots quadratic_solve_y(const QuadraticCoefficients& k, double x);

/// Full dispatch: numeric gap as ground truth, closed-form checkers as
/// validators, with any disagreement surfaced as condition_mismatch.
OptimalityVerdict check_locc_optimal(const DiscriminationInstance& inst);

}  // namespace fusd
