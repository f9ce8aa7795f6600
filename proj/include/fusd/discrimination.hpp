#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "fusd/sectors.hpp"

namespace fusd {

enum class StrategyClass {
  Ternary,              // three-outcome measurement is optimal
  BinaryKeepPsi,        // drop the phi effect (p > q, overlap past threshold)
  BinaryKeepPhi,        // drop the psi effect (q > p)
  SingleHypothesis,     // only one state has support; always announce it
  PerfectlyOrthogonal,  // zero overlap, success 1
};

std::string to_string(StrategyClass c);

/// Regime threshold sqrt(min{p,q}/max{p,q}); requires p, q > 0.
double xi(double p, double q);

StrategyClass classify(double p, double q, double s_abs);

/// Optimal unambiguous-discrimination success probability for two pure
/// states with priors (p, q) and overlap magnitude s_abs. Returns 1 when a
/// prior vanishes (single-hypothesis convention).
double optimal_success_unconstrained(double p, double q, double s_abs);

struct SepBreakdown {
  double total = 0.0;
  double even_success = 0.0;  // conditional success within each sector
  double odd_success = 0.0;
  double even_weight = 0.0;  // Pr(E), Pr(O)
  double odd_weight = 0.0;
};

/// Optimal separable (= LOCC) success probability: sector-wise optimal
/// discrimination weighted by the sector probabilities. Different-parity
/// instances are perfectly discriminable and return 1.
SepBreakdown optimal_success_sep(const DiscriminationInstance& inst);
SepBreakdown optimal_success_sep(const SectorData& sd);

/// Three-effect unambiguous-discrimination POVM expressed on an explicit
/// orthonormal basis of the working subspace. Weight outside the stored
/// basis implicitly belongs to the inconclusive effect.
struct UsdPovm {
  std::vector<FermionicVector> basis;  // orthonormal
  Eigen::MatrixXcd pi_psi;
  Eigen::MatrixXcd pi_phi;
  Eigen::MatrixXcd pi_inconclusive;

  Eigen::Index dim() const { return pi_psi.rows(); }
};

struct PovmCheck {
  bool positive = false;        // all effects PSD within tolerance
  bool complete = false;        // effects sum to identity on the basis
  bool zero_error = false;      // no cross-identification probability
  double min_eigenvalue = 0.0;  // most negative effect eigenvalue
  double cross_error = 0.0;     // max of <psi|Pi_phi|psi>, <phi|Pi_psi|phi>
  bool ok() const { return positive && complete && zero_error; }
};

/// Optimal POVM on span{psi, phi} for normalized vectors and priors p + q = 1,
/// p, q > 0. Parallel vectors yield the all-inconclusive POVM.
UsdPovm build_optimal_povm(double p, double q, const FermionicVector& psi,
                           const FermionicVector& phi);

/// Optimal separable POVM: block-diagonal over the two local-parity sectors,
/// each block the optimal POVM of the sector-conditional problem. For states
/// of different global parity the two projective effects discriminate
/// perfectly.
UsdPovm build_sep_povm(const DiscriminationInstance& inst);

/// Coefficients of |state> on the POVM basis.
Eigen::VectorXcd expand_on_basis(const UsdPovm& povm, const FermionicVector& state);

/// Tr[(p rho + q sigma)(Pi_psi + Pi_phi)] for the given POVM.
double povm_success(const UsdPovm& povm, const DiscriminationInstance& inst);

PovmCheck check_povm(const UsdPovm& povm, const FermionicVector& psi,
                     const FermionicVector& phi);

}  // namespace fusd
