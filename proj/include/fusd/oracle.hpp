#pragma once

#include <cstdint>
#include <random>

#include "fusd/discrimination.hpp"
#include "fusd/sectors.hpp"

namespace fusd {

struct GridSearchConfig {
  int coarse_steps = 200;      // grid points per axis on the first pass
  int refine_rounds = 5;       // local refinement passes around the best point
  double refine_factor = 10.0; // window shrink per refinement round
  double feasibility_tol = 1e-12;

  void validate() const;  // resolution after refinement must reach 1e-6
};

/// Direct maximization of the two-state unambiguous success probability over
/// the zero-error POVM family on the span of the two states, by nested grid
/// search over the two effect weights. Independent of every closed form.
double brute_force_unconstrained(double p, double q, double s_abs,
                                 const GridSearchConfig& cfg = {});

/// Sector-wise brute force combined with the sector probabilities.
double brute_force_sep(const DiscriminationInstance& inst, const GridSearchConfig& cfg = {});

struct TrialCounts {
  long long trials = 0;
  long long announced_psi = 0;
  long long announced_phi = 0;
  long long inconclusive = 0;
  long long cross_errors = 0;  // announced psi when phi was true, or vice versa
  double success_rate = 0.0;
};

/// Samples the true state by prior and the outcome by the Born rule.
/// Deterministic for a fixed seed.
TrialCounts monte_carlo(const DiscriminationInstance& inst, const UsdPovm& povm,
                        long long trials, std::uint64_t seed);

/// Random even-parity instance on alice+bob modes: complex Gaussian
/// amplitudes on a few random even-parity labels, priors drawn from a grid
/// that includes boundary-adjacent values.
DiscriminationInstance random_instance(std::mt19937_64& rng, int alice_modes = 2,
                                       int bob_modes = 2);

/// Variant that confines each state to one sector with some probability, to
/// exercise the degenerate branches.
DiscriminationInstance random_instance_with_degenerate(std::mt19937_64& rng,
                                                       int alice_modes = 2,
                                                       int bob_modes = 2);

}  // namespace fusd
