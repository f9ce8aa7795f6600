#include "fusd/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fusd/tolerances.hpp"

namespace fusd {

void GridSearchConfig::validate() const {
  if (coarse_steps < 100) throw std::invalid_argument("coarse_steps must be >= 100");
  if (refine_rounds < 2) throw std::invalid_argument("refine_rounds must be >= 2");
  if (refine_factor <= 1.0) throw std::invalid_argument("refine_factor must exceed 1");
  const double resolution = 1.0 / (coarse_steps * std::pow(refine_factor, refine_rounds));
  if (resolution > 1e-6)
    throw std::invalid_argument("grid configuration does not reach 1e-6 resolution");
}

namespace {

// Largest eigenvalue of alpha*P1 + beta*P2 for rank-one projectors whose
// directions meet at cos^2 = s^2 (the two zero-error effect directions).
double max_eigenvalue(double alpha, double beta, double s_sq) {
  const double tr = alpha + beta;
  const double det = alpha * beta * (1.0 - s_sq);
  return 0.5 * (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
}

}  // namespace

double brute_force_unconstrained(double p, double q, double s_abs,
                                 const GridSearchConfig& cfg) {
  cfg.validate();
  if (s_abs < 0.0 || s_abs > 1.0 + tol::kInternal)
    throw std::invalid_argument("overlap magnitude must lie in [0, 1]");
  s_abs = std::min(s_abs, 1.0);
  if (p <= 0.0 || q <= 0.0) return 1.0;  // single hypothesis

  const double s_sq = s_abs * s_abs;
  const double conclusive_weight = 1.0 - s_sq;

  // Both weights enter the objective positively, so the optimum saturates the
  // feasibility boundary: for each alpha, take the largest feasible beta,
  // located by bisection on the same eigenvalue check the grid would use.
  auto beta_max = [&](double alpha) {
    if (max_eigenvalue(alpha, 1.0, s_sq) <= 1.0 + cfg.feasibility_tol) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > cfg.feasibility_tol) {
      const double mid = 0.5 * (lo + hi);
      (max_eigenvalue(alpha, mid, s_sq) <= 1.0 + cfg.feasibility_tol ? lo : hi) = mid;
    }
    return lo;
  };

  double lo_a = 0.0, hi_a = 1.0;
  double best = 0.0, best_a = 0.0;
  for (int round = 0; round <= cfg.refine_rounds; ++round) {
    const double step_a = (hi_a - lo_a) / cfg.coarse_steps;
    for (int i = 0; i <= cfg.coarse_steps; ++i) {
      const double alpha = lo_a + i * step_a;
      const double value = (p * alpha + q * beta_max(alpha)) * conclusive_weight;
      if (value > best) {
        best = value;
        best_a = alpha;
      }
    }
    // Shrink the window around the incumbent; keep it wide enough to contain
    // the true maximizer, which lies within one grid step of the incumbent.
    const double half_a = std::max((hi_a - lo_a) / (2.0 * cfg.refine_factor), 2.0 * step_a);
    lo_a = std::max(0.0, best_a - half_a);
    hi_a = std::min(1.0, best_a + half_a);
  }
  return best;
}

double brute_force_sep(const DiscriminationInstance& inst, const GridSearchConfig& cfg) {
  inst.validate();
  if (!inst.same_global_parity()) return 1.0;
  const SectorData sd = sector_data(inst);
  double total = 0.0;
  for (const SectorSlot* slot : {&sd.even, &sd.odd}) {
    if (slot->degenerate) continue;
    if (slot->single_hypothesis())
      total += slot->pr;
    else
      total += slot->pr * brute_force_unconstrained(slot->p_cond, slot->q_cond,
                                                    slot->overlap, cfg);
  }
  return total;
}

TrialCounts monte_carlo(const DiscriminationInstance& inst, const UsdPovm& povm,
                        long long trials, std::uint64_t seed) {
  inst.validate();
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  if (povm.dim() == 0 || povm.basis.empty() ||
      povm.basis.front().modes() != inst.psi.vector.modes())
    throw std::invalid_argument("POVM does not act on the instance's space");

  struct OutcomeProbs {
    double announce_psi, announce_phi;
  };
  auto born = [&](const FermionicVector& state) {
    const Eigen::VectorXcd c = expand_on_basis(povm, state);
    double ppsi = (c.adjoint() * povm.pi_psi * c).value().real();
    double pphi = (c.adjoint() * povm.pi_phi * c).value().real();
    if (ppsi < -tol::kInternal || pphi < -tol::kInternal)
      throw std::domain_error("negative Born probability");
    return OutcomeProbs{std::max(0.0, ppsi), std::max(0.0, pphi)};
  };
  const OutcomeProbs when_psi = born(inst.psi.vector);
  const OutcomeProbs when_phi = born(inst.phi.vector);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TrialCounts counts;
  counts.trials = trials;
  for (long long t = 0; t < trials; ++t) {
    const bool truth_is_psi = unit(rng) < inst.psi.prior;
    const OutcomeProbs& probs = truth_is_psi ? when_psi : when_phi;
    const double u = unit(rng);
    if (u < probs.announce_psi) {
      ++counts.announced_psi;
      if (!truth_is_psi) ++counts.cross_errors;
    } else if (u < probs.announce_psi + probs.announce_phi) {
      ++counts.announced_phi;
      if (truth_is_psi) ++counts.cross_errors;
    } else {
      ++counts.inconclusive;
    }
  }
  counts.success_rate =
      static_cast<double>(counts.announced_psi + counts.announced_phi - counts.cross_errors) /
      static_cast<double>(trials);
  return counts;
}

namespace {

std::vector<OccupationLabel> parity_labels(int modes, Parity parity) {
  std::vector<OccupationLabel> labels;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << modes); ++bits) {
    OccupationLabel label{modes, bits};
    if (label.parity() == parity) labels.push_back(label);
  }
  return labels;
}

FermionicVector random_state(std::mt19937_64& rng, std::vector<OccupationLabel> pool,
                             int modes) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::shuffle(pool.begin(), pool.end(), rng);
  const int max_support = std::min<int>(6, static_cast<int>(pool.size()));
  std::uniform_int_distribution<int> count(1, max_support);
  const int k = count(rng);
  FermionicVector::AmplitudeMap amps;
  for (int i = 0; i < k; ++i) amps[pool[static_cast<std::size_t>(i)]] = {gauss(rng), gauss(rng)};
  return FermionicVector(modes, Parity::Even, std::move(amps)).normalized();
}

double random_prior(std::mt19937_64& rng) {
  static constexpr std::array<double, 13> grid = {0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5,
                                                  0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  return grid[pick(rng)];
}

}  // namespace

DiscriminationInstance random_instance(std::mt19937_64& rng, int alice_modes, int bob_modes) {
  const int modes = alice_modes + bob_modes;
  auto pool = parity_labels(modes, Parity::Even);
  const double p = random_prior(rng);
  DiscriminationInstance inst{{p, random_state(rng, pool, modes)},
                              {1.0 - p, random_state(rng, pool, modes)},
                              {alice_modes, bob_modes}};
  return inst;
}

DiscriminationInstance random_instance_with_degenerate(std::mt19937_64& rng, int alice_modes,
                                                       int bob_modes) {
  const int modes = alice_modes + bob_modes;
  const auto pool = parity_labels(modes, Parity::Even);
  std::uniform_int_distribution<int> mode_pick(0, 3);  // 0: free, 1/2: confine to a sector

  auto filtered = [&](int choice) {
    if (choice >= 3) choice = 0;
    std::vector<OccupationLabel> subset;
    for (const auto& label : pool) {
      const Parity alice = label.slice(1, alice_modes).parity();
      if (choice == 0 || (choice == 1 && alice == Parity::Even) ||
          (choice == 2 && alice == Parity::Odd))
        subset.push_back(label);
    }
    return subset;
  };

  const double p = random_prior(rng);
  DiscriminationInstance inst{{p, random_state(rng, filtered(mode_pick(rng)), modes)},
                              {1.0 - p, random_state(rng, filtered(mode_pick(rng)), modes)},
                              {alice_modes, bob_modes}};
  return inst;
}

}  // namespace fusd
