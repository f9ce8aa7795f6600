#include "fusd/optimality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fusd/tolerances.hpp"

namespace fusd {

namespace {

double angular_distance_to_zero(double angle) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r < 0.0) r += two_pi;
  return std::min(r, two_pi - r);
}

bool slot_has_both(const SectorSlot& slot) {
  return !slot.degenerate && slot.p_cond > tol::kInternal && slot.q_cond > tol::kInternal;
}

bool slot_is_ternary(const SectorSlot& slot) {
  return slot.overlap <= xi(slot.p_cond, slot.q_cond);
}

}  // namespace

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::DifferentParity: return "different-parity";
    case CaseTag::SameSectorOnly: return "same-sector-only";
    case CaseTag::PerfectOrtho: return "perfectly-orthogonal";
    case CaseTag::Ternary: return "ternary";
    case CaseTag::BinaryMixed: return "binary-mixed";
    case CaseTag::BinaryDegenerate: return "binary-degenerate";
    case CaseTag::BinaryBoth: return "binary-both";
    case CaseTag::PhaseFail: return "phase-fail";
    case CaseTag::ConditionFail: return "condition-fail";
  }
  return "?";
}

bool phase_condition(const SectorData& sd) {
  if (std::abs(sd.even.s) <= tol::kNullOverlap || std::abs(sd.odd.s) <= tol::kNullOverlap)
    return true;  // vacuous: only one sector carries a scalar product
  return angular_distance_to_zero(*sd.delta) <= tol::kAngle;
}

bool check_ternary(const SectorData& sd, double p, double q) {
  if (!phase_condition(sd)) return false;
  for (const SectorSlot* slot : {&sd.even, &sd.odd}) {
    if (!slot_has_both(*slot)) continue;  // vacuous
    if (slot->overlap > xi(slot->p_cond, slot->q_cond) + tol::kCondition) return false;
  }
  return true;
}

double binary_sector_excess(double p, double q, double weight_psi, double weight_phi,
                            double overlap, double p_cond, double q_cond) {
  if (p_cond <= 0.0 || q_cond <= 0.0)
    throw std::domain_error("binary_sector_excess needs both hypotheses in the sector");
  const double scale = std::sqrt(std::max(weight_psi, weight_phi) / std::max(p, q));
  return scale * (overlap - xi(p_cond, q_cond));
}

ConditionResult check_binary_mixed(const SectorData& sd, double p, double q) {
  if (!slot_has_both(sd.even) || !slot_has_both(sd.odd))
    throw std::logic_error("mixed-regime check requires both hypotheses in both sectors");
  const bool even_ternary = slot_is_ternary(sd.even);
  const bool odd_ternary = slot_is_ternary(sd.odd);
  if (even_ternary == odd_ternary)
    throw std::logic_error("mixed-regime check requires exactly one ternary sector");

  const SectorSlot& binary = even_ternary ? sd.odd : sd.even;
  const double excess = binary_sector_excess(
      p, q, p * binary.psi_norm * binary.psi_norm, q * binary.phi_norm * binary.phi_norm,
      binary.overlap, binary.p_cond, binary.q_cond);

  ConditionResult result;
  result.residual = (std::abs(sd.global_overlap()) - xi(p, q)) - excess;
  result.ok = phase_condition(sd) && std::abs(result.residual) <= tol::kCondition;
  return result;
}

DegenerateResult check_binary_degenerate(const SectorData& sd, double p, double q) {
  DegenerateResult result;
  const SectorSlot& e = sd.even;
  const SectorSlot& o = sd.odd;
  if (e.degenerate || o.degenerate)
    throw std::logic_error("degenerate-regime check requires both sector weights positive");

  // Conditions 1 and 2 need no equality residual.
  if (e.p_cond >= e.q_cond && o.p_cond >= o.q_cond) {
    result.ok = true;
    result.case_index = 1;
    return result;
  }
  if (e.q_cond >= e.p_cond && o.q_cond >= o.p_cond) {
    result.ok = true;
    result.case_index = 2;
    return result;
  }

  // Exactly one conditional prior vanishes; the other sector must hit the
  // equality overlap.
  auto equality = [&](const SectorSlot& other, double target, int index) {
    result.case_index = index;
    result.residual = other.overlap - target;
    result.ok = std::abs(result.residual) <= tol::kCondition;
  };
  if (e.q_cond <= tol::kInternal && o.p_cond < o.q_cond)
    equality(o, std::min(1.0, p / q), 3);
  else if (o.q_cond <= tol::kInternal && e.p_cond < e.q_cond)
    equality(e, std::min(1.0, p / q), 3);
  else if (e.p_cond <= tol::kInternal && o.q_cond < o.p_cond)
    equality(o, std::min(1.0, q / p), 4);
  else if (o.p_cond <= tol::kInternal && e.q_cond < e.p_cond)
    equality(e, std::min(1.0, q / p), 4);
  return result;
}

double sector_imbalance(bool positive_part, double pr, double p_cond, double q_cond,
                        double overlap, double p, double q) {
  const double diff = positive_part ? (p_cond - q_cond) : (q_cond - p_cond);
  const double part = std::max(0.0, diff);
  double radicand = part * (1.0 - overlap * overlap);
  if (radicand < -tol::kInternal)
    throw std::domain_error("negative radicand in sector imbalance");
  radicand = std::max(0.0, radicand);
  return std::sqrt(pr / std::max(p, q)) * std::sqrt(radicand);
}

ConditionResult check_binary_both(const SectorData& sd, double p, double q) {
  if (p == q) throw std::logic_error("both-binary regime requires unequal priors");
  const SectorSlot& e = sd.even;
  const SectorSlot& o = sd.odd;
  const bool psi_favored = p > q;

  // Cross-norm overlap balance; roles of psi and phi swap with the prior
  // ordering, and the slack uses the negative (p > q) or positive (p < q)
  // parts of the conditional-prior differences.
  double lhs;
  if (psi_favored)
    lhs = e.psi_norm * o.phi_norm * e.overlap - o.psi_norm * e.phi_norm * o.overlap;
  else
    lhs = o.psi_norm * e.phi_norm * e.overlap - e.psi_norm * o.phi_norm * o.overlap;
  const double slack =
      sector_imbalance(!psi_favored, e.pr, e.p_cond, e.q_cond, e.overlap, p, q) +
      sector_imbalance(!psi_favored, o.pr, o.p_cond, o.q_cond, o.overlap, p, q);

  ConditionResult result;
  result.residual = std::abs(lhs) - slack;  // either sign branch may match
  result.ok = phase_condition(sd) && std::abs(result.residual) <= tol::kCondition;
  return result;
}

QuadraticCoefficients mixed_regime_coefficients(const SectorData& sd, double p, double q,
                                                Sector ternary_sector) {
  const SectorSlot& t = sd.slot(ternary_sector);
  const SectorSlot& b = sd.slot(ternary_sector == Sector::Even ? Sector::Odd : Sector::Even);
  const double pmax = std::max(p, q);
  const double nt = t.psi_norm * t.phi_norm;  // product of sector norms
  const double nb = b.psi_norm * b.phi_norm;
  const double mb = std::max(p * b.psi_norm * b.psi_norm, q * b.phi_norm * b.phi_norm);

  QuadraticCoefficients k;
  const double quad_t = -pmax * nt * nt;
  const double quad_b = mb - pmax * nb * nb;
  const double lin_t = 2.0 * std::sqrt(p * q) * nt;
  k.f = -2.0 * pmax * nt * nb;
  k.g = pmax - mb - t.pr;
  if (ternary_sector == Sector::Even) {
    k.a = quad_t;
    k.b = quad_b;
    k.c = lin_t;
    k.d = 0.0;
  } else {
    k.b = quad_t;
    k.a = quad_b;
    k.d = lin_t;
    k.c = 0.0;
  }
  return k;
}

QuadraticCoefficients both_binary_coefficients(const SectorData& sd, double p, double q) {
  const double pmax = std::max(p, q);
  auto quad = [&](const SectorSlot& slot) {
    const double n = slot.psi_norm * slot.phi_norm;
    return std::max(p * slot.psi_norm * slot.psi_norm, q * slot.phi_norm * slot.phi_norm) -
           pmax * n * n;
  };
  QuadraticCoefficients k;
  k.a = quad(sd.even);
  k.b = quad(sd.odd);
  k.f = -2.0 * pmax * sd.even.psi_norm * sd.even.phi_norm * sd.odd.psi_norm * sd.odd.phi_norm;
  k.g = pmax -
        std::max(p * sd.even.psi_norm * sd.even.psi_norm, q * sd.even.phi_norm * sd.even.phi_norm) -
        std::max(p * sd.odd.psi_norm * sd.odd.psi_norm, q * sd.odd.phi_norm * sd.odd.phi_norm);
  return k;
}

double quadratic_condition(const QuadraticCoefficients& k, double x, double y) {
  return k.a * x * x + k.b * y * y + k.c * x + k.d * y + k.f * x * y + k.g;
}

namespace {

QuadraticRoots solve_quadratic(double lead, double lin, double constant) {
  // lead z^2 + lin z + constant = 0
  QuadraticRoots roots;
  double disc = lin * lin - 4.0 * lead * constant;
  if (disc < -tol::kInternal) return roots;
  disc = std::max(0.0, disc);
  const double root = std::sqrt(disc);
  roots.plus = (-lin + root) / (2.0 * lead);
  roots.minus = (-lin - root) / (2.0 * lead);
  return roots;
}

}  // namespace

QuadraticRoots quadratic_solve_x(const QuadraticCoefficients& k, double y) {
  if (k.a == 0.0) throw std::domain_error("x-form solve requires a != 0");
  return solve_quadratic(k.a, k.c + k.f * y, k.b * y * y + k.d * y + k.g);
}

QuadraticRoots quadratic_solve_y(const QuadraticCoefficients& k, double x) {
  if (k.b == 0.0) throw std::domain_error("y-form solve requires b != 0");
  return solve_quadratic(k.b, k.d + k.f * x, k.a * x * x + k.c * x + k.g);
}

OptimalityVerdict check_locc_optimal(const DiscriminationInstance& inst) {
  inst.validate();
  OptimalityVerdict verdict;

  if (!inst.same_global_parity()) {
    verdict.case_tag = CaseTag::DifferentParity;
    verdict.p_s = verdict.p_s_sep = 1.0;
    verdict.locc_optimal = verdict.checker_result = true;
    return verdict;
  }

  const double p = inst.psi.prior;
  const double q = inst.phi.prior;
  const SectorData sd = sector_data(inst);
  const double s_abs = std::abs(sd.global_overlap());

  verdict.p_s = optimal_success_unconstrained(p, q, s_abs);
  verdict.p_s_sep = optimal_success_sep(sd).total;
  verdict.gap = verdict.p_s - verdict.p_s_sep;
  verdict.locc_optimal = verdict.gap <= tol::kGap;

  if (p <= 0.0 || q <= 0.0) {
    // Only one hypothesis exists; every protocol that always announces it wins.
    verdict.case_tag = CaseTag::SameSectorOnly;
    verdict.detail = "zero prior: single-hypothesis problem";
    verdict.checker_result = true;
    return verdict;
  }

  if (sd.even.degenerate || sd.odd.degenerate) {
    // Both states live in one sector: the plain two-state problem, which
    // separable protocols solve optimally.
    verdict.case_tag = CaseTag::SameSectorOnly;
    verdict.checker_result = true;
    verdict.condition_mismatch = !verdict.locc_optimal;
    return verdict;
  }

  const double threshold = xi(p, q);
  if (s_abs <= threshold) {
    verdict.checker_result = check_ternary(sd, p, q);
    if (verdict.checker_result) {
      const bool all_null = s_abs <= tol::kNullOverlap &&
                            sd.even.overlap <= tol::kNullOverlap &&
                            sd.odd.overlap <= tol::kNullOverlap;
      verdict.case_tag = all_null ? CaseTag::PerfectOrtho : CaseTag::Ternary;
    } else {
      verdict.case_tag = phase_condition(sd) ? CaseTag::ConditionFail : CaseTag::PhaseFail;
      verdict.detail = "ternary regime";
    }
    verdict.condition_mismatch = verdict.checker_result != verdict.locc_optimal;
    return verdict;
  }

  // Binary regime. With both sector weights positive, at most one of the four
  // conditional priors can vanish here.
  const bool degenerate_conditional =
      sd.even.p_cond <= tol::kInternal || sd.even.q_cond <= tol::kInternal ||
      sd.odd.p_cond <= tol::kInternal || sd.odd.q_cond <= tol::kInternal;

  if (degenerate_conditional) {
    const DegenerateResult result = check_binary_degenerate(sd, p, q);
    verdict.checker_result = result.ok;
    verdict.degenerate_case = result.case_index;
    verdict.case_tag = result.ok ? CaseTag::BinaryDegenerate : CaseTag::ConditionFail;
    if (!result.ok) verdict.detail = "degenerate binary regime";
  } else if (!phase_condition(sd)) {
    verdict.checker_result = false;
    verdict.case_tag = CaseTag::PhaseFail;
  } else {
    const bool even_ternary = slot_is_ternary(sd.even);
    const bool odd_ternary = slot_is_ternary(sd.odd);
    if (even_ternary && odd_ternary) {
      // Contradicts the sector-threshold bound; can only happen in the float
      // noise around a boundary. Treat the slacker sector as ternary.
      const double even_margin = xi(sd.even.p_cond, sd.even.q_cond) - sd.even.overlap;
      const double odd_margin = xi(sd.odd.p_cond, sd.odd.q_cond) - sd.odd.overlap;
      SectorData nudged = sd;
      SectorSlot& binary_slot = even_margin >= odd_margin ? nudged.odd : nudged.even;
      binary_slot.overlap = xi(binary_slot.p_cond, binary_slot.q_cond) +
                            std::max(0.0, -std::min(even_margin, odd_margin)) + tol::kInternal;
      const ConditionResult result = check_binary_mixed(nudged, p, q);
      verdict.checker_result = result.ok;
      verdict.case_tag = result.ok ? CaseTag::BinaryMixed : CaseTag::ConditionFail;
      verdict.detail = "sector classification at boundary";
    } else if (even_ternary != odd_ternary) {
      const ConditionResult result = check_binary_mixed(sd, p, q);
      verdict.checker_result = result.ok;
      verdict.case_tag = result.ok ? CaseTag::BinaryMixed : CaseTag::ConditionFail;
      if (!result.ok) verdict.detail = "mixed binary regime";
    } else {
      const ConditionResult result = check_binary_both(sd, p, q);
      verdict.checker_result = result.ok;
      verdict.case_tag = result.ok ? CaseTag::BinaryBoth : CaseTag::ConditionFail;
      if (!result.ok) verdict.detail = "both-binary regime";
    }
  }
  verdict.condition_mismatch = verdict.checker_result != verdict.locc_optimal;
  return verdict;
}

}  // namespace fusd
