#include "fusd/discrimination.hpp"

#include <cmath>
#include <stdexcept>

#include "fusd/tolerances.hpp"

namespace fusd {

std::string to_string(StrategyClass c) {
  switch (c) {
    case StrategyClass::Ternary: return "ternary";
    case StrategyClass::BinaryKeepPsi: return "binary-keep-psi";
    case StrategyClass::BinaryKeepPhi: return "binary-keep-phi";
    case StrategyClass::SingleHypothesis: return "single-hypothesis";
    case StrategyClass::PerfectlyOrthogonal: return "perfectly-orthogonal";
  }
  return "?";
}

double xi(double p, double q) {
  if (p <= 0.0 || q <= 0.0) throw std::domain_error("xi requires strictly positive priors");
  return std::sqrt(std::min(p, q) / std::max(p, q));
}

StrategyClass classify(double p, double q, double s_abs) {
  if (s_abs < 0.0 || s_abs > 1.0 + tol::kInternal)
    throw std::invalid_argument("overlap magnitude must lie in [0, 1]");
  if (p <= 0.0 || q <= 0.0) return StrategyClass::SingleHypothesis;
  if (s_abs == 0.0) return StrategyClass::PerfectlyOrthogonal;
  if (s_abs <= xi(p, q)) return StrategyClass::Ternary;
  return p > q ? StrategyClass::BinaryKeepPsi : StrategyClass::BinaryKeepPhi;
}

double optimal_success_unconstrained(double p, double q, double s_abs) {
  s_abs = std::clamp(s_abs, 0.0, 1.0);
  if (p <= 0.0 || q <= 0.0) return 1.0;
  if (s_abs <= xi(p, q)) return 1.0 - 2.0 * std::sqrt(p * q) * s_abs;
  return std::max(p, q) * (1.0 - s_abs * s_abs);
}

SepBreakdown optimal_success_sep(const DiscriminationInstance& inst) {
  inst.validate();
  if (!inst.same_global_parity()) {
    SepBreakdown out;
    out.total = 1.0;
    return out;
  }
  return optimal_success_sep(sector_data(inst));
}

SepBreakdown optimal_success_sep(const SectorData& sd) {
  SepBreakdown out;
  auto sector_success = [](const SectorSlot& slot) {
    if (slot.degenerate) return 0.0;  // weight zero anyway
    if (slot.single_hypothesis()) return 1.0;
    return optimal_success_unconstrained(slot.p_cond, slot.q_cond, slot.overlap);
  };
  out.even_success = sector_success(sd.even);
  out.odd_success = sector_success(sd.odd);
  out.even_weight = sd.even.pr;
  out.odd_weight = sd.odd.pr;
  out.total = out.even_weight * out.even_success + out.odd_weight * out.odd_success;
  return out;
}

namespace {

UsdPovm all_inconclusive(std::vector<FermionicVector> basis) {
  UsdPovm povm;
  const auto dim = static_cast<Eigen::Index>(basis.size());
  povm.basis = std::move(basis);
  povm.pi_psi = Eigen::MatrixXcd::Zero(dim, dim);
  povm.pi_phi = Eigen::MatrixXcd::Zero(dim, dim);
  povm.pi_inconclusive = Eigen::MatrixXcd::Identity(dim, dim);
  return povm;
}

// Appends the effects of `block` (defined on its own basis) to `povm` as a
// new diagonal block.
void append_block(UsdPovm& povm, const UsdPovm& block) {
  const auto old_dim = povm.dim();
  const auto add = block.dim();
  auto grow = [&](Eigen::MatrixXcd& m, const Eigen::MatrixXcd& sub) {
    m.conservativeResize(old_dim + add, old_dim + add);
    m.block(0, old_dim, old_dim, add).setZero();
    m.block(old_dim, 0, add, old_dim).setZero();
    m.block(old_dim, old_dim, add, add) = sub;
  };
  grow(povm.pi_psi, block.pi_psi);
  grow(povm.pi_phi, block.pi_phi);
  grow(povm.pi_inconclusive, block.pi_inconclusive);
  povm.basis.insert(povm.basis.end(), block.basis.begin(), block.basis.end());
}

}  // namespace

UsdPovm build_optimal_povm(double p, double q, const FermionicVector& psi,
                           const FermionicVector& phi) {
  if (p <= 0.0 || q <= 0.0) throw std::domain_error("priors must be strictly positive");
  if (std::abs(psi.norm() - 1.0) > tol::kValidation ||
      std::abs(phi.norm() - 1.0) > tol::kValidation)
    throw std::invalid_argument("POVM construction expects normalized vectors");

  const Amplitude s = inner_product(psi, phi);
  const double s_abs = std::abs(s);
  const double t2 = std::max(0.0, 1.0 - s_abs * s_abs);
  const double t = std::sqrt(t2);

  if (t <= tol::kNullOverlap) {
    // Parallel vectors: nothing can be concluded without error.
    return all_inconclusive({psi});
  }

  // Orthonormal basis {e1 = psi, e2}; on it psi = (1,0), phi = (s,t).
  const FermionicVector e2 = (phi + psi.scaled(-s)).scaled(1.0 / t);

  Eigen::Vector2cd perp_phi;  // unit vector orthogonal to phi in the span
  perp_phi << t, -std::conj(s);
  Eigen::Vector2cd perp_psi;
  perp_psi << 0.0, 1.0;

  double alpha = 0.0, beta = 0.0;
  switch (classify(p, q, s_abs)) {
    case StrategyClass::PerfectlyOrthogonal:
      alpha = beta = 1.0;
      break;
    case StrategyClass::Ternary:
      alpha = (1.0 - std::sqrt(q / p) * s_abs) / t2;
      beta = (1.0 - std::sqrt(p / q) * s_abs) / t2;
      break;
    case StrategyClass::BinaryKeepPsi:
      alpha = 1.0;
      break;
    case StrategyClass::BinaryKeepPhi:
      beta = 1.0;
      break;
    case StrategyClass::SingleHypothesis:
      throw std::logic_error("unreachable: priors checked above");
  }

  UsdPovm povm;
  povm.basis = {psi, e2};
  povm.pi_psi = alpha * perp_phi * perp_phi.adjoint();
  povm.pi_phi = beta * perp_psi * perp_psi.adjoint();
  povm.pi_inconclusive = Eigen::Matrix2cd::Identity() - povm.pi_psi - povm.pi_phi;
  return povm;
}

UsdPovm build_sep_povm(const DiscriminationInstance& inst) {
  inst.validate();

  if (!inst.same_global_parity()) {
    // Different global parities: the parity projectors discriminate perfectly.
    UsdPovm povm;
    povm.basis = {inst.psi.vector, inst.phi.vector};
    povm.pi_psi = Eigen::Matrix2cd::Zero();
    povm.pi_psi(0, 0) = 1.0;
    povm.pi_phi = Eigen::Matrix2cd::Zero();
    povm.pi_phi(1, 1) = 1.0;
    povm.pi_inconclusive = Eigen::Matrix2cd::Zero();
    return povm;
  }

  const SectorData sd = sector_data(inst);
  UsdPovm povm;
  povm.pi_psi.resize(0, 0);
  povm.pi_phi.resize(0, 0);
  povm.pi_inconclusive.resize(0, 0);

  for (Sector sector : {Sector::Even, Sector::Odd}) {
    const SectorSlot& slot = sd.slot(sector);
    if (slot.degenerate) continue;
    UsdPovm block;
    if (slot.single_hypothesis()) {
      // Announce the only state that lives here.
      const bool psi_present = slot.p_cond > 0.0;
      const FermionicVector dir =
          (psi_present ? slot.psi_part : slot.phi_part).normalized();
      block.basis = {dir};
      block.pi_psi = Eigen::MatrixXcd::Zero(1, 1);
      block.pi_phi = Eigen::MatrixXcd::Zero(1, 1);
      (psi_present ? block.pi_psi : block.pi_phi)(0, 0) = 1.0;
      block.pi_inconclusive = Eigen::MatrixXcd::Zero(1, 1);
    } else {
      block = build_optimal_povm(slot.p_cond, slot.q_cond, slot.psi_part.normalized(),
                                 slot.phi_part.normalized());
    }
    append_block(povm, block);
  }
  return povm;
}

Eigen::VectorXcd expand_on_basis(const UsdPovm& povm, const FermionicVector& state) {
  Eigen::VectorXcd coeffs(povm.dim());
  for (Eigen::Index k = 0; k < povm.dim(); ++k)
    coeffs(k) = inner_product(povm.basis[static_cast<std::size_t>(k)], state);
  return coeffs;
}

double povm_success(const UsdPovm& povm, const DiscriminationInstance& inst) {
  const Eigen::MatrixXcd conclusive = povm.pi_psi + povm.pi_phi;
  const Eigen::VectorXcd cpsi = expand_on_basis(povm, inst.psi.vector);
  const Eigen::VectorXcd cphi = expand_on_basis(povm, inst.phi.vector);
  const double from_psi = (cpsi.adjoint() * conclusive * cpsi).value().real();
  const double from_phi = (cphi.adjoint() * conclusive * cphi).value().real();
  return inst.psi.prior * from_psi + inst.phi.prior * from_phi;
}

PovmCheck check_povm(const UsdPovm& povm, const FermionicVector& psi,
                     const FermionicVector& phi) {
  PovmCheck check;
  double min_eig = 0.0;
  for (const auto* effect : {&povm.pi_psi, &povm.pi_phi, &povm.pi_inconclusive}) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(*effect);
    if (effect->rows() > 0) min_eig = std::min(min_eig, solver.eigenvalues().minCoeff());
  }
  check.min_eigenvalue = min_eig;
  check.positive = min_eig >= -tol::kValidation;

  const Eigen::MatrixXcd sum = povm.pi_psi + povm.pi_phi + povm.pi_inconclusive;
  check.complete =
      (sum - Eigen::MatrixXcd::Identity(povm.dim(), povm.dim())).norm() <= tol::kValidation;

  const Eigen::VectorXcd cpsi = expand_on_basis(povm, psi);
  const Eigen::VectorXcd cphi = expand_on_basis(povm, phi);
  const double psi_as_phi = (cpsi.adjoint() * povm.pi_phi * cpsi).value().real();
  const double phi_as_psi = (cphi.adjoint() * povm.pi_psi * cphi).value().real();
  check.cross_error = std::max(psi_as_phi, phi_as_psi);
  check.zero_error = check.cross_error <= tol::kInternal;
  return check;
}

}  // namespace fusd
