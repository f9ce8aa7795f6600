#include "fusd/sectors.hpp"

#include <cmath>
#include <stdexcept>

#include "fusd/tolerances.hpp"

namespace fusd {

void Bipartition::validate(int modes) const {
  if (alice_modes < 1 || bob_modes < 1)
    throw std::invalid_argument("both parties need at least one mode");
  if (total() != modes)
    throw std::invalid_argument("bipartition does not cover the declared mode count");
}

void DiscriminationInstance::validate() const {
  if (psi.vector.modes() != phi.vector.modes())
    throw std::invalid_argument("states have different mode counts");
  split.validate(psi.vector.modes());
  if (psi.prior < 0.0 || phi.prior < 0.0)
    throw std::invalid_argument("priors must be nonnegative");
  if (std::abs(psi.prior + phi.prior - 1.0) > tol::kValidation)
    throw std::invalid_argument("priors must sum to 1");
  if (std::abs(psi.vector.norm() - 1.0) > tol::kValidation ||
      std::abs(phi.vector.norm() - 1.0) > tol::kValidation)
    throw std::domain_error("state vectors must be normalized");
}

std::pair<FermionicVector, FermionicVector> decompose(const FermionicVector& v,
                                                      const Bipartition& split) {
  split.validate(v.modes());
  FermionicVector::AmplitudeMap even_amps, odd_amps;
  for (const auto& [label, value] : v.amplitudes()) {
    const Parity alice = label.slice(1, split.alice_modes).parity();
    (alice == Parity::Even ? even_amps : odd_amps)[label] = value;
  }
  return {FermionicVector(v.modes(), v.parity(), std::move(even_amps)),
          FermionicVector(v.modes(), v.parity(), std::move(odd_amps))};
}

namespace {

SectorSlot make_slot(FermionicVector psi_part, FermionicVector phi_part, double p, double q) {
  SectorSlot slot{std::move(psi_part), std::move(phi_part)};
  slot.psi_norm = slot.psi_part.norm();
  slot.phi_norm = slot.phi_part.norm();
  slot.s = inner_product(slot.psi_part, slot.phi_part);
  slot.pr = p * slot.psi_norm * slot.psi_norm + q * slot.phi_norm * slot.phi_norm;
  slot.degenerate = slot.pr <= tol::kInternal;
  if (!slot.degenerate) {
    slot.p_cond = p * slot.psi_norm * slot.psi_norm / slot.pr;
    slot.q_cond = q * slot.phi_norm * slot.phi_norm / slot.pr;
  }
  if (slot.psi_norm > 0.0 && slot.phi_norm > 0.0)
    slot.overlap = std::abs(slot.s) / (slot.psi_norm * slot.phi_norm);
  return slot;
}

}  // namespace

SectorData sector_data(const DiscriminationInstance& inst) {
  inst.validate();
  if (!inst.same_global_parity())
    throw std::invalid_argument(
        "states of different global parity are perfectly discriminable; no sector data");

  auto [psi_e, psi_o] = decompose(inst.psi.vector, inst.split);
  auto [phi_e, phi_o] = decompose(inst.phi.vector, inst.split);

  SectorData sd{make_slot(std::move(psi_e), std::move(phi_e), inst.psi.prior, inst.phi.prior),
                make_slot(std::move(psi_o), std::move(phi_o), inst.psi.prior, inst.phi.prior),
                std::nullopt};
  if (std::abs(sd.even.s) > tol::kNullOverlap && std::abs(sd.odd.s) > tol::kNullOverlap)
    sd.delta = std::arg(sd.even.s) - std::arg(sd.odd.s);
  return sd;
}

}  // namespace fusd
