#include "fusd/ancilla.hpp"

#include <cmath>
#include <stdexcept>

#include "fusd/tolerances.hpp"

namespace fusd {

void AncillaSpec::validate() const {
  const double na = std::norm(a);
  const double nb = std::norm(b);
  if (std::abs(na + nb - 1.0) > tol::kValidation)
    throw std::invalid_argument("ancilla amplitudes must be normalized");
  if (na <= 0.0 || nb <= 0.0)
    throw std::invalid_argument("both ancilla amplitudes must be nonzero");
}

bool AncillaSpec::maximally_entangled(double tolerance) const {
  return std::abs(std::abs(a) - std::abs(b)) <= tolerance;
}

AncillaSpec AncillaSpec::from_weight_and_phase(double a_squared, double relative_phase) {
  if (a_squared <= 0.0 || a_squared >= 1.0)
    throw std::invalid_argument("ancilla weight must lie strictly between 0 and 1");
  AncillaSpec anc;
  anc.a = std::sqrt(a_squared);
  anc.b = std::polar(std::sqrt(1.0 - a_squared), relative_phase);
  return anc;
}

namespace {

FermionicVector attach_state(const FermionicVector& v, const Bipartition& split,
                             const AncillaSpec& anc) {
  const int n = v.modes();
  const int na = split.alice_modes;
  FermionicVector::AmplitudeMap amps;
  for (const auto& [label, value] : v.amplitudes()) {
    const std::uint32_t alice = label.bits & ((std::uint32_t{1} << na) - 1);
    const std::uint32_t bob = label.bits >> na;
    for (int occ : {0, 1}) {
      OccupationLabel out;
      out.modes = n + 2;
      out.bits = alice | (static_cast<std::uint32_t>(occ) << na) | (bob << (na + 1)) |
                 (static_cast<std::uint32_t>(occ) << (n + 1));
      amps[out] = value * (occ == 0 ? anc.a : anc.b);
    }
  }
  return FermionicVector(n + 2, v.parity(), std::move(amps));
}

}  // namespace

DiscriminationInstance attach(const DiscriminationInstance& inst, const AncillaSpec& anc) {
  inst.validate();
  anc.validate();
  DiscriminationInstance out{
      {inst.psi.prior, attach_state(inst.psi.vector, inst.split, anc)},
      {inst.phi.prior, attach_state(inst.phi.vector, inst.split, anc)},
      {inst.split.alice_modes + 1, inst.split.bob_modes + 1}};
  return out;
}

double phase_obstruction(const AncillaSpec& anc, double delta) {
  const double a2 = std::norm(anc.a);
  const double b2 = std::norm(anc.b);
  return std::abs((a2 * a2 - b2 * b2) * std::sin(delta));
}

AncillaReport verify_ancilla_rescue(const DiscriminationInstance& inst,
                                    const AncillaSpec& anc) {
  AncillaReport report;
  report.before = check_locc_optimal(inst);
  const DiscriminationInstance attached = attach(inst, anc);
  report.after = check_locc_optimal(attached);
  report.maximally_entangled = anc.maximally_entangled(tol::kValidation);
  report.rescue_guaranteed = report.maximally_entangled;

  if (inst.same_global_parity()) {
    const SectorData before = sector_data(inst);
    const SectorData after = sector_data(attached);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Amplitude half_sum = 0.5 * (before.even.s + before.odd.s);

    auto add = [&](std::string name, double residual) {
      report.properties.push_back({std::move(name), residual, residual <= tol::kInternal});
    };
    add("global overlap preserved",
        std::abs(after.global_overlap() - before.global_overlap()));
    add("sector norms 1/sqrt(2)",
        std::max({std::abs(after.even.psi_norm - inv_sqrt2),
                  std::abs(after.even.phi_norm - inv_sqrt2),
                  std::abs(after.odd.psi_norm - inv_sqrt2),
                  std::abs(after.odd.phi_norm - inv_sqrt2)}));
    add("sector probabilities 1/2",
        std::max(std::abs(after.even.pr - 0.5), std::abs(after.odd.pr - 0.5)));
    add("conditional priors preserved",
        std::max({std::abs(after.even.p_cond - inst.psi.prior),
                  std::abs(after.odd.p_cond - inst.psi.prior),
                  std::abs(after.even.q_cond - inst.phi.prior),
                  std::abs(after.odd.q_cond - inst.phi.prior)}));
    add("sector overlaps averaged",
        std::max(std::abs(after.even.s - half_sum), std::abs(after.odd.s - half_sum)));
  }
  return report;
}

}  // namespace fusd
