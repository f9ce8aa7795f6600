#pragma once

// Shared fixtures: reference instances and a 4-mode family with directly
// adjustable sector norms and normalized sector overlaps.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "fusd/sectors.hpp"

namespace fusd::testing {

inline FermionicVector vec(int modes,
                           std::vector<std::pair<std::string, Amplitude>> entries) {
  return FermionicVector::from_amplitudes(modes, entries);
}

inline DiscriminationInstance make_instance(double p, FermionicVector psi,
                                            FermionicVector phi, int alice_modes = 2) {
  const int bob = psi.modes() - alice_modes;
  return DiscriminationInstance{{p, std::move(psi)}, {1.0 - p, std::move(phi)},
                                {alice_modes, bob}};
}

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline DiscriminationInstance ref_i1() {
  return make_instance(0.5, vec(4, {{"0000", kInvSqrt2}, {"1010", kInvSqrt2}}),
                       vec(4, {{"1100", kInvSqrt2}, {"1010", kInvSqrt2}}));
}

inline DiscriminationInstance ref_i2() {
  return make_instance(0.5, vec(4, {{"0000", kInvSqrt2}, {"1010", kInvSqrt2}}),
                       vec(4, {{"0000", kInvSqrt2}, {"1010", -kInvSqrt2}}));
}

inline DiscriminationInstance ref_i4() {
  return make_instance(0.9, vec(4, {{"0000", kInvSqrt2}, {"1010", kInvSqrt2}}),
                       vec(4, {{"1010", 1.0}}));
}

/// 4-mode instance (split 2|2) with prescribed sector structure:
/// psi = w_psi_e|0000> + w_psi_o|1010>, phi spread inside each sector so that
/// the normalized sector overlaps equal c_e and c_o exactly.
inline DiscriminationInstance sector_instance(double p, double w_psi_e, double w_phi_e,
                                              Amplitude c_e, Amplitude c_o) {
  const double w_psi_o = std::sqrt(std::max(0.0, 1.0 - w_psi_e * w_psi_e));
  const double w_phi_o = std::sqrt(std::max(0.0, 1.0 - w_phi_e * w_phi_e));
  const double t_e = std::sqrt(std::max(0.0, 1.0 - std::norm(c_e)));
  const double t_o = std::sqrt(std::max(0.0, 1.0 - std::norm(c_o)));
  auto psi = vec(4, {{"0000", w_psi_e}, {"1010", w_psi_o}});
  auto phi = vec(4, {{"0000", w_phi_e * c_e},
                     {"0011", w_phi_e * t_e},
                     {"1010", w_phi_o * c_o},
                     {"1001", w_phi_o * t_o}});
  return make_instance(p, std::move(psi), std::move(phi));
}

}  // namespace fusd::testing
