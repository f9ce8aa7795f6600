#pragma once

#include <string>
#include <vector>

#include "fusd/optimality.hpp"
#include "fusd/sectors.hpp"

namespace fusd {

/// Two-mode shared ancilla a|00> + b|11>, one mode per party.
struct AncillaSpec {
  Amplitude a{0.0, 0.0};
  Amplitude b{0.0, 0.0};

  void validate() const;  // |a|^2 + |b|^2 = 1, both nonzero
  bool maximally_entangled(double tolerance) const;

  static AncillaSpec from_weight_and_phase(double a_squared, double relative_phase);
};

/// Tensor the shared ancilla onto both states: Alice's ancilla mode is
/// appended after her original modes, Bob's after his. Priors are unchanged.
DiscriminationInstance attach(const DiscriminationInstance& inst, const AncillaSpec& anc);

/// Magnitude of the residual that blocks the phase condition after attaching
/// the ancilla: |(|a|^4 - |b|^4) sin(delta)|. Vanishes for every delta iff
/// the ancilla is maximally entangled.
double phase_obstruction(const AncillaSpec& anc, double delta);

struct AncillaReport {
  struct Property {
    std::string name;
    double residual = 0.0;
    bool holds = false;
  };
  std::vector<Property> properties;  // the five structural properties
  OptimalityVerdict before;
  OptimalityVerdict after;
  bool maximally_entangled = false;
  bool rescue_guaranteed = false;  // maximally entangled ==> gap' must close
};

/// Evaluates the ancilla-rescue structure: the five properties of the
/// attached states (each with its residual), the optimality verdicts before
/// and after attaching, and whether the guaranteed rescue applies.
AncillaReport verify_ancilla_rescue(const DiscriminationInstance& inst,
                                    const AncillaSpec& anc);

}  // namespace fusd
