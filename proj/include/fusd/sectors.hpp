#pragma once

#include <optional>
#include <utility>

#include "fusd/fock.hpp"

namespace fusd {

struct Bipartition {
  int alice_modes = 0;
  int bob_modes = 0;

  int total() const { return alice_modes + bob_modes; }
  void validate(int modes) const;  // throws std::invalid_argument
};

struct WeightedState {
  double prior = 0.0;
  FermionicVector vector;
};

/// Two prior-weighted pure states to be told apart on a common bipartition.
struct DiscriminationInstance {
  WeightedState psi;
  WeightedState phi;
  Bipartition split;

  void validate() const;  // throws std::invalid_argument / std::domain_error
  bool same_global_parity() const { return psi.vector.parity() == phi.vector.parity(); }
};

enum class Sector { Even, Odd };

/// Per-sector bookkeeping for one of the two local-parity blocks.
struct SectorSlot {
  FermionicVector psi_part;       // unnormalized component of psi
  FermionicVector phi_part;       // unnormalized component of phi
  double psi_norm = 0.0;          // ||psi_i||
  double phi_norm = 0.0;          // ||phi_i||
  Amplitude s{0.0, 0.0};          // <psi_i|phi_i>
  double pr = 0.0;                // Pr(i) = p||psi_i||^2 + q||phi_i||^2
  bool degenerate = true;         // pr == 0; conditional quantities undefined
  double p_cond = 0.0;            // p_i, defined when !degenerate
  double q_cond = 0.0;            // q_i
  double overlap = 0.0;           // |<psi~_i|phi~_i>|, 0 when either norm vanishes

  /// True when exactly one hypothesis has support in this sector.
  bool single_hypothesis(double floor = 0.0) const {
    return !degenerate && (p_cond <= floor || q_cond <= floor);
  }
};

struct SectorData {
  SectorSlot even;
  SectorSlot odd;
  /// Phase gap between <psi_E|phi_E> and <psi_O|phi_O>; defined only when
  /// both scalar products are non-null.
  std::optional<double> delta;

  const SectorSlot& slot(Sector s) const { return s == Sector::Even ? even : odd; }
  Amplitude global_overlap() const { return even.s + odd.s; }
};

/// Splits v into its two local-parity blocks. For an even-parity v these are
/// (Alice even, Bob even) and (Alice odd, Bob odd); for an odd-parity v the
/// blocks are (Alice even, Bob odd) and (Alice odd, Bob even), keyed by
/// Alice's parity so the same two-block machinery applies downstream.
std::pair<FermionicVector, FermionicVector> decompose(const FermionicVector& v,
                                                      const Bipartition& split);

/// Full sector bookkeeping. Requires both vectors to share a global parity;
/// different-parity pairs are perfectly discriminable and never reach here.
SectorData sector_data(const DiscriminationInstance& inst);

}  // namespace fusd
