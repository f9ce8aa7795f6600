#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fusd {

using Amplitude = std::complex<double>;

enum class Parity { Even, Odd };

Parity opposite(Parity p);
std::string to_string(Parity p);

/// Occupation-number basis label for N modes. Mode i (1-based) occupies bit
/// i-1; the string form lists modes left to right, mode 1 first.
struct OccupationLabel {
  int modes = 0;
  std::uint32_t bits = 0;

  static OccupationLabel from_string(std::string_view s);
  std::string to_string() const;

  Parity parity() const;

  /// Sub-label made of modes [first, first+count], 1-based, inclusive start.
  OccupationLabel slice(int first, int count) const;

  friend auto operator<=>(const OccupationLabel&, const OccupationLabel&) = default;
};

/// Sparse vector over occupation labels of a fixed mode count, restricted to
/// a single global parity sector (superselection).
class FermionicVector {
 public:
  using AmplitudeMap = std::map<OccupationLabel, Amplitude>;

  /// Zero vector of the given parity sector.
  FermionicVector(int modes, Parity parity);

  /// Throws std::invalid_argument on mixed parity or malformed labels.
  FermionicVector(int modes, Parity parity, AmplitudeMap amplitudes);

  /// Parity inferred from the first nonzero label.
  static FermionicVector from_amplitudes(
      int modes, const std::vector<std::pair<std::string, Amplitude>>& entries);

  int modes() const { return modes_; }
  Parity parity() const { return parity_; }
  const AmplitudeMap& amplitudes() const { return amps_; }

  Amplitude amplitude(const OccupationLabel& label) const;
  double norm_squared() const;
  double norm() const;
  bool is_zero(double floor = 0.0) const;

  FermionicVector normalized() const;  // throws std::domain_error on zero vector
  FermionicVector scaled(Amplitude factor) const;

  friend FermionicVector operator+(const FermionicVector& a, const FermionicVector& b);

 private:
  int modes_;
  Parity parity_;
  AmplitudeMap amps_;
};

struct SuperselectionReport {
  bool ok = true;
  std::vector<OccupationLabel> offending;  // labels whose parity disagrees
  std::string message;
};

/// Checks that every stored label matches the declared parity and mode count.
SuperselectionReport validate_superselection(int modes, Parity declared,
                                             const FermionicVector::AmplitudeMap& amps);
SuperselectionReport validate_superselection(const FermionicVector& v);

/// <v|w>. Exactly zero when the parities differ; throws on mode-count mismatch.
Amplitude inner_product(const FermionicVector& v, const FermionicVector& w);

}  // namespace fusd
