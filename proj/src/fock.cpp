#include "fusd/fock.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fusd/tolerances.hpp"

namespace fusd {

Parity opposite(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

OccupationLabel OccupationLabel::from_string(std::string_view s) {
  if (s.empty() || s.size() > 32)
    throw std::invalid_argument("occupation string must have 1..32 modes");
  OccupationLabel label;
  label.modes = static_cast<int>(s.size());
  for (int i = 0; i < label.modes; ++i) {
    if (s[i] == '1')
      label.bits |= (std::uint32_t{1} << i);
    else if (s[i] != '0')
      throw std::invalid_argument("occupation string may contain only '0' and '1'");
  }
  return label;
}

std::string OccupationLabel::to_string() const {
  std::string s(static_cast<std::size_t>(modes), '0');
  for (int i = 0; i < modes; ++i)
    if (bits & (std::uint32_t{1} << i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

Parity OccupationLabel::parity() const {
  return (std::popcount(bits) % 2 == 0) ? Parity::Even : Parity::Odd;
}

OccupationLabel OccupationLabel::slice(int first, int count) const {
  if (first < 1 || count < 0 || first - 1 + count > modes)
    throw std::invalid_argument("label slice out of range");
  OccupationLabel out;
  out.modes = count;
  out.bits = (bits >> (first - 1)) & ((count == 32) ? ~std::uint32_t{0}
                                                    : ((std::uint32_t{1} << count) - 1));
  return out;
}

FermionicVector::FermionicVector(int modes, Parity parity) : modes_(modes), parity_(parity) {
  if (modes < 1 || modes > 32) throw std::invalid_argument("mode count must be in 1..32");
}

FermionicVector::FermionicVector(int modes, Parity parity, AmplitudeMap amplitudes)
    : modes_(modes), parity_(parity), amps_(std::move(amplitudes)) {
  if (modes < 1 || modes > 32) throw std::invalid_argument("mode count must be in 1..32");
  auto report = validate_superselection(modes_, parity_, amps_);
  if (!report.ok) throw std::invalid_argument(report.message);
  // Drop exact zeros so sparsity reflects support.
  for (auto it = amps_.begin(); it != amps_.end();)
    it = (it->second == Amplitude{0.0, 0.0}) ? amps_.erase(it) : std::next(it);
}

FermionicVector FermionicVector::from_amplitudes(
    int modes, const std::vector<std::pair<std::string, Amplitude>>& entries) {
  AmplitudeMap amps;
  for (const auto& [occ, value] : entries) {
    auto label = OccupationLabel::from_string(occ);
    if (label.modes != modes)
      throw std::invalid_argument("occupation string length does not match mode count");
    amps[label] += value;
  }
  Parity parity = Parity::Even;
  for (const auto& [label, value] : amps)
    if (value != Amplitude{0.0, 0.0}) {
      parity = label.parity();
      break;
    }
  return FermionicVector(modes, parity, std::move(amps));
}

Amplitude FermionicVector::amplitude(const OccupationLabel& label) const {
  auto it = amps_.find(label);
  return it == amps_.end() ? Amplitude{0.0, 0.0} : it->second;
}

double FermionicVector::norm_squared() const {
  double total = 0.0;
  for (const auto& [label, value] : amps_) total += std::norm(value);
  return total;
}

double FermionicVector::norm() const { return std::sqrt(norm_squared()); }

bool FermionicVector::is_zero(double floor) const { return norm_squared() <= floor * floor; }

FermionicVector FermionicVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  return scaled(1.0 / n);
}

FermionicVector FermionicVector::scaled(Amplitude factor) const {
  AmplitudeMap amps = amps_;
  for (auto& [label, value] : amps) value *= factor;
  return FermionicVector(modes_, parity_, std::move(amps));
}

FermionicVector operator+(const FermionicVector& a, const FermionicVector& b) {
  if (a.modes_ != b.modes_) throw std::invalid_argument("mode-count mismatch in sum");
  if (a.parity_ != b.parity_)
    throw std::invalid_argument("cannot superpose vectors of different parity");
  FermionicVector::AmplitudeMap amps = a.amps_;
  for (const auto& [label, value] : b.amps_) amps[label] += value;
  return FermionicVector(a.modes_, a.parity_, std::move(amps));
}

SuperselectionReport validate_superselection(int modes, Parity declared,
                                             const FermionicVector::AmplitudeMap& amps) {
  SuperselectionReport report;
  std::ostringstream msg;
  for (const auto& [label, value] : amps) {
    if (label.modes != modes) {
      report.ok = false;
      msg << "label " << label.to_string() << " has wrong mode count; ";
      report.offending.push_back(label);
      continue;
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      report.ok = false;
      msg << "label " << label.to_string() << " carries a non-finite amplitude; ";
      report.offending.push_back(label);
      continue;
    }
    if (value != Amplitude{0.0, 0.0} && label.parity() != declared) {
      report.ok = false;
      msg << "label " << label.to_string() << " violates " << to_string(declared)
          << "-parity superselection; ";
      report.offending.push_back(label);
    }
  }
  report.message = msg.str();
  return report;
}

SuperselectionReport validate_superselection(const FermionicVector& v) {
  return validate_superselection(v.modes(), v.parity(), v.amplitudes());
}

Amplitude inner_product(const FermionicVector& v, const FermionicVector& w) {
  if (v.modes() != w.modes()) throw std::invalid_argument("mode-count mismatch in inner product");
  if (v.parity() != w.parity()) return {0.0, 0.0};
  // Iterate the sparser map.
  const auto& small = v.amplitudes().size() <= w.amplitudes().size() ? v : w;
  const auto& large = (&small == &v) ? w : v;
  Amplitude total{0.0, 0.0};
  for (const auto& [label, value] : small.amplitudes()) {
    auto it = large.amplitudes().find(label);
    if (it == large.amplitudes().end()) continue;
    total += (&small == &v) ? std::conj(value) * it->second : std::conj(it->second) * value;
  }
  return total;
}

}  // namespace fusd
