#include <doctest.h>

#include <complex>
#include <random>

#include "fusd/fock.hpp"
#include "helpers.hpp"

using namespace fusd;
using fusd::testing::vec;

TEST_CASE("label parity") {
  CHECK(OccupationLabel::from_string("0000").parity() == Parity::Even);
  CHECK(OccupationLabel::from_string("1010").parity() == Parity::Even);
  CHECK(OccupationLabel::from_string("1000").parity() == Parity::Odd);
}

TEST_CASE("label string round trip and slicing") {
  const auto label = OccupationLabel::from_string("1100");
  CHECK(label.to_string() == "1100");
  CHECK(label.slice(1, 2).to_string() == "11");
  CHECK(label.slice(3, 2).to_string() == "00");
  CHECK(label.slice(1, 2).parity() == Parity::Even);
  CHECK_THROWS_AS(OccupationLabel::from_string("10x0"), std::invalid_argument);
  CHECK_THROWS_AS(OccupationLabel::from_string(""), std::invalid_argument);
}

TEST_CASE("superselection validation") {
  CHECK(validate_superselection(vec(4, {{"0000", 1.0}})).ok);
  CHECK(validate_superselection(
            vec(4, {{"0000", testing::kInvSqrt2}, {"1010", testing::kInvSqrt2}}))
            .ok);

  FermionicVector::AmplitudeMap mixed{
      {OccupationLabel::from_string("0000"), testing::kInvSqrt2},
      {OccupationLabel::from_string("1000"), testing::kInvSqrt2}};
  const auto report = validate_superselection(4, Parity::Even, mixed);
  CHECK_FALSE(report.ok);
  REQUIRE(report.offending.size() == 1);
  CHECK(report.offending.front().to_string() == "1000");

  CHECK_THROWS_AS(FermionicVector(4, Parity::Even, mixed), std::invalid_argument);
}

TEST_CASE("inner product basics") {
  const auto vac = vec(4, {{"0000", 1.0}});
  const auto pair = vec(4, {{"1010", 1.0}});
  CHECK(inner_product(vac, vac) == Amplitude{1.0, 0.0});
  CHECK(inner_product(vac, pair) == Amplitude{0.0, 0.0});

  const auto plus = vec(2, {{"00", testing::kInvSqrt2}, {"11", testing::kInvSqrt2}});
  const auto minus = vec(2, {{"00", testing::kInvSqrt2}, {"11", -testing::kInvSqrt2}});
  CHECK(std::abs(inner_product(plus, minus)) < 1e-15);

  CHECK_THROWS_AS(inner_product(vac, plus), std::invalid_argument);
}

TEST_CASE("opposite parities give exactly zero inner product") {
  const auto even = vec(4, {{"0000", 0.6}, {"1010", 0.8}});
  const auto odd = vec(4, {{"1000", 1.0}});
  CHECK(inner_product(even, odd) == Amplitude{0.0, 0.0});
  CHECK(inner_product(odd, even) == Amplitude{0.0, 0.0});
}

TEST_CASE("normalize") {
  const auto scaled = vec(4, {{"0000", 2.0}});
  CHECK(std::abs(scaled.normalized().amplitude(OccupationLabel::from_string("0000")) -
                 1.0) < 1e-15);

  const auto two = vec(4, {{"0000", 1.0}, {"1010", 1.0}}).normalized();
  for (const auto& [label, amp] : two.amplitudes())
    CHECK(std::abs(amp - testing::kInvSqrt2) < 1e-15);

  CHECK_THROWS_AS(FermionicVector(4, Parity::Even).normalized(), std::domain_error);
}

TEST_CASE("random-vector identities") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  const std::vector<std::string> labels{"0000", "1100", "1010", "1001",
                                        "0110", "0101", "0011", "1111"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<std::string, Amplitude>> ev, ew;
    for (const auto& l : labels) {
      ev.emplace_back(l, Amplitude{gauss(rng), gauss(rng)});
      ew.emplace_back(l, Amplitude{gauss(rng), gauss(rng)});
    }
    const auto v = vec(4, ev);
    const auto w = vec(4, ew);

    const Amplitude self = inner_product(v, v);
    CHECK(std::abs(self.imag()) < 1e-12);
    CHECK(self.real() >= 0.0);
    CHECK(self.real() == doctest::Approx(v.norm_squared()).epsilon(1e-12));

    const Amplitude vw = inner_product(v, w);
    const Amplitude wv = inner_product(w, v);
    CHECK(std::abs(vw - std::conj(wv)) < 1e-12);

    const auto unit = v.normalized();
    CHECK(unit.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const auto twice = unit.normalized();
    for (const auto& [label, amp] : unit.amplitudes())
      CHECK(std::abs(amp - twice.amplitude(label)) < 1e-12);
  }
}
