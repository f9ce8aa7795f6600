#include <doctest.h>

#include <cmath>
#include <random>

#include "fusd/instance_io.hpp"
#include "fusd/oracle.hpp"
#include "helpers.hpp"

using namespace fusd;

namespace {

const std::string kValid = R"({
  "modes": 4, "split": 2, "p": 0.5, "q": 0.5,
  "psi": [{"occupation": "0000", "re": 0.7071067811865475, "im": 0.0},
          {"occupation": "1010", "re": 0.7071067811865475, "im": 0.0}],
  "phi": [{"occupation": "1100", "re": 0.7071067811865475, "im": 0.0},
          {"occupation": "1010", "re": 0.7071067811865475, "im": 0.0}]
})";

}  // namespace

TEST_CASE("parse a well-formed instance") {
  const auto file = parse_instance_text(kValid);
  CHECK(file.instance.psi.vector.modes() == 4);
  CHECK(file.instance.split.alice_modes == 2);
  CHECK(file.instance.split.bob_modes == 2);
  CHECK(file.instance.psi.prior == 0.5);
  CHECK(std::abs(file.instance.psi.vector.amplitude(
                     OccupationLabel::from_string("0000")) -
                 Amplitude{fusd::testing::kInvSqrt2, 0.0}) < 1e-15);
  CHECK_FALSE(file.ancilla.has_value());
}

TEST_CASE("parse an instance with an ancilla block") {
  std::string text = kValid;
  text.insert(text.rfind('}'),
              R"(, "ancilla": {"a_re": 0.6, "a_im": 0.0, "b_re": 0.0, "b_im": 0.8})");
  const auto file = parse_instance_text(text);
  REQUIRE(file.ancilla.has_value());
  CHECK(file.ancilla->a == Amplitude{0.6, 0.0});
  CHECK(file.ancilla->b == Amplitude{0.0, 0.8});
}

TEST_CASE("serialize / parse round trip preserves amplitudes") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    InstanceFile file{random_instance(rng), std::nullopt};
    if (trial % 3 == 0)
      file.ancilla = AncillaSpec::from_weight_and_phase(0.3, 1.1);
    const auto back = parse_instance_text(serialize_instance(file));

    CHECK(back.instance.psi.prior == doctest::Approx(file.instance.psi.prior).epsilon(1e-15));
    CHECK(back.instance.phi.prior == doctest::Approx(file.instance.phi.prior).epsilon(1e-15));
    CHECK(back.instance.split.alice_modes == file.instance.split.alice_modes);
    for (const auto& pair :
         {std::pair{&file.instance.psi.vector, &back.instance.psi.vector},
          std::pair{&file.instance.phi.vector, &back.instance.phi.vector}}) {
      CHECK(pair.second->amplitudes().size() == pair.first->amplitudes().size());
      for (const auto& [label, value] : pair.first->amplitudes())
        CHECK(std::abs(pair.second->amplitude(label) - value) < 1e-15);
    }
    CHECK(back.ancilla.has_value() == file.ancilla.has_value());
    if (file.ancilla) {
      CHECK(std::abs(back.ancilla->a - file.ancilla->a) < 1e-15);
      CHECK(std::abs(back.ancilla->b - file.ancilla->b) < 1e-15);
    }
  }
}

TEST_CASE("structural problems raise ParseError") {
  CHECK_THROWS_AS(parse_instance_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_instance_text("[1, 2]"), ParseError);

  SUBCASE("missing field") {
    std::string text = kValid;
    text.replace(text.find("\"p\""), 3, "\"x\"");
    CHECK_THROWS_AS(parse_instance_text(text), ParseError);
  }
  SUBCASE("non-numeric field") {
    std::string text = kValid;
    text.replace(text.find("0.5"), 3, "\"a\"");
    CHECK_THROWS_AS(parse_instance_text(text), ParseError);
  }
  SUBCASE("occupation string length mismatch") {
    std::string text = kValid;
    text.replace(text.find("0000"), 4, "000");
    CHECK_THROWS_AS(parse_instance_text(text), ParseError);
  }
  SUBCASE("occupation string with a bad digit") {
    std::string text = kValid;
    text.replace(text.find("0000"), 4, "00x0");
    CHECK_THROWS_AS(parse_instance_text(text), ParseError);
  }
  SUBCASE("empty state") {
    std::string text = kValid;
    const auto at = text.find("\"phi\": [");
    text.replace(at, text.rfind(']') - at + 1, "\"phi\": []");
    CHECK_THROWS_AS(parse_instance_text(text), ParseError);
  }
  SUBCASE("bad split") {
    std::string text = kValid;
    text.replace(text.find("\"split\": 2"), 10, "\"split\": 4");
    CHECK_THROWS_AS(parse_instance_text(text), ParseError);
  }
}

TEST_CASE("unphysical instances raise DomainError") {
  SUBCASE("superselection violation: mixed parity inside one state") {
    std::string text = kValid;
    text.replace(text.find("1010"), 4, "1000");
    CHECK_THROWS_AS(parse_instance_text(text), DomainError);
  }
  SUBCASE("non-normalized state") {
    std::string text = kValid;
    text.replace(text.find("0.7071067811865475"), 18, "0.9000000000000000");
    CHECK_THROWS_AS(parse_instance_text(text), DomainError);
  }
  SUBCASE("priors that do not sum to one") {
    std::string text = kValid;
    text.replace(text.find("\"q\": 0.5"), 8, "\"q\": 0.7");
    CHECK_THROWS_AS(parse_instance_text(text), DomainError);
  }
  SUBCASE("non-normalized ancilla") {
    std::string text = kValid;
    text.insert(text.rfind('}'),
                R"(, "ancilla": {"a_re": 1.0, "a_im": 0.0, "b_re": 1.0, "b_im": 0.0})");
    CHECK_THROWS_AS(parse_instance_text(text), DomainError);
  }
}

TEST_CASE("file loading") {
  CHECK_THROWS_AS(load_instance_file("/nonexistent/path.json"), ParseError);
}
