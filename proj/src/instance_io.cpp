#include "fusd/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fusd/tolerances.hpp"

namespace fusd {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ParseError("missing or non-numeric field '" + key + "'");
  return j[key].get<double>();
}

FermionicVector parse_state(const json& j, const std::string& key, int modes) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError("missing or non-array field '" + key + "'");
  std::vector<std::pair<std::string, Amplitude>> entries;
  int index = 0;
  for (const auto& term : j[key]) {
    const std::string where = key + "[" + std::to_string(index++) + "]";
    if (!term.is_object() || !term.contains("occupation") || !term["occupation"].is_string())
      throw ParseError(where + ": expected {occupation, re, im}");
    const auto occ = term["occupation"].get<std::string>();
    if (static_cast<int>(occ.size()) != modes)
      throw ParseError(where + ": occupation string '" + occ + "' does not have " +
                       std::to_string(modes) + " modes");
    if (occ.find_first_not_of("01") != std::string::npos)
      throw ParseError(where + ": occupation string may contain only '0' and '1'");
    entries.emplace_back(occ, Amplitude{require_number(term, "re"), require_number(term, "im")});
  }
  if (entries.empty()) throw ParseError("state '" + key + "' has no amplitudes");
  try {
    return FermionicVector::from_amplitudes(modes, entries);
  } catch (const std::invalid_argument& e) {
    throw DomainError(key + ": " + e.what());
  }
}

}  // namespace

InstanceFile parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance file must be a JSON object");

  const int modes = static_cast<int>(require_number(j, "modes"));
  const int split = static_cast<int>(require_number(j, "split"));
  const double p = require_number(j, "p");
  const double q = require_number(j, "q");
  if (modes < 2) throw ParseError("need at least two modes");
  if (split < 1 || split >= modes) throw ParseError("split must leave both parties a mode");

  InstanceFile file{
      {{p, parse_state(j, "psi", modes)}, {q, parse_state(j, "phi", modes)},
       {split, modes - split}},
      std::nullopt};

  if (j.contains("ancilla")) {
    const auto& a = j["ancilla"];
    if (!a.is_object()) throw ParseError("'ancilla' must be an object");
    AncillaSpec anc{{require_number(a, "a_re"), require_number(a, "a_im")},
                    {require_number(a, "b_re"), require_number(a, "b_im")}};
    try {
      anc.validate();
    } catch (const std::invalid_argument& e) {
      throw DomainError(std::string("ancilla: ") + e.what());
    }
    file.ancilla = anc;
  }

  try {
    file.instance.validate();
  } catch (const std::exception& e) {
    throw DomainError(e.what());
  }
  return file;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

std::string serialize_instance(const InstanceFile& file) {
  json j;
  j["modes"] = file.instance.psi.vector.modes();
  j["split"] = file.instance.split.alice_modes;
  j["p"] = file.instance.psi.prior;
  j["q"] = file.instance.phi.prior;
  auto dump_state = [](const FermionicVector& v) {
    json terms = json::array();
    for (const auto& [label, value] : v.amplitudes())
      terms.push_back({{"occupation", label.to_string()},
                       {"re", value.real()},
                       {"im", value.imag()}});
    return terms;
  };
  j["psi"] = dump_state(file.instance.psi.vector);
  j["phi"] = dump_state(file.instance.phi.vector);
  if (file.ancilla) {
    j["ancilla"] = {{"a_re", file.ancilla->a.real()},
                    {"a_im", file.ancilla->a.imag()},
                    {"b_re", file.ancilla->b.real()},
                    {"b_im", file.ancilla->b.imag()}};
  }
  return j.dump(2) + "\n";
}

}  // namespace fusd
