#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "fusd/ancilla.hpp"
#include "fusd/sectors.hpp"

namespace fusd {

/// Structural problem with an instance file: missing fields, bad types,
/// malformed occupation strings.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed file describing an unphysical instance: superselection
/// violation, non-normalized vectors, bad priors.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceFile {
  DiscriminationInstance instance;
  std::optional<AncillaSpec> ancilla;
};

InstanceFile parse_instance_text(const std::string& text);
InstanceFile load_instance_file(const std::string& path);  // ParseError if unreadable

std::string serialize_instance(const InstanceFile& file);

}  // namespace fusd
