#pragma once

#include <string>

#include "fqg/quantum_group.hpp"

namespace fqg {

/// Malformed input (bad JSON, bad indices, missing fields). Distinct from
/// ValidationError so the CLI can map them to different exit codes.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Parse a quantum group from its JSON description and validate it.
QGPtr parse_quantum_group(const std::string& json_text);
QGPtr load_quantum_group(const std::string& path);

/// Canonical JSON serialization (sorted sparse entries, zeros omitted,
/// complex numbers as [re, im]).
std::string write_quantum_group(const QuantumGroup& qg);
void save_quantum_group(const QuantumGroup& qg, const std::string& path);

}  // namespace fqg
