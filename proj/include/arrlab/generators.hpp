#pragma once

#include <cstdint>
#include <string>

#include "arrlab/arrangement.hpp"

namespace arrlab {

/// Deterministic arrangement families for tests and experiments.
struct GeneratorSpec {
  enum class Family { Boolean, Braid, ThreeLines, Random };
  Family family = Family::Boolean;
  int count = 0;        // boolean: dimension; braid: n; random: number of hyperplanes
  int dim = 0;          // random only
  uint64_t seed = 0;    // random only
  long long range = 5;  // random only: integer coordinates in [-range, range]
};

/// Grammar: "boolean:D", "braid:N", "threelines", "random:M:D:SEED[:RANGE]".
GeneratorSpec parse_generator_spec(const std::string& text);

std::string spec_name(const GeneratorSpec& spec);

Arrangement generate(const GeneratorSpec& spec);

}  // namespace arrlab
