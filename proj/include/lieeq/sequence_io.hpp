#pragma once

#include <iosfwd>
#include <string>

#include "lieeq/sampling.hpp"

namespace lieeq {

// Sequence CSV, version 1:
//
//   # lieeq-sequence v1 group=A2 provenance=haar n=500 seed=42 rng=splitmix64
//   theta1,theta2
//   0.52359877559829893,4.1887902047863905
//   ...
//
// One row per class, r columns of angles in radians (any real value; read
// back canonicalized to [0, 2pi)). Values are written in shortest
// round-trip form, so write -> read is bit-exact. Keys after the version tag
// may appear in any order; group is mandatory, the rest optional.

void write_sequence_csv(std::ostream& os, const ClassSequence& seq);
std::string sequence_to_csv(const ClassSequence& seq);

/// Throws Error(ParseError) with a "line L, column C" diagnostic.
ClassSequence read_sequence_csv(std::istream& is);
ClassSequence read_sequence_file(const std::string& path);

/// Shortest decimal representation that reads back to the same double.
std::string format_double(double x);

}  // namespace lieeq
