#pragma once

// Lattice-wide scans. Every kernel has a serial reference path, kept for
// testing and benchmarking, and an OpenMP path. Both produce identical
// results in lexicographic exponent order.

#include "gwlp/design.hpp"

#include <vector>

namespace gwlp {

enum class Execution { serial, parallel };

/// Level counts of every exponent of the design, indexed by lattice_index.
std::vector<LevelCounts> level_count_table(const Fraction& fraction, Execution exec = Execution::parallel);

}  // namespace gwlp
