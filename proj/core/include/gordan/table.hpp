#pragma once

#include <string>

#include "gordan/generator_set.hpp"

namespace gordan {

/// Degree x order count matrix in the classical layout, one row per degree
/// with per-row count and cumulative columns, plus a totals line:
///
///   d/o: 0 1 2 3 4 5 6 | # | cum
///   1: - - - 1 1 - - | 2 | 2
///   ...
///   tot: 20 16 11 8 5 2 1 | 63
std::string render_table(const GeneratorSet& g);

}  // namespace gordan
