#pragma once

#include <cstdint>
#include <vector>

#include "qcf/corpus.hpp"

namespace qcf {

// Deterministic parameter points for an entry: preferred points first, then
// admissible pseudo-random draws, `samples` points in total. Entries without
// parameters always get exactly one (empty) point. The stream depends only on
// (entry id, seed), never on platform or thread schedule.
std::vector<Params> sample_points(const Entry& e, int samples, std::uint64_t seed);

}  // namespace qcf
