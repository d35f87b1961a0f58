#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gemforge/linker/similarity.hpp"

namespace gemforge::linker {

using CandidatePair = std::pair<std::size_t, std::size_t>;  // (left index, right index)

/// Candidate pairs, sorted and unique. A pair qualifies when the right
/// point lies in the left point's grid neighbourhood, or when any pair of
/// names shares its first `name_prefix_len` code points. The neighbourhood
/// is the 8 surrounding cells, widened in longitude where cells shrink
/// below `geo_cutoff_m` so that every pair closer than the cutoff is kept.
std::vector<CandidatePair> block(const std::vector<Entity>& left, const std::vector<Entity>& right,
                                 const LinkSpec& spec);

/// Every (i, j) pair; the reference the blocked pipeline is checked against.
std::vector<CandidatePair> all_pairs(const std::vector<Entity>& left, const std::vector<Entity>& right);

}  // namespace gemforge::linker
