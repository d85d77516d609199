#pragma once

#include <span>
#include <string>
#include <vector>

#include "mnsd/filters.hpp"
#include "mnsd/typevec.hpp"

namespace mnsd {

// Every type vector satisfying the structural constraints for a maximally
// non-self-dual modular category of odd FP dimension N:
//   (a) sum of n_i d_i^2 = N
//   (b) d_1 = 1, all d_i odd and strictly ascending
//   (c) n_i even and >= 2 for i >= 2
//   (d) n_1 >= 1 and n_1 | N
// Output in canonical order (ascending rank, then lexicographic).
// Throws InvalidInput for N = 0 or N even.
std::vector<TypeVector> enumerate_raw(u64 dimension);

// Raw candidates split by an ordered filter set. Every applicable filter is
// evaluated; a candidate with at least one reject goes to rejections with
// all rejecting verdicts retained. Candidates with only inconclusive
// verdicts stay among the survivors here (the pipeline separates them).
struct EnumerationPartition {
    std::vector<TypeVector> survivors;
    std::vector<RejectedCandidate> rejections;
};

// Filter ids must name catalog entries; unknown ids raise ConfigError.
EnumerationPartition enumerate_with(u64 dimension, std::span<const std::string> filter_ids,
                                    const FilterContext& ctx);

} // namespace mnsd
