#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "mnsd/arith.hpp"
#include "mnsd/typevec.hpp"
#include "mnsd/verdict.hpp"

namespace mnsd {

struct RejectedCandidate {
    TypeVector type;
    std::vector<FilterVerdict> verdicts; // at least one reject

    friend bool operator==(const RejectedCandidate&, const RejectedCandidate&) = default;
};

struct UnresolvedCandidate {
    TypeVector type;
    std::vector<FilterVerdict> verdicts; // inconclusive, no reject anywhere

    friend bool operator==(const UnresolvedCandidate&, const UnresolvedCandidate&) = default;
};

// Full outcome of classifying one dimension: the raw candidates split into
// survivors, rejections (with the verdicts that killed them) and unresolved
// candidates, all in canonical type order.
struct ClassificationReport {
    u64 dimension = 0;
    arith::FactoredInt factorization;
    Mode mode = Mode::full;
    F2Mode f2_mode = F2Mode::legacy;
    u64 raw_count = 0;
    std::vector<TypeVector> survivors;
    std::vector<RejectedCandidate> rejections;
    std::vector<UnresolvedCandidate> unresolved;
    std::chrono::microseconds elapsed{0};
    std::string engine_version;

    // Everything except the wall-clock field.
    bool same_outcome(const ClassificationReport& other) const;
};

// Set difference between an engine report and the shipped reference table
// for the matching stage. Both lists empty iff exact agreement.
enum class ReferenceStage { prefilter, final };

std::string_view to_string(ReferenceStage s);

struct DiscrepancyReport {
    u64 dimension = 0;
    ReferenceStage stage = ReferenceStage::final;
    std::vector<TypeVector> missing_from_engine;
    std::vector<TypeVector> extra_in_engine;

    bool empty() const { return missing_from_engine.empty() && extra_in_engine.empty(); }
};

} // namespace mnsd
